#include "tgcover/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tgcover::oracle {

namespace {

class CoverSearch {
public:
    CoverSearch(const TemporalGraph& graph, std::optional<int> budget)
        : graph_(graph), current_(graph.num_vertices()), bound_(budget.value_or(-1)),
          has_budget_(budget.has_value()) {
        order_.resize(graph.num_vertices());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return graph.incident(a).size() > graph.incident(b).size();
        });
        position_.assign(graph.num_vertices(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    }

    std::optional<CoverResult> run() {
        if (has_budget_ && bound_ < 0) return std::nullopt;
        descend(0, 0);
        if (!best_) return std::nullopt;
        return CoverResult{TemporalCover::verified(graph_, *best_), best_span_};
    }

private:
    bool within_bound(int span) const {
        if (best_ && span > best_span_) return false;
        if (has_budget_ && span > bound_) return false;
        return true;
    }

    // Edges from `v` to vertices placed earlier must be covered now.
    bool consistent(Vertex v, std::size_t depth) const {
        for (const auto& inc : graph_.incident(v)) {
            if (position_[inc.other] >= depth) continue;
            if (!current_.active(v, inc.t) && !current_.active(inc.other, inc.t)) return false;
        }
        return true;
    }

    void descend(std::size_t depth, int span) {
        if (depth == order_.size()) {
            if (!best_ || span < best_span_ || (span == best_span_ && current_ < *best_)) {
                best_ = current_;
                best_span_ = span;
            }
            return;
        }
        const Vertex v = order_[depth];
        const Timestamp horizon = graph_.horizon();
        for (Timestamp lo = 1; lo <= horizon; ++lo) {
            for (Timestamp hi = lo; hi <= horizon; ++hi) {
                if (!within_bound(span + (hi - lo))) break;
                current_.set(v, {lo, hi});
                if (consistent(v, depth)) descend(depth + 1, span + (hi - lo));
            }
        }
        current_.clear(v);
    }

    const TemporalGraph& graph_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    TemporalAssignment current_;
    std::optional<TemporalAssignment> best_;
    int best_span_ = 0;
    int bound_;
    bool has_budget_;
};

}  // namespace

std::optional<CoverResult> brute_force_min_cover(const TemporalGraph& graph,
                                                 std::optional<int> budget) {
    return CoverSearch(graph, budget).run();
}

void TwoSat::add_clause(Literal a, Literal b) {
    if (a.var < 0 || a.var >= num_vars_ || b.var < 0 || b.var >= num_vars_) {
        throw std::invalid_argument("2-SAT literal out of range");
    }
    // (a or b) == (!a -> b) and (!b -> a)
    implications_[node(a) ^ 1].push_back(node(b));
    implications_[node(b) ^ 1].push_back(node(a));
    clauses_.emplace_back(a, b);
}

std::optional<std::vector<bool>> TwoSat::solve() const {
    // Iterative Tarjan; components are numbered in reverse topological order.
    const int n = 2 * num_vars_;
    std::vector<int> index(n, -1), low(n, 0), component(n, -1);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    int components = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [u, next] = call.back();
            if (next == 0 && index[u] == -1) {
                index[u] = low[u] = counter++;
                stack.push_back(u);
                on_stack[u] = 1;
            }
            if (next < implications_[u].size()) {
                int v = implications_[u][next++];
                if (index[v] == -1) {
                    call.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component[w] = components;
                } while (w != u);
                ++components;
            }
            const int finished = u;
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    std::vector<bool> model(num_vars_);
    for (int var = 0; var < num_vars_; ++var) {
        if (component[2 * var] == component[2 * var + 1]) return std::nullopt;
        model[var] = component[2 * var] < component[2 * var + 1];
    }
    return model;
}

ZeroSpanEncoding encode_zero_span(const TemporalGraph& graph) {
    ZeroSpanEncoding enc;
    enc.var_of.resize(graph.num_vertices());
    int vars = 0;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        std::vector<Timestamp> times;
        for (const auto& inc : graph.incident(static_cast<Vertex>(v))) times.push_back(inc.t);
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        for (Timestamp t : times) enc.var_of[v].emplace_back(t, vars++);
    }
    auto var = [&](Vertex v, Timestamp t) {
        const auto& list = enc.var_of[v];
        auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(t, -1));
        return it->second;
    };
    enc.formula = TwoSat(vars);
    for (const auto& e : graph.edges()) {
        enc.formula.add_clause({var(e.u, e.t), true}, {var(e.v, e.t), true});
    }
    for (const auto& list : enc.var_of) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                enc.formula.add_clause({list[i].second, false}, {list[j].second, false});
            }
        }
    }
    return enc;
}

std::optional<TemporalCover> zero_span_decider(const TemporalGraph& graph) {
    const ZeroSpanEncoding enc = encode_zero_span(graph);
    auto model = enc.formula.solve();
    if (!model) return std::nullopt;
    TemporalAssignment assignment(graph.num_vertices());
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        Timestamp chosen = 1;
        for (auto [t, var] : enc.var_of[v]) {
            if ((*model)[var]) chosen = t;
        }
        assignment.set(static_cast<Vertex>(v), {chosen, chosen});
    }
    return TemporalCover::verified(graph, std::move(assignment));
}

namespace {

// Visits k-subsets of [0, n) in lexicographic order until `visit` returns true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> chosen(k);
    std::iota(chosen.begin(), chosen.end(), 0);
    if (k > n) return false;
    while (true) {
        if (visit(chosen)) return true;
        int i = k - 1;
        while (i >= 0 && chosen[i] == n - k + i) --i;
        if (i < 0) return false;
        ++chosen[i];
        for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
    }
}

}  // namespace

std::optional<std::vector<paircut::Node>> brute_force_vdpc(const paircut::VdpcInstance& instance) {
    paircut::validate(instance);
    std::vector<paircut::Node> candidates;
    for (std::size_t v = 0; v < instance.digraph.num_nodes(); ++v) {
        if (static_cast<paircut::Node>(v) != instance.source) {
            candidates.push_back(static_cast<paircut::Node>(v));
        }
    }
    const int n = static_cast<int>(candidates.size());
    std::optional<std::vector<paircut::Node>> found;
    for (int size = 0; size <= std::min(instance.budget, n) && !found; ++size) {
        for_each_subset(n, size, [&](const std::vector<int>& subset) {
            std::vector<paircut::Node> cut;
            for (int i : subset) cut.push_back(candidates[i]);
            if (!paircut::is_vdpc_solution(instance, cut)) return false;
            found = std::move(cut);
            return true;
        });
    }
    return found;
}

std::optional<std::vector<paircut::Arc>> brute_force_cdpc(const paircut::CdpcInstance& instance) {
    paircut::validate(instance);
    std::vector<paircut::Arc> candidates;
    for (std::size_t i = 0; i < instance.digraph.num_arcs(); ++i) {
        if (instance.deletable[i]) candidates.push_back(instance.digraph.arc(i));
    }
    std::sort(candidates.begin(), candidates.end());
    const int n = static_cast<int>(candidates.size());
    std::optional<std::vector<paircut::Arc>> found;
    for (int size = 0; size <= std::min(instance.budget, n) && !found; ++size) {
        for_each_subset(n, size, [&](const std::vector<int>& subset) {
            std::vector<paircut::Arc> cut;
            for (int i : subset) cut.push_back(candidates[i]);
            if (!paircut::is_cdpc_solution(instance, cut)) return false;
            found = std::move(cut);
            return true;
        });
    }
    return found;
}

}  // namespace tgcover::oracle
