#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tgcover/compression.hpp"

namespace tgcover {

bool CompressionContext::in_prior_flexible(Vertex v, Timestamp t) const {
    if (!is_flexible(v)) return false;
    if (v == new_vertex) return true;
    return prior_cover.active(v, t);
}

CompressionContext derive_context(const TemporalGraph& graph, Vertex new_vertex,
                                  const TemporalAssignment& prior_cover, int budget) {
    const Timestamp horizon = graph.horizon();
    const std::size_t n = graph.num_vertices();
    if (!graph.has_vertex(new_vertex)) throw std::invalid_argument("unknown new vertex");
    if (horizon < 3 || !graph.timestamp_edgeless(1) || !graph.timestamp_edgeless(horizon)) {
        throw std::invalid_argument("context graph needs edgeless timestamps 1 and T (T >= 3)");
    }
    if (prior_cover.num_vertices() != n) {
        throw std::invalid_argument("prior cover has the wrong vertex count");
    }
    if (prior_cover.has(new_vertex)) {
        throw std::invalid_argument("prior cover must not assign the new vertex");
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto& part = prior_cover[static_cast<Vertex>(v)];
        if (static_cast<Vertex>(v) == new_vertex) continue;
        if (!part) throw std::invalid_argument("prior cover misses base vertex " + graph.name(static_cast<Vertex>(v)));
        if (part->hi > horizon) throw std::invalid_argument("prior cover leaves the time domain");
    }
    for (const auto& e : graph.edges()) {
        if (e.u == new_vertex || e.v == new_vertex) continue;
        if (!prior_cover.active(e.u, e.t) && !prior_cover.active(e.v, e.t)) {
            throw std::invalid_argument("prior cover does not cover G - {w}");
        }
    }
    if (total_span(prior_cover) > budget) {
        throw std::invalid_argument("prior cover exceeds the budget");
    }

    CompressionContext ctx;
    ctx.graph = graph;
    ctx.new_vertex = new_vertex;
    ctx.prior_cover = prior_cover;
    ctx.budget = budget;
    ctx.in_flexible.assign(n, 0);
    ctx.is_anchor_time.assign(static_cast<std::size_t>(horizon) + 1, 0);
    ctx.rigid_time.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = static_cast<Vertex>(i);
        if (v == new_vertex || span_of(prior_cover, v) > 0) {
            ctx.in_flexible[v] = 1;
            ctx.flexible.push_back(v);
            if (v == new_vertex) continue;
            for (Timestamp t = prior_cover[v]->lo; t <= prior_cover[v]->hi; ++t) {
                ctx.is_anchor_time[t] = 1;
            }
        } else {
            ctx.rigid.push_back(v);
            // Singleton at t; a dummy timestamp covers nothing, so move it to 2.
            Timestamp t = prior_cover[v]->lo;
            if (t == 1 || t == horizon) t = 2;
            ctx.rigid_time[v] = t;
        }
    }
    for (Timestamp t = 1; t <= horizon; ++t) {
        if (ctx.is_anchor_time[t]) ctx.anchor_times.push_back(t);
    }
    return ctx;
}

ContextAudit audit_context(const CompressionContext& ctx) {
    ContextAudit audit;
    const int k = ctx.budget;
    audit.anchor_bound = static_cast<int>(ctx.anchor_times.size()) <= 2 * k;
    audit.flexible_bound = static_cast<int>(ctx.flexible.size()) - 1 <= k;
    const Timestamp horizon = ctx.graph.horizon();
    for (Vertex v : ctx.rigid) {
        const Timestamp t = ctx.rigid_time[v];
        if (t < 2 || t > horizon - 1) audit.rigid_span_zero = false;
    }
    for (const auto& e : ctx.graph.edges()) {
        if (e.u == ctx.new_vertex || e.v == ctx.new_vertex) continue;
        const bool by_flexible = ctx.in_prior_flexible(e.u, e.t) || ctx.in_prior_flexible(e.v, e.t);
        const bool by_rigid = (!ctx.is_flexible(e.u) && ctx.rigid_time[e.u] == e.t) ||
                              (!ctx.is_flexible(e.v) && ctx.rigid_time[e.v] == e.t);
        if (!by_flexible && !by_rigid) audit.residual_covered = false;
    }
    return audit;
}

FeasibleAssignment make_feasible_assignment(const CompressionContext& ctx,
                                            TemporalAssignment assignment) {
    if (assignment.num_vertices() != ctx.graph.num_vertices()) {
        throw std::invalid_argument("assignment has the wrong vertex count");
    }
    FeasibleAssignment x;
    for (Vertex v : ctx.flexible) {
        (assignment.has(v) ? x.fixed : x.dropped).push_back(v);
    }
    x.assignment = std::move(assignment);
    return x;
}

bool is_feasible(const CompressionContext& ctx, const TemporalAssignment& assignment) {
    const TemporalGraph& g = ctx.graph;
    const Vertex w = ctx.new_vertex;
    if (assignment.num_vertices() != g.num_vertices()) return false;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        const Vertex v = static_cast<Vertex>(i);
        const auto& part = assignment[v];
        if (!part) continue;
        if (!ctx.is_flexible(v) || part->lo < 1 || part->hi > g.horizon()) return false;
    }
    if (total_span(assignment) > ctx.budget) return false;
    if (!assignment.has(w)) return false;
    for (const auto& e : g.edges()) {
        if (!ctx.is_flexible(e.u) || !ctx.is_flexible(e.v)) continue;
        if (!assignment.active(e.u, e.t) && !assignment.active(e.v, e.t)) return false;
    }
    for (Vertex v : ctx.flexible) {
        if (v == w || !assignment.has(v)) continue;
        const Interval part = *assignment[v];
        bool meets_anchor = false;
        for (Timestamp t = part.lo; t <= part.hi && !meets_anchor; ++t) {
            meets_anchor = ctx.is_anchor(t);
        }
        if (meets_anchor) continue;
        bool covers_w_edge = false;
        for (const auto& inc : g.incident(v)) {
            if (inc.other == w && part.contains(inc.t) && !assignment.active(w, inc.t)) {
                covers_w_edge = true;
                break;
            }
        }
        if (!covers_w_edge) return false;
    }
    return true;
}

namespace {

class FeasibleEnumerator {
public:
    FeasibleEnumerator(const CompressionContext& ctx,
                       const std::function<bool(const FeasibleAssignment&)>& visit)
        : ctx_(ctx), visit_(visit), current_(ctx.graph.num_vertices()) {
        for (Vertex v : ctx.flexible) {
            if (v != ctx.new_vertex) others_.push_back(v);
        }
    }

    void run() {
        const Timestamp horizon = ctx_.graph.horizon();
        const int k = ctx_.budget;
        const Vertex w = ctx_.new_vertex;
        // Step 1: every non-empty w interval of span at most k.
        for (Timestamp lo = 1; lo <= horizon && !stopped_; ++lo) {
            for (Timestamp hi = lo; hi <= horizon && hi - lo <= k && !stopped_; ++hi) {
                current_ = TemporalAssignment(ctx_.graph.num_vertices());
                current_.set(w, {lo, hi});
                // Step 2: uncovered w edges force their other endpoint.
                lowest_.assign(ctx_.graph.num_vertices(), 0);
                highest_.assign(ctx_.graph.num_vertices(), 0);
                for (const auto& inc : ctx_.graph.incident(w)) {
                    if (!ctx_.is_flexible(inc.other) || current_.active(w, inc.t)) continue;
                    force(inc.other, inc.t);
                }
                choose_anchor(0, hi - lo);
            }
        }
    }

private:
    void force(Vertex v, Timestamp t) {
        if (lowest_[v] == 0 || t < lowest_[v]) lowest_[v] = t;
        if (highest_[v] == 0 || t > highest_[v]) highest_[v] = t;
    }

    // Step 3: a vertex with nothing forced takes no vertex or one anchor time.
    void choose_anchor(std::size_t index, int used) {
        if (stopped_) return;
        if (index == others_.size()) {
            int least = used;
            for (Vertex v : others_) {
                if (lowest_[v] != 0) least += highest_[v] - lowest_[v];
            }
            // Step 4 would abort or exceed the budget.
            if (least > ctx_.budget) return;
            extend(0, used, least);
            return;
        }
        const Vertex v = others_[index];
        if (lowest_[v] != 0) {
            choose_anchor(index + 1, used);
            return;
        }
        choose_anchor(index + 1, used);
        for (Timestamp t : ctx_.anchor_times) {
            lowest_[v] = highest_[v] = t;
            choose_anchor(index + 1, used);
            lowest_[v] = highest_[v] = 0;
            if (stopped_) return;
        }
    }

    // Step 4: every interval of span at most k around the chosen vertices.
    // `least` is the span already committed plus the minimum still to come.
    void extend(std::size_t index, int used, int least) {
        if (stopped_) return;
        if (index == others_.size()) {
            emit();
            return;
        }
        const Vertex v = others_[index];
        if (lowest_[v] == 0) {
            extend(index + 1, used, least);
            return;
        }
        const Timestamp horizon = ctx_.graph.horizon();
        const int minimum = highest_[v] - lowest_[v];
        const int slack = std::min(ctx_.budget, ctx_.budget - least + minimum);
        for (Timestamp lo = std::max(1, highest_[v] - slack); lo <= lowest_[v]; ++lo) {
            for (Timestamp hi = highest_[v]; hi <= horizon && hi - lo <= slack; ++hi) {
                current_.set(v, {lo, hi});
                extend(index + 1, used + (hi - lo), least - minimum + (hi - lo));
                if (stopped_) break;
            }
            if (stopped_) break;
        }
        current_.clear(v);
    }

    void emit() {
        if (!is_feasible(ctx_, current_)) return;
        if (!seen_.insert(current_).second) return;
        if (!visit_(make_feasible_assignment(ctx_, current_))) stopped_ = true;
    }

    const CompressionContext& ctx_;
    const std::function<bool(const FeasibleAssignment&)>& visit_;
    std::vector<Vertex> others_;
    TemporalAssignment current_;
    std::vector<Timestamp> lowest_;
    std::vector<Timestamp> highest_;
    std::set<TemporalAssignment> seen_;
    bool stopped_ = false;
};

}  // namespace

void enumerate_feasible_assignments(const CompressionContext& ctx,
                                    const std::function<bool(const FeasibleAssignment&)>& visit) {
    FeasibleEnumerator(ctx, visit).run();
}

std::vector<FeasibleAssignment> feasible_assignments(const CompressionContext& ctx) {
    std::vector<FeasibleAssignment> out;
    enumerate_feasible_assignments(ctx, [&](const FeasibleAssignment& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

bool agrees_with(const TemporalAssignment& cover, const FeasibleAssignment& x,
                 const CompressionContext& ctx) {
    if (cover.num_vertices() != ctx.graph.num_vertices()) return false;
    for (Vertex v : x.fixed) {
        if (cover[v] != x.assignment[v]) return false;
    }
    for (Vertex v : x.dropped) {
        for (const auto& inc : ctx.graph.incident(v)) {
            if (!ctx.is_anchor(inc.t) || ctx.is_flexible(inc.other)) continue;
            if (!cover.active(inc.other, inc.t)) return false;
        }
    }
    return true;
}

}  // namespace tgcover
