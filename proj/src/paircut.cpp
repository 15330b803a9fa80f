#include "tgcover/paircut.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace tgcover::paircut {

Node Digraph::add_node() {
    out_.emplace_back();
    return static_cast<Node>(out_.size() - 1);
}

std::size_t Digraph::add_arc(Node tail, Node head) {
    if (!has_node(tail) || !has_node(head)) {
        throw std::invalid_argument("arc references a missing node");
    }
    if (auto existing = find_arc(tail, head)) return *existing;
    arcs_.push_back({tail, head});
    out_[tail].push_back(arcs_.size() - 1);
    return arcs_.size() - 1;
}

std::optional<std::size_t> Digraph::find_arc(Node tail, Node head) const {
    if (!has_node(tail)) return std::nullopt;
    for (std::size_t index : out_[tail]) {
        if (arcs_[index].head == head) return index;
    }
    return std::nullopt;
}

NodePair make_pair(Node a, Node b) {
    if (a == b) {
        throw std::invalid_argument("forbidden pair {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} is not a pair");
    }
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

namespace {

void validate_common(const Digraph& digraph, Node source, const std::vector<NodePair>& pairs,
                     int budget) {
    if (!digraph.has_node(source)) throw std::invalid_argument("source is not a node");
    if (budget < 0) throw std::invalid_argument("negative budget");
    std::set<NodePair> seen;
    for (const auto& p : pairs) {
        if (!digraph.has_node(p.first) || !digraph.has_node(p.second)) {
            throw std::invalid_argument("pair references a missing node");
        }
        if (p.first >= p.second) throw std::invalid_argument("malformed pair");
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate pair");
    }
}

bool pairs_separated(const std::vector<NodePair>& pairs, const Mask& reach) {
    return std::none_of(pairs.begin(), pairs.end(), [&](const NodePair& p) {
        return reach[p.first] && reach[p.second];
    });
}

}  // namespace

void validate(const CdpcInstance& instance) {
    validate_common(instance.digraph, instance.source, instance.pairs, instance.budget);
    if (instance.deletable.size() != instance.digraph.num_arcs()) {
        throw std::invalid_argument("deletable mask does not match the arc count");
    }
}

void validate(const VdpcInstance& instance) {
    validate_common(instance.digraph, instance.source, instance.pairs, instance.budget);
}

Mask reachable_from_source(const Digraph& digraph, Node source,
                           std::span<const std::uint8_t> removed_nodes,
                           std::span<const std::uint8_t> removed_arcs) {
    Mask reach(digraph.num_nodes(), 0);
    auto node_removed = [&](Node v) { return !removed_nodes.empty() && removed_nodes[v]; };
    if (node_removed(source)) return reach;
    std::vector<Node> stack{source};
    reach[source] = 1;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        for (std::size_t index : digraph.out_arcs(u)) {
            if (!removed_arcs.empty() && removed_arcs[index]) continue;
            Node v = digraph.arc(index).head;
            if (reach[v] || node_removed(v)) continue;
            reach[v] = 1;
            stack.push_back(v);
        }
    }
    return reach;
}

Mask reachable_without_nodes(const Digraph& digraph, Node source, std::span<const Node> removed) {
    Mask mask(digraph.num_nodes(), 0);
    for (Node v : removed) mask.at(static_cast<std::size_t>(v)) = 1;
    return reachable_from_source(digraph, source, mask, {});
}

Mask reachable_without_arcs(const Digraph& digraph, Node source, std::span<const Arc> removed) {
    Mask mask(digraph.num_arcs(), 0);
    for (const Arc& a : removed) {
        if (auto index = digraph.find_arc(a.tail, a.head)) mask[*index] = 1;
    }
    return reachable_from_source(digraph, source, {}, mask);
}

bool is_cdpc_solution(const CdpcInstance& instance, std::span<const Arc> cut) {
    if (static_cast<int>(cut.size()) > instance.budget) return false;
    Mask removed(instance.digraph.num_arcs(), 0);
    for (const Arc& a : cut) {
        auto index = instance.digraph.find_arc(a.tail, a.head);
        if (!index || !instance.deletable[*index] || removed[*index]) return false;
        removed[*index] = 1;
    }
    auto reach = reachable_from_source(instance.digraph, instance.source, {}, removed);
    return pairs_separated(instance.pairs, reach);
}

bool is_vdpc_solution(const VdpcInstance& instance, std::span<const Node> cut) {
    if (static_cast<int>(cut.size()) > instance.budget) return false;
    Mask removed(instance.digraph.num_nodes(), 0);
    for (Node v : cut) {
        if (!instance.digraph.has_node(v) || v == instance.source || removed[v]) return false;
        removed[v] = 1;
    }
    auto reach = reachable_from_source(instance.digraph, instance.source, removed, {});
    return pairs_separated(instance.pairs, reach);
}

VdpcReduction cdpc_to_vdpc(const CdpcInstance& instance) {
    validate(instance);
    const Digraph& original = instance.digraph;
    const std::size_t copies_per_node = static_cast<std::size_t>(instance.budget) + 1;

    VdpcReduction out;
    Digraph& reduced = out.instance.digraph;
    out.copies.resize(original.num_nodes());
    for (std::size_t u = 0; u < original.num_nodes(); ++u) {
        for (std::size_t i = 0; i < copies_per_node; ++i) out.copies[u].push_back(reduced.add_node());
    }
    const Node new_source = reduced.add_node();
    for (Node copy : out.copies[instance.source]) reduced.add_arc(new_source, copy);

    std::vector<std::pair<Node, std::size_t>> mids;  // (mid node, original arc)
    for (std::size_t index = 0; index < original.num_arcs(); ++index) {
        const Arc& a = original.arc(index);
        const std::size_t mid_count = instance.deletable[index] ? 1 : copies_per_node;
        for (std::size_t l = 0; l < mid_count; ++l) {
            Node mid = reduced.add_node();
            for (Node tail_copy : out.copies[a.tail]) reduced.add_arc(tail_copy, mid);
            for (Node head_copy : out.copies[a.head]) reduced.add_arc(mid, head_copy);
            if (instance.deletable[index]) mids.emplace_back(mid, index);
        }
    }
    out.arc_of_node.assign(reduced.num_nodes(), std::nullopt);
    for (auto [mid, index] : mids) out.arc_of_node[mid] = index;

    for (const auto& p : instance.pairs) {
        for (Node a : out.copies[p.first]) {
            for (Node b : out.copies[p.second]) out.instance.pairs.push_back(make_pair(a, b));
        }
    }
    std::sort(out.instance.pairs.begin(), out.instance.pairs.end());
    out.instance.source = new_source;
    out.instance.budget = instance.budget;
    return out;
}

namespace {

/// Unit-capacity node-split flow network used to find minimum node cuts
/// between the source and a terminal set.
class NodeCutFlow {
public:
    NodeCutFlow(const Digraph& digraph, Node source) : digraph_(digraph), source_(source) {}

    /// Minimum node cut separating `terminals` from the source, closest to the
    /// source. Terminals themselves may be cut; the source may not. Returns
    /// nullopt once the cut is known to exceed `limit`.
    std::optional<std::vector<Node>> closest_min_cut(const std::vector<Node>& terminals, int limit) {
        build(terminals);
        int flow = 0;
        while (augment()) {
            if (++flow > limit) return std::nullopt;
        }
        // residual reachability from the source defines the closest cut
        const std::vector<std::uint8_t> side = residual_side();
        std::vector<Node> cut;
        for (std::size_t v = 0; v < digraph_.num_nodes(); ++v) {
            if (static_cast<Node>(v) == source_) continue;
            if (side[in(static_cast<Node>(v))] && !side[out(static_cast<Node>(v))]) {
                cut.push_back(static_cast<Node>(v));
            }
        }
        return cut;
    }

private:
    static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

    int in(Node v) const { return 2 * v; }
    int out(Node v) const { return 2 * v + 1; }
    int sink() const { return static_cast<int>(2 * digraph_.num_nodes()); }

    void add_edge(int from, int to, int capacity) {
        to_.push_back(to);
        cap_.push_back(capacity);
        head_[from].push_back(static_cast<int>(to_.size() - 1));
        to_.push_back(from);
        cap_.push_back(0);
        head_[to].push_back(static_cast<int>(to_.size() - 1));
    }

    void build(const std::vector<Node>& terminals) {
        to_.clear();
        cap_.clear();
        head_.assign(2 * digraph_.num_nodes() + 1, {});
        for (std::size_t v = 0; v < digraph_.num_nodes(); ++v) {
            const Node node = static_cast<Node>(v);
            add_edge(in(node), out(node), node == source_ ? kInfinite : 1);
        }
        for (const Arc& a : digraph_.arcs()) add_edge(out(a.tail), in(a.head), kInfinite);
        for (Node t : terminals) add_edge(out(t), sink(), kInfinite);
    }

    bool augment() {
        std::vector<int> parent_edge(head_.size(), -1);
        std::vector<std::uint8_t> seen(head_.size(), 0);
        std::vector<int> queue{out(source_)};
        seen[out(source_)] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int e : head_[u]) {
                int v = to_[e];
                if (seen[v] || cap_[e] == 0) continue;
                seen[v] = 1;
                parent_edge[v] = e;
                if (v == sink()) {
                    // every source-sink path crosses a unit node edge
                    for (int x = sink(); x != out(source_); x = to_[parent_edge[x] ^ 1]) {
                        cap_[parent_edge[x]] -= 1;
                        cap_[parent_edge[x] ^ 1] += 1;
                    }
                    return true;
                }
                queue.push_back(v);
            }
        }
        return false;
    }

    std::vector<std::uint8_t> residual_side() const {
        std::vector<std::uint8_t> seen(head_.size(), 0);
        std::vector<int> stack{out(source_)};
        seen[out(source_)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : head_[u]) {
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
            }
        }
        return seen;
    }

    const Digraph& digraph_;
    Node source_;
    std::vector<std::vector<int>> head_;
    std::vector<int> to_;
    std::vector<int> cap_;
};

class VdpcBrancher {
public:
    explicit VdpcBrancher(const VdpcInstance& instance)
        : instance_(instance), flow_(instance.digraph, instance.source) {}

    std::optional<std::vector<Node>> run() {
        std::vector<Node> terminals;
        return branch(terminals);
    }

private:
    std::optional<std::vector<Node>> branch(std::vector<Node>& terminals) {
        auto cut = flow_.closest_min_cut(terminals, instance_.budget);
        if (!cut) return std::nullopt;
        auto reach = reachable_without_nodes(instance_.digraph, instance_.source, *cut);
        auto open = std::find_if(instance_.pairs.begin(), instance_.pairs.end(),
                                 [&](const NodePair& p) { return reach[p.first] && reach[p.second]; });
        if (open == instance_.pairs.end()) return cut;
        for (Node endpoint : {open->first, open->second}) {
            if (endpoint == instance_.source) continue;
            terminals.push_back(endpoint);
            auto found = branch(terminals);
            terminals.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    }

    const VdpcInstance& instance_;
    NodeCutFlow flow_;
};

}  // namespace

std::optional<std::vector<Node>> solve_vdpc(const VdpcInstance& instance) {
    validate(instance);
    auto found = VdpcBrancher(instance).run();
    if (!found) return std::nullopt;
    std::vector<Node> cut = std::move(*found);
    std::sort(cut.begin(), cut.end());
    // drop nodes whose deletion is not needed
    for (std::size_t i = 0; i < cut.size();) {
        std::vector<Node> without = cut;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_vdpc_solution(instance, without)) {
            cut = std::move(without);
        } else {
            ++i;
        }
    }
    if (!is_vdpc_solution(instance, cut)) {
        throw std::logic_error("solve_vdpc produced an invalid cut");
    }
    return cut;
}

std::optional<std::vector<Arc>> solve_cdpc(const CdpcInstance& instance) {
    const VdpcReduction reduction = cdpc_to_vdpc(instance);
    auto removed = solve_vdpc(reduction.instance);
    if (!removed) return std::nullopt;
    std::vector<Arc> cut;
    for (Node v : *removed) {
        if (const auto& index = reduction.arc_of_node[v]) cut.push_back(instance.digraph.arc(*index));
    }
    std::sort(cut.begin(), cut.end());
    if (!is_cdpc_solution(instance, cut)) {
        throw std::logic_error("solve_cdpc: mapped cut is not a solution");
    }
    return cut;
}

}  // namespace tgcover::paircut
