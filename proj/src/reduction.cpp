#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tgcover/compression.hpp"

namespace tgcover {

using paircut::Arc;
using paircut::Node;

std::string to_string(GadgetRole role) {
    switch (role) {
        case GadgetRole::Source: return "source";
        case GadgetRole::Positive: return "positive";
        case GadgetRole::Negative: return "negative";
        case GadgetRole::Upper: return "b";
        case GadgetRole::Middle: return "c";
        case GadgetRole::Lower: return "d";
    }
    return "?";
}

std::vector<Node> Gadget::nodes() const {
    std::vector<Node> out{negative};
    for (const auto* column : {&positive, &upper, &middle, &lower}) {
        for (Node node : *column) {
            if (node >= 0) out.push_back(node);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Node GadgetMap::positive(Vertex v, Timestamp t) const {
    const Gadget* g = gadget_for(v);
    if (!g || t < 1 || t >= static_cast<Timestamp>(g->positive.size())) return -1;
    return g->positive[t];
}

Node GadgetMap::negative(Vertex v, Timestamp t) const {
    const Gadget* g = gadget_for(v);
    return g && g->pivot == t ? g->negative : -1;
}

namespace {

class InstanceBuilder {
public:
    InstanceBuilder(const CompressionContext& ctx, const FeasibleAssignment& x)
        : ctx_(ctx), x_(x), in_fixed_(ctx.graph.num_vertices(), 0),
          in_dropped_(ctx.graph.num_vertices(), 0) {
        for (Vertex v : x.fixed) in_fixed_[v] = 1;
        for (Vertex v : x.dropped) in_dropped_[v] = 1;
    }

    CdpcBuild build() {
        build_.map.source = add_node({GadgetRole::Source, -1, 0});
        build_.map.gadget_of.assign(ctx_.graph.num_vertices(), -1);
        for (std::size_t i = 0; i < ctx_.graph.num_vertices(); ++i) {
            const Vertex v = static_cast<Vertex>(i);
            if (!ctx_.is_flexible(v)) {
                add_gadget(v, ctx_.rigid_time[v]);
            } else if (in_dropped_[v]) {
                add_gadget(v, 2);
            }
        }
        check_dropped_edges();
        add_edge_constraints();
        add_forced_constraints();

        auto& inst = build_.instance;
        inst.source = build_.map.source;
        inst.deletable.assign(inst.digraph.num_arcs(), false);
        for (std::size_t index : deletable_) inst.deletable[index] = true;
        inst.pairs.assign(pairs_.begin(), pairs_.end());
        inst.budget = ctx_.budget - x_.span();
        return std::move(build_);
    }

private:
    Node add_node(GadgetNode role) {
        build_.map.roles.push_back(role);
        return build_.instance.digraph.add_node();
    }

    void add_arc(Node tail, Node head) { build_.instance.digraph.add_arc(tail, head); }
    void add_pair(Node a, Node b) { pairs_.insert(paircut::make_pair(a, b)); }

    // Z'_S ∪ N'_S membership
    bool is_pivot(Vertex v, Timestamp t) const {
        const Gadget* g = build_.map.gadget_for(v);
        return g && g->pivot == t;
    }

    // V(Z_S) ∪ (V(N_S) \ N''_S)
    bool is_free(Vertex v, Timestamp t) const {
        return !ctx_.is_flexible(v) || (in_dropped_[v] && !ctx_.is_anchor(t));
    }

    // (V(M_S) \ X) ∪ N''_S
    bool is_excluded(Vertex v, Timestamp t) const {
        if (in_fixed_[v]) return !x_.assignment.active(v, t);
        return in_dropped_[v] && ctx_.is_anchor(t);
    }

    void add_gadget(Vertex v, Timestamp pivot) {
        const Timestamp horizon = ctx_.graph.horizon();
        Gadget g;
        g.base = v;
        g.pivot = pivot;
        const std::size_t size = static_cast<std::size_t>(horizon) + 1;
        g.positive.assign(size, -1);
        g.upper.assign(size, -1);
        g.middle.assign(size, -1);
        g.lower.assign(size, -1);
        for (Timestamp j = 1; j <= horizon; ++j) {
            if (j == pivot) {
                g.negative = add_node({GadgetRole::Negative, v, j});
            } else {
                g.positive[j] = add_node({GadgetRole::Positive, v, j});
            }
        }
        for (Timestamp j = 1; j <= horizon; ++j) {
            if (j == pivot) continue;
            g.upper[j] = add_node({GadgetRole::Upper, v, j});
            g.middle[j] = add_node({GadgetRole::Middle, v, j});
            g.lower[j] = add_node({GadgetRole::Lower, v, j});
        }
        auto& digraph = build_.instance.digraph;
        for (Timestamp j = 1; j <= horizon; ++j) {
            if (j == pivot) continue;
            add_arc(g.positive[j], g.upper[j]);
            add_arc(g.positive[j], g.middle[j]);
            deletable_.push_back(digraph.add_arc(g.middle[j], g.lower[j]));
            add_arc(g.lower[j], g.negative);
        }
        // b paths run away from the pivot, c paths run towards it.
        for (Timestamp j = pivot - 1; j >= 2; --j) add_arc(g.upper[j], g.upper[j - 1]);
        for (Timestamp j = 1; j + 1 <= pivot - 1; ++j) add_arc(g.middle[j], g.middle[j + 1]);
        for (Timestamp j = pivot + 1; j + 1 <= horizon; ++j) add_arc(g.upper[j], g.upper[j + 1]);
        for (Timestamp j = horizon; j - 1 >= pivot + 1; --j) add_arc(g.middle[j], g.middle[j - 1]);

        for (Timestamp h = 1; h <= pivot - 1; ++h) {
            for (Timestamp j = h + 1; j <= pivot - 1; ++j) add_pair(g.lower[h], g.upper[j]);
        }
        for (Timestamp j = pivot + 1; j <= horizon; ++j) {
            for (Timestamp h = j + 1; h <= horizon; ++h) add_pair(g.lower[h], g.upper[j]);
        }
        for (Timestamp h = 1; h <= pivot - 1; ++h) {
            for (Timestamp j = pivot + 1; j <= horizon; ++j) {
                add_pair(g.middle[h], g.lower[j]);
                add_pair(g.middle[j], g.lower[h]);
            }
        }
        build_.map.gadget_of[v] = static_cast<int>(build_.map.gadgets.size());
        build_.map.gadgets.push_back(std::move(g));
    }

    // An edge from N_S to a vertex outside M_S ends in Z_S, and in Z'_S when
    // its N_S endpoint is outside the anchor timestamps.
    void check_dropped_edges() const {
        for (const auto& e : ctx_.graph.edges()) {
            for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (!in_dropped_[a] || in_fixed_[b]) continue;
                if (ctx_.is_flexible(b)) {
                    throw std::logic_error("edge between two unassigned flexible vertices");
                }
                if (!ctx_.is_anchor(e.t) && ctx_.rigid_time[b] != e.t) {
                    throw std::logic_error("edge from a dropped vertex escapes Z'_S");
                }
            }
        }
    }

    void add_edge_constraints() {
        const GadgetMap& map = build_.map;
        for (const auto& e : ctx_.graph.edges()) {
            if (!is_free(e.u, e.t) || !is_free(e.v, e.t)) continue;
            const bool u_pivot = is_pivot(e.u, e.t);
            const bool v_pivot = is_pivot(e.v, e.t);
            if (u_pivot && v_pivot) {
                add_pair(map.negative(e.u, e.t), map.negative(e.v, e.t));
            } else if (u_pivot) {
                add_arc(map.negative(e.u, e.t), map.positive(e.v, e.t));
            } else if (v_pivot) {
                add_arc(map.negative(e.v, e.t), map.positive(e.u, e.t));
            } else {
                throw std::logic_error("edge between free vertices without a pivot endpoint");
            }
        }
    }

    void add_forced_constraints() {
        const GadgetMap& map = build_.map;
        for (const auto& e : ctx_.graph.edges()) {
            for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (!is_excluded(a, e.t) || ctx_.is_flexible(b)) continue;
                if (is_pivot(b, e.t)) {
                    add_pair(map.source, map.negative(b, e.t));
                } else {
                    add_arc(map.source, map.positive(b, e.t));
                }
            }
        }
    }

    const CompressionContext& ctx_;
    const FeasibleAssignment& x_;
    std::vector<std::uint8_t> in_fixed_;
    std::vector<std::uint8_t> in_dropped_;
    CdpcBuild build_;
    std::vector<std::size_t> deletable_;
    std::set<paircut::NodePair> pairs_;
};

}  // namespace

CdpcBuild build_cdpc_instance(const CompressionContext& ctx, const FeasibleAssignment& x) {
    if (x.span() > ctx.budget) {
        throw std::invalid_argument("feasible assignment exceeds the budget");
    }
    return InstanceBuilder(ctx, x).build();
}

TemporalCover reconstruct_cover(const CompressionContext& ctx, const FeasibleAssignment& x,
                                std::span<const Arc> cut, const CdpcBuild& build) {
    if (!paircut::is_cdpc_solution(build.instance, cut)) {
        throw std::invalid_argument("arc set is not a pair-cut solution");
    }
    const auto reach = paircut::reachable_without_arcs(build.instance.digraph,
                                                       build.instance.source, cut);
    const Timestamp horizon = ctx.graph.horizon();
    TemporalAssignment cover(ctx.graph.num_vertices());
    for (Vertex v : x.fixed) cover.set(v, *x.assignment[v]);
    for (const Gadget& g : build.map.gadgets) {
        Timestamp lo = 0;
        Timestamp hi = 0;
        for (Timestamp t = 1; t <= horizon; ++t) {
            const bool active = t == g.pivot ? !reach[g.negative] : reach[g.positive[t]] != 0;
            if (!active) continue;
            if (lo == 0) lo = t;
            hi = t;
        }
        if (lo == 0) lo = hi = 2;
        cover.set(g.base, {lo, hi});
    }
    if (!is_temporal_cover(ctx.graph, cover) || total_span(cover) > ctx.budget) {
        throw std::logic_error("reconstructed assignment is not a cover within budget");
    }
    return TemporalCover::verified(ctx.graph, std::move(cover));
}

}  // namespace tgcover
