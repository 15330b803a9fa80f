#include "tgcover/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tgcover {

TemporalGraph::TemporalGraph(std::vector<std::string> names, Timestamp horizon,
                             std::vector<TemporalEdge> edges)
    : names_(std::move(names)), horizon_(horizon), edges_(std::move(edges)) {
    if (horizon_ < 1) {
        throw std::invalid_argument("horizon must be positive");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second) {
            throw std::invalid_argument("duplicate base vertex name '" + names_[i] + "'");
        }
    }
    for (auto& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v)) {
            throw std::invalid_argument("edge references an unknown base vertex");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on base vertex '" + names_[e.u] + "'");
        }
        if (e.t < 1 || e.t > horizon_) {
            throw std::invalid_argument("timestamp " + std::to_string(e.t) + " outside [1, " +
                                        std::to_string(horizon_) + "]");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
        return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
    });
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate temporal edge");
    }
    adjacency_.resize(names_.size());
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.t});
        adjacency_[e.v].push_back({e.u, e.t});
    }
}

TemporalGraph TemporalGraph::with_vertex_count(std::size_t n, Timestamp horizon,
                                               std::vector<TemporalEdge> edges) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return TemporalGraph(std::move(names), horizon, std::move(edges));
}

std::optional<Vertex> TemporalGraph::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool TemporalGraph::has_edge(Vertex u, Vertex v, Timestamp t) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& inc = adjacency_[u];
    return std::any_of(inc.begin(), inc.end(),
                       [&](const Incidence& i) { return i.other == v && i.t == t; });
}

bool TemporalGraph::timestamp_edgeless(Timestamp t) const {
    return std::none_of(edges_.begin(), edges_.end(),
                        [t](const TemporalEdge& e) { return e.t == t; });
}

void TemporalAssignment::set(Vertex v, Interval interval) {
    if (interval.lo < 1 || interval.lo > interval.hi) {
        throw std::invalid_argument("invalid interval [" + std::to_string(interval.lo) + ", " +
                                    std::to_string(interval.hi) + "]");
    }
    parts_[v] = interval;
}

int span_of(const TemporalAssignment& assignment, Vertex v) {
    const auto& part = assignment[v];
    return part ? part->span() : 0;
}

int total_span(const TemporalAssignment& assignment) {
    int total = 0;
    for (const auto& part : assignment.parts()) {
        if (part) total += part->span();
    }
    return total;
}

CoverCheck is_temporal_cover(const TemporalGraph& graph, const TemporalAssignment& assignment) {
    if (assignment.num_vertices() != graph.num_vertices()) {
        throw std::invalid_argument("assignment mentions " +
                                    std::to_string(assignment.num_vertices()) +
                                    " base vertices, graph has " +
                                    std::to_string(graph.num_vertices()));
    }
    for (const auto& part : assignment.parts()) {
        if (part && (part->lo < 1 || part->hi > graph.horizon() || part->lo > part->hi)) {
            throw std::invalid_argument("interval outside the time domain");
        }
    }
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        if (!assignment.has(static_cast<Vertex>(v))) {
            return {CoverViolation{static_cast<Vertex>(v)}};
        }
    }
    for (const auto& e : graph.edges()) {
        if (!assignment.active(e.u, e.t) && !assignment.active(e.v, e.t)) {
            return {CoverViolation{e}};
        }
    }
    return {};
}

TemporalCover TemporalCover::verified(const TemporalGraph& graph, TemporalAssignment assignment) {
    if (!is_temporal_cover(graph, assignment)) {
        throw std::invalid_argument("assignment is not a temporal cover");
    }
    return TemporalCover(std::move(assignment));
}

PaddedGraph pad_dummy_timestamps(const TemporalGraph& graph) {
    constexpr Timestamp offset = 1;
    std::vector<TemporalEdge> edges(graph.edges().begin(), graph.edges().end());
    for (auto& e : edges) e.t += offset;
    return {TemporalGraph(graph.names(), graph.horizon() + 2, std::move(edges)), offset};
}

TemporalAssignment pad_assignment(const TemporalAssignment& assignment, Timestamp offset) {
    TemporalAssignment out(assignment.num_vertices());
    for (std::size_t v = 0; v < assignment.num_vertices(); ++v) {
        if (const auto& part = assignment[static_cast<Vertex>(v)]) {
            out.set(static_cast<Vertex>(v), {part->lo + offset, part->hi + offset});
        }
    }
    return out;
}

TemporalAssignment unpad_assignment(const TemporalAssignment& assignment, Timestamp offset,
                                    Timestamp original_horizon) {
    TemporalAssignment out(assignment.num_vertices());
    const Timestamp first = 1 + offset;
    const Timestamp last = original_horizon + offset;
    for (std::size_t v = 0; v < assignment.num_vertices(); ++v) {
        const auto& part = assignment[static_cast<Vertex>(v)];
        if (!part) continue;
        Timestamp lo = std::max(part->lo, first);
        Timestamp hi = std::min(part->hi, last);
        if (lo > hi) {
            // entirely on a dummy timestamp
            lo = hi = part->hi < first ? first : last;
        }
        out.set(static_cast<Vertex>(v), {lo - offset, hi - offset});
    }
    return out;
}

TemporalGraph induced_subgraph(const TemporalGraph& graph, std::span<const Vertex> subset) {
    std::vector<Vertex> kept(subset.begin(), subset.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<Vertex> remap(graph.num_vertices(), -1);
    std::vector<std::string> names;
    for (Vertex v : kept) {
        if (!graph.has_vertex(v)) {
            throw std::invalid_argument("induced_subgraph: unknown base vertex " + std::to_string(v));
        }
        remap[v] = static_cast<Vertex>(names.size());
        names.push_back(graph.name(v));
    }
    std::vector<TemporalEdge> edges;
    for (const auto& e : graph.edges()) {
        if (remap[e.u] >= 0 && remap[e.v] >= 0) edges.push_back({remap[e.u], remap[e.v], e.t});
    }
    return TemporalGraph(std::move(names), graph.horizon(), std::move(edges));
}

TemporalGraph prefix_subgraph(const TemporalGraph& graph, std::size_t count) {
    if (count > graph.num_vertices()) {
        throw std::invalid_argument("prefix_subgraph: count exceeds vertex count");
    }
    std::vector<Vertex> prefix(count);
    for (std::size_t i = 0; i < count; ++i) prefix[i] = static_cast<Vertex>(i);
    return induced_subgraph(graph, prefix);
}

}  // namespace tgcover
