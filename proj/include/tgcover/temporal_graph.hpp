#ifndef TGCOVER_TEMPORAL_GRAPH_HPP
#define TGCOVER_TEMPORAL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace tgcover {

/// Dense id of a base vertex; ids are 0-based and follow insertion order.
using Vertex = int;
/// Timestamps are 1-based: a graph with horizon T uses 1..T.
using Timestamp = int;

/// An edge u_t v_t between two distinct base vertices. Stored with u < v.
struct TemporalEdge {
    Vertex u = 0;
    Vertex v = 0;
    Timestamp t = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
    friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

/// One occurrence of a temporal edge seen from one of its endpoints.
struct Incidence {
    Vertex other = 0;
    Timestamp t = 0;
};

/// Temporal graph over base vertices 0..n-1 and the time domain 1..T.
///
/// Immutable after construction. The constructor normalizes every edge so
/// that u < v and rejects self-loops, out-of-range timestamps, unknown
/// vertices and duplicate edges with std::invalid_argument.
class TemporalGraph {
public:
    TemporalGraph() = default;
    TemporalGraph(std::vector<std::string> names, Timestamp horizon,
                  std::vector<TemporalEdge> edges);

    /// Anonymous vertices named "0", "1", ...
    static TemporalGraph with_vertex_count(std::size_t n, Timestamp horizon,
                                           std::vector<TemporalEdge> edges);

    std::size_t num_vertices() const { return names_.size(); }
    Timestamp horizon() const { return horizon_; }
    std::span<const TemporalEdge> edges() const { return edges_; }
    std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }

    const std::string& name(Vertex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Vertex> find(const std::string& name) const;

    bool has_edge(Vertex u, Vertex v, Timestamp t) const;
    bool has_vertex(Vertex v) const {
        return v >= 0 && static_cast<std::size_t>(v) < names_.size();
    }
    /// True if no edge uses timestamp t.
    bool timestamp_edgeless(Timestamp t) const;

private:
    std::vector<std::string> names_;
    Timestamp horizon_ = 1;
    std::vector<TemporalEdge> edges_;  // sorted by (t, u, v)
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_map<std::string, Vertex> index_;
};

/// Closed interval [lo, hi] of timestamps, lo <= hi.
struct Interval {
    Timestamp lo = 1;
    Timestamp hi = 1;

    bool contains(Timestamp t) const { return lo <= t && t <= hi; }
    int span() const { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Per-base-vertex activity intervals. A vertex without an entry has no
/// active vertices. Storing endpoints keeps every part contiguous.
class TemporalAssignment {
public:
    TemporalAssignment() = default;
    explicit TemporalAssignment(std::size_t num_vertices) : parts_(num_vertices) {}

    std::size_t num_vertices() const { return parts_.size(); }
    void resize(std::size_t num_vertices) { parts_.resize(num_vertices); }

    const std::optional<Interval>& operator[](Vertex v) const { return parts_[v]; }
    bool has(Vertex v) const { return parts_[v].has_value(); }
    /// Is v_t in the assignment?
    bool active(Vertex v, Timestamp t) const {
        return parts_[v].has_value() && parts_[v]->contains(t);
    }

    /// Throws std::invalid_argument if lo > hi or lo < 1.
    void set(Vertex v, Interval interval);
    void clear(Vertex v) { parts_[v].reset(); }

    const std::vector<std::optional<Interval>>& parts() const { return parts_; }

    friend bool operator==(const TemporalAssignment&, const TemporalAssignment&) = default;
    friend auto operator<=>(const TemporalAssignment&, const TemporalAssignment&) = default;

private:
    std::vector<std::optional<Interval>> parts_;
};

/// sp(v, X): hi - lo for an entry, 0 when absent.
int span_of(const TemporalAssignment& assignment, Vertex v);
/// sp(X): sum of span_of over all entries.
int total_span(const TemporalAssignment& assignment);

/// Reason an assignment fails to be a temporal cover.
using CoverViolation = std::variant<Vertex, TemporalEdge>;

struct CoverCheck {
    std::optional<CoverViolation> violation;  // empty iff the check passed
    explicit operator bool() const { return !violation.has_value(); }
};

/// Checks both cover conditions and reports the first violation: an
/// uncovered base vertex (lowest id) before an uncovered edge (in edge order).
/// Throws std::invalid_argument if X has the wrong vertex count or an
/// interval leaves [1, T].
CoverCheck is_temporal_cover(const TemporalGraph& graph, const TemporalAssignment& assignment);

/// An assignment that has been checked to be a temporal cover of some graph.
class TemporalCover {
public:
    /// Throws std::invalid_argument if `assignment` does not cover `graph`.
    static TemporalCover verified(const TemporalGraph& graph, TemporalAssignment assignment);

    const TemporalAssignment& assignment() const { return assignment_; }
    const std::optional<Interval>& operator[](Vertex v) const { return assignment_[v]; }
    int span() const { return total_span(assignment_); }

    friend bool operator==(const TemporalCover&, const TemporalCover&) = default;

private:
    explicit TemporalCover(TemporalAssignment assignment) : assignment_(std::move(assignment)) {}
    TemporalAssignment assignment_;
};

/// Graph padded with an edgeless timestamp before and after the original
/// horizon; original timestamp t becomes t + offset.
struct PaddedGraph {
    TemporalGraph graph;
    Timestamp offset = 1;
};

PaddedGraph pad_dummy_timestamps(const TemporalGraph& graph);

/// Shifts every interval by +offset. Inverse of unpad_assignment for
/// assignments that stay inside the original horizon.
TemporalAssignment pad_assignment(const TemporalAssignment& assignment, Timestamp offset);

/// Maps an assignment of the padded graph back to the original horizon.
/// Parts are clipped to the original range before shifting; a part that lies
/// entirely on a dummy timestamp becomes a singleton at the nearest real one.
/// Clipping never increases span and keeps every original edge covered.
TemporalAssignment unpad_assignment(const TemporalAssignment& assignment, Timestamp offset,
                                    Timestamp original_horizon);

/// G[W]: vertices of W (kept in ascending id order and renumbered densely),
/// same horizon, exactly the edges with both endpoints in W.
TemporalGraph induced_subgraph(const TemporalGraph& graph, std::span<const Vertex> subset);

/// G[{0, ..., count-1}]; ids are preserved.
TemporalGraph prefix_subgraph(const TemporalGraph& graph, std::size_t count);

}  // namespace tgcover

#endif  // TGCOVER_TEMPORAL_GRAPH_HPP
