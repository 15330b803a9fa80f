#ifndef TGCOVER_COMPRESSION_HPP
#define TGCOVER_COMPRESSION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgcover/paircut.hpp"
#include "tgcover/temporal_graph.hpp"

namespace tgcover {

/// A prior cover S of G - {w} with span at most k, together with the sets the
/// compression step derives from it.
///
/// Requires timestamps 1 and T of `graph` to be edgeless.
struct CompressionContext {
    TemporalGraph graph;
    Vertex new_vertex = 0;           // w
    TemporalAssignment prior_cover;  // S, no entry for w
    int budget = 0;                  // k

    std::vector<Vertex> flexible;        // V_S: positive span in S, plus w (ascending)
    std::vector<std::uint8_t> in_flexible;
    std::vector<Timestamp> anchor_times;  // I_S (ascending)
    std::vector<std::uint8_t> is_anchor_time;  // indexed by timestamp
    std::vector<Vertex> rigid;           // Z_S = V_B \ V_S (ascending)
    /// For v in Z_S, the timestamp of its single vertex in Z'_S, always in
    /// [2, T-1]; 0 for vertices outside Z_S.
    std::vector<Timestamp> rigid_time;

    bool is_flexible(Vertex v) const { return in_flexible[v] != 0; }
    bool is_anchor(Timestamp t) const { return is_anchor_time[t] != 0; }
    /// v_t in V'_S
    bool in_prior_flexible(Vertex v, Timestamp t) const;
};

/// Builds a context. Throws std::invalid_argument if timestamps 1 or T carry
/// edges, if S has an entry for w, misses another vertex, does not cover
/// G - {w}, or has span above k.
CompressionContext derive_context(const TemporalGraph& graph, Vertex new_vertex,
                                  const TemporalAssignment& prior_cover, int budget);

/// Structural facts every context must satisfy: the I_S size bound and the
/// span/coverage properties of Z'_S.
struct ContextAudit {
    bool anchor_bound = true;      // |I_S| <= 2k
    bool flexible_bound = true;    // |V_S \ {w}| <= k
    bool rigid_span_zero = true;   // one Z'_S vertex per Z_S vertex, in [2, T-1]
    bool residual_covered = true;  // Z'_S covers G - {w} edges missed by V'_S
    bool ok() const { return anchor_bound && flexible_bound && rigid_span_zero && residual_covered; }
};

ContextAudit audit_context(const CompressionContext& ctx);

/// A guessed assignment of V_S. Entries exist only for V_S vertices.
struct FeasibleAssignment {
    TemporalAssignment assignment;
    std::vector<Vertex> fixed;    // M_S: V_S vertices with a non-empty part
    std::vector<Vertex> dropped;  // N_S: V_S vertices with an empty part

    int span() const { return total_span(assignment); }
};

/// Wraps an assignment of V_S and derives M_S / N_S.
FeasibleAssignment make_feasible_assignment(const CompressionContext& ctx,
                                            TemporalAssignment assignment);

/// All four feasibility conditions: span at most k, every edge of G[V_S]
/// covered, non-empty w part, and every other non-empty part either meets
/// I_S or covers an edge v_t w_t with w_t outside the w part. Also checks that
/// only V_S vertices have entries.
bool is_feasible(const CompressionContext& ctx, const TemporalAssignment& assignment);

/// Branching enumeration of feasible assignments: every w interval of span at
/// most k; vertices forced by uncovered w edges; for the remaining V_S
/// vertices no vertex or one anchor timestamp; then every interval of span at
/// most k around the chosen vertices. Branches are filtered by `is_feasible`
/// and duplicates removed. Order is deterministic. `visit` returns false to
/// stop early.
void enumerate_feasible_assignments(const CompressionContext& ctx,
                                    const std::function<bool(const FeasibleAssignment&)>& visit);

std::vector<FeasibleAssignment> feasible_assignments(const CompressionContext& ctx);

/// Does `cover` agree with X? Exact match on M_S; for v in N_S and t in I_S
/// every Z_S neighbour u_t of v_t is in the cover.
bool agrees_with(const TemporalAssignment& cover, const FeasibleAssignment& x,
                 const CompressionContext& ctx);

/// Role of a node of the pair-cut graph.
enum class GadgetRole { Source, Positive, Negative, Upper, Middle, Lower };

std::string to_string(GadgetRole role);

struct GadgetNode {
    GadgetRole role = GadgetRole::Source;
    Vertex base = -1;     // owning base vertex, -1 for the source
    Timestamp time = 0;   // t of v_t^+ / v_t^-, j of b/c/d nodes
};

/// Nodes of the gadget built for one base vertex of Z_S or N_S. Index by
/// timestamp; entries at the pivot (and index 0) are -1 except `negative`.
struct Gadget {
    Vertex base = -1;
    Timestamp pivot = 0;
    paircut::Node negative = -1;            // v_pivot^-
    std::vector<paircut::Node> positive;    // v_j^+
    std::vector<paircut::Node> upper;       // b_{v,j}
    std::vector<paircut::Node> middle;      // c_{v,j}
    std::vector<paircut::Node> lower;       // d_{v,j}

    std::vector<paircut::Node> nodes() const;
};

/// Two-way naming between the pair-cut graph and the temporal graph.
struct GadgetMap {
    paircut::Node source = 0;
    std::vector<GadgetNode> roles;        // indexed by node
    std::vector<Gadget> gadgets;          // one per Z_S ∪ N_S vertex
    std::vector<int> gadget_of;           // base vertex -> index into gadgets or -1

    const Gadget* gadget_for(Vertex v) const {
        return gadget_of[v] < 0 ? nullptr : &gadgets[gadget_of[v]];
    }
    /// v_t^+ or -1
    paircut::Node positive(Vertex v, Timestamp t) const;
    /// v_t^- or -1
    paircut::Node negative(Vertex v, Timestamp t) const;
};

struct CdpcBuild {
    paircut::CdpcInstance instance;
    GadgetMap map;
};

/// Pair-cut instance whose solutions with at most k - sp(X) deletions
/// correspond to covers agreeing with X. Throws std::invalid_argument when
/// sp(X) > k, and std::logic_error if an edge between N_S and a non-M_S vertex
/// does not end in Z_S (or in Z'_S outside the anchor timestamps).
CdpcBuild build_cdpc_instance(const CompressionContext& ctx, const FeasibleAssignment& x);

/// Cover of ctx.graph read off a pair-cut solution: M_S parts from X; v_t for
/// other vertices when s reaches v_t^+ or fails to reach v_t^-; gaps filled;
/// empty vertices get v_2. Throws std::invalid_argument if `cut` leaves a
/// forbidden pair reachable or exceeds the budget.
TemporalCover reconstruct_cover(const CompressionContext& ctx, const FeasibleAssignment& x,
                                std::span<const paircut::Arc> cut, const CdpcBuild& build);

/// Hooks for tests and instrumentation. Called from worker threads when
/// jobs > 1.
struct SolveObserver {
    std::function<void(const CompressionContext&)> on_context;
    std::function<void(const CompressionContext&, const FeasibleAssignment&, const CdpcBuild&)>
        on_instance;
    std::function<void(const CompressionContext&, const FeasibleAssignment&, const CdpcBuild&,
                       std::span<const paircut::Arc>, const TemporalCover&)>
        on_solution;
};

struct SolveOptions {
    /// Worker threads consuming the feasible-assignment stream. 1 runs the
    /// serial reference loop.
    int jobs = 1;
    /// With jobs > 1: return the cover of the first successful assignment in
    /// enumeration order, matching the serial result.
    bool deterministic = true;
    const SolveObserver* observer = nullptr;
};

/// Cover of ctx.graph with span at most k, if one exists.
std::optional<TemporalCover> solve_restricted(const CompressionContext& ctx,
                                              const SolveOptions& options = {});

/// Exact MinTimelineCover by iterative compression over the input vertex
/// order. Pads internally; the result is expressed in the input timestamps.
std::optional<TemporalCover> solve_min_timeline_cover(const TemporalGraph& graph, int budget,
                                                      const SolveOptions& options = {});

}  // namespace tgcover

#endif  // TGCOVER_COMPRESSION_HPP
