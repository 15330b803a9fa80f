#ifndef TGCOVER_PAIRCUT_HPP
#define TGCOVER_PAIRCUT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tgcover::paircut {

using Node = int;
/// Per-node or per-arc flag vector.
using Mask = std::vector<std::uint8_t>;

struct Arc {
    Node tail = 0;
    Node head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered vertex pair, stored with first < second.
struct NodePair {
    Node first = 0;
    Node second = 0;

    friend bool operator==(const NodePair&, const NodePair&) = default;
    friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// Simple digraph on nodes 0..n-1. Parallel arcs are merged.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t num_nodes) : out_(num_nodes) {}

    Node add_node();
    /// Returns the index of the arc; an existing (tail, head) arc is reused.
    std::size_t add_arc(Node tail, Node head);

    std::size_t num_nodes() const { return out_.size(); }
    std::size_t num_arcs() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(std::size_t index) const { return arcs_[index]; }
    /// Indices of the arcs leaving `node`.
    std::span<const std::size_t> out_arcs(Node node) const { return out_[node]; }
    std::optional<std::size_t> find_arc(Node tail, Node head) const;
    bool has_node(Node node) const {
        return node >= 0 && static_cast<std::size_t>(node) < out_.size();
    }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
};

/// Constrained Digraph Pair Cut: delete at most `budget` deletable arcs so
/// that the source reaches at most one node of every forbidden pair.
struct CdpcInstance {
    Digraph digraph;
    Node source = 0;
    std::vector<NodePair> pairs;
    std::vector<bool> deletable;  // indexed by arc index
    int budget = 0;
};

/// Vertex-deletion Digraph Pair Cut: delete at most `budget` non-source
/// nodes so that the source reaches at most one node of every pair.
struct VdpcInstance {
    Digraph digraph;
    Node source = 0;
    std::vector<NodePair> pairs;
    int budget = 0;
};

/// Normalizes a pair to first < second. Throws std::invalid_argument for a
/// pair {u, u}.
NodePair make_pair(Node a, Node b);

/// Throws std::invalid_argument if the instance references missing nodes,
/// has a malformed pair, a deletable mask of the wrong size, or a negative
/// budget. Duplicate pairs are rejected as well.
void validate(const CdpcInstance& instance);
void validate(const VdpcInstance& instance);

/// Nodes reachable from `source` when the marked nodes and arcs are removed.
/// Either mask may be empty, meaning nothing of that kind is removed. A removed
/// source reaches nothing. Result is a per-node flag vector.
Mask reachable_from_source(const Digraph& digraph, Node source,
                           std::span<const std::uint8_t> removed_nodes,
                           std::span<const std::uint8_t> removed_arcs);

/// Convenience overloads taking explicit lists.
Mask reachable_without_nodes(const Digraph& digraph, Node source,
                             std::span<const Node> removed);
Mask reachable_without_arcs(const Digraph& digraph, Node source, std::span<const Arc> removed);

/// True iff `cut` (arc list) is a solution: only deletable arcs, within
/// budget, and no pair fully reachable.
bool is_cdpc_solution(const CdpcInstance& instance, std::span<const Arc> cut);
/// True iff `cut` (node list) is a solution: no source, within budget, and no
/// pair fully reachable.
bool is_vdpc_solution(const VdpcInstance& instance, std::span<const Node> cut);

/// Output of the arc-to-vertex deletion reduction.
struct VdpcReduction {
    VdpcInstance instance;
    /// copies[u][i] is copy u^{i+1} of original node u.
    std::vector<std::vector<Node>> copies;
    /// For a node of the reduced graph that stands for a deletable arc, the
    /// index of that arc in the original digraph.
    std::vector<std::optional<std::size_t>> arc_of_node;
};

/// Replaces every node by budget+1 copies, adds a new source wired to all
/// copies of the old source, a single mid-node per deletable arc and budget+1
/// mid-nodes per undeletable arc (each fully wired between the copies of the
/// tail and of the head), and copies every pair to all copy combinations.
/// Budget is unchanged.
VdpcReduction cdpc_to_vdpc(const CdpcInstance& instance);

/// Exact solver for the vertex-deletion variant.
///
/// Min-cut guided branching: keep a set of nodes that must become
/// unreachable, take the minimum node cut separating them from the source that
/// lies closest to the source, and if some pair is still fully reachable
/// branch on which of its nodes joins the set. The cut size grows on every
/// branch, so the search tree has at most 2^(budget+1) leaves. The returned set
/// is inclusion-minimal and sorted.
std::optional<std::vector<Node>> solve_vdpc(const VdpcInstance& instance);

/// Exact CDPC solver: reduction to the vertex-deletion variant, solve, and
/// map deleted mid-nodes back to arcs. The result is sorted.
std::optional<std::vector<Arc>> solve_cdpc(const CdpcInstance& instance);

}  // namespace tgcover::paircut

#endif  // TGCOVER_PAIRCUT_HPP
