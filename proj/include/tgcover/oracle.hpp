#ifndef TGCOVER_ORACLE_HPP
#define TGCOVER_ORACLE_HPP

// Exhaustive reference solvers. They share no code with the compression
// pipeline and exist to check it.

#include <optional>
#include <vector>

#include "tgcover/paircut.hpp"
#include "tgcover/temporal_graph.hpp"

namespace tgcover::oracle {

struct CoverResult {
    TemporalCover cover;
    int span = 0;
};

/// Minimum-span temporal cover by exhaustive interval enumeration. With a
/// budget, returns nullopt when the minimum exceeds it. Among covers of
/// minimum span the lexicographically least (by base vertex, then lo, hi) is
/// returned. Exponential in the number of base vertices.
std::optional<CoverResult> brute_force_min_cover(const TemporalGraph& graph,
                                                 std::optional<int> budget = std::nullopt);

/// 2-CNF over variables 0..n-1, solved through strongly connected components
/// of the implication graph.
class TwoSat {
public:
    struct Literal {
        int var = 0;
        bool positive = true;
    };

    explicit TwoSat(int num_vars) : num_vars_(num_vars), implications_(2 * num_vars) {}

    int num_vars() const { return num_vars_; }
    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

    void add_clause(Literal a, Literal b);
    /// Satisfying assignment, or nullopt if the formula is unsatisfiable.
    std::optional<std::vector<bool>> solve() const;

private:
    static int node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

    int num_vars_;
    std::vector<std::vector<int>> implications_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

/// 2-SAT formula whose models are the span-0 covers of a graph (restricted to
/// the timestamps where each vertex has an incident edge).
struct ZeroSpanEncoding {
    TwoSat formula{0};
    /// var_of[v] lists (timestamp, variable) for every timestamp at which v
    /// has an incident edge; variable true means v is active exactly then.
    std::vector<std::vector<std::pair<Timestamp, int>>> var_of;
};

ZeroSpanEncoding encode_zero_span(const TemporalGraph& graph);

/// Span-0 cover if one exists. Polynomial: one variable per (vertex,
/// incident timestamp), a covering clause per edge and an at-most-one clause
/// per pair of timestamps of the same vertex. Vertices left unconstrained get
/// the singleton at timestamp 1.
std::optional<TemporalCover> zero_span_decider(const TemporalGraph& graph);

/// Minimum-size node deletion set (at most the budget) separating every pair,
/// by enumeration of subsets in increasing size. Lexicographically least among
/// minimum sets.
std::optional<std::vector<paircut::Node>> brute_force_vdpc(const paircut::VdpcInstance& instance);

/// Minimum-size deletable-arc set by enumeration of subsets of D.
std::optional<std::vector<paircut::Arc>> brute_force_cdpc(const paircut::CdpcInstance& instance);

}  // namespace tgcover::oracle

#endif  // TGCOVER_ORACLE_HPP
