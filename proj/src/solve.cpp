#include <atomic>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tgcover/compression.hpp"

namespace tgcover {

namespace {

std::optional<TemporalCover> try_assignment(const CompressionContext& ctx,
                                            const FeasibleAssignment& x,
                                            const SolveObserver* observer) {
    const CdpcBuild build = build_cdpc_instance(ctx, x);
    if (observer && observer->on_instance) observer->on_instance(ctx, x, build);
    auto cut = paircut::solve_cdpc(build.instance);
    if (!cut) return std::nullopt;
    TemporalCover cover = reconstruct_cover(ctx, x, *cut, build);
    if (observer && observer->on_solution) observer->on_solution(ctx, x, build, *cut, cover);
    return cover;
}

// Serial reference: consume the stream in order, stop at the first success.
std::optional<TemporalCover> solve_serial(const CompressionContext& ctx,
                                          const SolveObserver* observer) {
    std::optional<TemporalCover> result;
    enumerate_feasible_assignments(ctx, [&](const FeasibleAssignment& x) {
        result = try_assignment(ctx, x, observer);
        return !result.has_value();
    });
    return result;
}

std::optional<TemporalCover> solve_parallel(const CompressionContext& ctx,
                                            const SolveOptions& options) {
    const std::vector<FeasibleAssignment> candidates = feasible_assignments(ctx);
    const long count = static_cast<long>(candidates.size());
    constexpr long kNone = std::numeric_limits<long>::max();
    std::atomic<long> winner{kNone};
    std::optional<TemporalCover> result;

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
    for (long i = 0; i < count; ++i) {
        // Deterministic mode still solves indices below the current winner.
        const long best = winner.load(std::memory_order_relaxed);
        if (options.deterministic ? i > best : best != kNone) continue;
        auto cover = try_assignment(ctx, candidates[i], options.observer);
        if (!cover) continue;
#pragma omp critical(tgcover_restricted_winner)
        {
            if (i < winner.load(std::memory_order_relaxed) &&
                (options.deterministic || !result)) {
                winner.store(i, std::memory_order_relaxed);
                result = std::move(cover);
            }
        }
    }
    return result;
}

}  // namespace

std::optional<TemporalCover> solve_restricted(const CompressionContext& ctx,
                                              const SolveOptions& options) {
    if (options.observer && options.observer->on_context) options.observer->on_context(ctx);
#ifdef _OPENMP
    if (options.jobs > 1) return solve_parallel(ctx, options);
#endif
    return solve_serial(ctx, options.observer);
}

std::optional<TemporalCover> solve_min_timeline_cover(const TemporalGraph& graph, int budget,
                                                      const SolveOptions& options) {
    if (budget < 0) return std::nullopt;
    const std::size_t n = graph.num_vertices();
    if (n == 0) return TemporalCover::verified(graph, TemporalAssignment(0));

    const PaddedGraph padded = pad_dummy_timestamps(graph);
    // A single vertex is covered by any singleton.
    TemporalAssignment current(1);
    current.set(0, {1, 1});
    for (std::size_t i = 1; i < n; ++i) {
        const TemporalGraph prefix = prefix_subgraph(padded.graph, i + 1);
        current.resize(i + 1);
        const CompressionContext ctx =
            derive_context(prefix, static_cast<Vertex>(i), current, budget);
        auto next = solve_restricted(ctx, options);
        if (!next) return std::nullopt;
        current = next->assignment();
    }
    return TemporalCover::verified(
        graph, unpad_assignment(current, padded.offset, graph.horizon()));
}

}  // namespace tgcover
