// Serial reference vs OpenMP consumption of the feasible-assignment stream.
// Contexts are UNSAT so every assignment is tried and the loops do equal work.

#include <benchmark/benchmark.h>

#include <vector>

#include "tgcover/compression.hpp"
#include "tgcover/io.hpp"
#include "tgcover/oracle.hpp"

using namespace tgcover;

namespace {

// Context for the last vertex of a random graph whose minimum span is
// exactly one above the budget, so solve_restricted must exhaust the stream.
CompressionContext hard_context(int n, int horizon, int budget) {
    for (std::uint64_t seed = 1;; ++seed) {
        const auto base = io::generate_instance(n, horizon, 0.3, seed);
        const auto best = oracle::brute_force_min_cover(base);
        if (!best || best->span != budget + 1) continue;
        const auto g = pad_dummy_timestamps(base).graph;
        const auto rest = solve_min_timeline_cover(prefix_subgraph(g, n - 1), budget);
        if (!rest) continue;
        TemporalAssignment s = rest->assignment();
        s.resize(n);
        auto ctx = derive_context(g, n - 1, s, budget);
        if (feasible_assignments(ctx).size() >= 50) return ctx;
    }
}

const CompressionContext& context() {
    static const CompressionContext ctx = hard_context(6, 6, 3);
    return ctx;
}

void BM_Restricted(benchmark::State& state) {
    const auto& ctx = context();
    SolveOptions options;
    options.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cover = solve_restricted(ctx, options);
        benchmark::DoNotOptimize(cover);
    }
    state.counters["assignments"] = static_cast<double>(feasible_assignments(ctx).size());
}

}  // namespace

BENCHMARK(BM_Restricted)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
