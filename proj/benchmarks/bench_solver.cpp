#include <benchmark/benchmark.h>

#include "maxdisp/coloring.hpp"
#include "maxdisp/generator.hpp"
#include "maxdisp/graph.hpp"
#include "maxdisp/solver.hpp"

static void BM_SolveFull(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto points = maxdisp::generate_normal(n, 2, 1);
    const maxdisp::CardinalityConstraint constraint{n / 2, n / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            maxdisp::solve(points, constraint, maxdisp::SolveVariant::Full));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveFull)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void BM_SolveHeap(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto points = maxdisp::generate_normal(n, 2, 1);
    const maxdisp::CardinalityConstraint constraint{n / 2, n / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            maxdisp::solve(points, constraint, maxdisp::SolveVariant::Heap));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveHeap)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void BM_ColorPath(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    maxdisp::ThresholdGraph graph(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) graph.add_edge(i, i + 1);
    const maxdisp::CardinalityConstraint constraint{n / 2, n / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxdisp::solve_2colcc(graph, constraint));
    }
}
BENCHMARK(BM_ColorPath)->Arg(1024)->Arg(8192);

BENCHMARK_MAIN();
