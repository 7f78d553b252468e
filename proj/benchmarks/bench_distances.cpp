#include <benchmark/benchmark.h>

#include "maxdisp/distances.hpp"
#include "maxdisp/generator.hpp"

static void BM_AllPairsSorted(benchmark::State& state) {
    const auto points = maxdisp::generate_normal(
        static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxdisp::all_distances_sorted(points));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsSorted)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_BoundedSmallest(benchmark::State& state) {
    const auto points = maxdisp::generate_normal(
        static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxdisp::smallest_n_distances(points));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoundedSmallest)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_MinPairwise(benchmark::State& state) {
    const auto points = maxdisp::generate_normal(
        static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxdisp::min_pairwise_d2(points));
    }
}
BENCHMARK(BM_MinPairwise)->Arg(1024)->Arg(4096);
