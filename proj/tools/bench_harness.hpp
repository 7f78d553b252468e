#ifndef MAXDISP_TOOLS_BENCH_HARNESS_HPP
#define MAXDISP_TOOLS_BENCH_HARNESS_HPP

#include "maxdisp/types.hpp"

#include <cstdint>
#include <string>

namespace maxdisp::bench {

/// One timed solve of one generated instance.
struct CellMeasurement {
    double ms = 0.0;
    double dispersion = 0.0;
    bool fallback_triggered = false;
    long long peak_mem_bytes = -1; ///< -1 when no figure was obtainable
};

/// Grid of standard-normal m=2 balanced instances: for each n in
/// start..stop by step and each repetition r in 0..reps-1, both variants
/// solve the instance generated with seed base_seed + r.
struct BenchSpec {
    std::size_t start = 1000;
    std::size_t stop = 10000;
    std::size_t step = 1000;
    std::size_t reps = 10;
    std::uint64_t base_seed = 1;
    std::string out_path;
};

/// Runs one cell in a forked child so the child's peak resident set is this
/// cell's alone; the timed span covers only the solve, not generation.
/// Falls back to an in-process run with no memory figure when fork fails.
CellMeasurement measure_cell(std::size_t n, std::uint64_t seed,
                             SolveVariant variant);

/// Peak resident set of the calling process, or -1 if unavailable.
long long peak_rss_self_bytes();

/// Writes the timing CSV ("n,variant,repetition,ms,peak_mem_bytes") to
/// spec.out_path, prints per-n heap fallback fractions to stdout and
/// progress to stderr. Throws maxdisp::Error on harness failures.
void run_bench(const BenchSpec& spec);

} // namespace maxdisp::bench

#endif
