#include "bench_harness.hpp"

#include "maxdisp/generator.hpp"
#include "maxdisp/solver.hpp"

#include <sys/resource.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace maxdisp::bench {

namespace {

/// Child-to-parent result record, sent raw over a pipe within one binary.
struct WireResult {
    double ms = 0.0;
    double dispersion = 0.0;
    std::uint8_t fallback = 0;
    std::uint8_t ok = 0;
};

long long rss_to_bytes(long maxrss) {
#if defined(__APPLE__)
    return maxrss; // reported in bytes
#else
    return static_cast<long long>(maxrss) * 1024; // reported in kilobytes
#endif
}

CellMeasurement solve_once(std::size_t n, std::uint64_t seed,
                           SolveVariant variant) {
    const PointSet points = generate_normal(n, 2, seed);
    const CardinalityConstraint constraint{n / 2, n / 2};
    const auto t0 = std::chrono::steady_clock::now();
    const DispersionResult result = solve(points, constraint, variant);
    const auto t1 = std::chrono::steady_clock::now();
    CellMeasurement cell;
    cell.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    cell.dispersion = result.dispersion;
    cell.fallback_triggered = result.fallback_triggered;
    return cell;
}

const char* variant_name(SolveVariant variant) {
    return variant == SolveVariant::Full ? "full" : "heap";
}

} // namespace

long long peak_rss_self_bytes() {
    struct rusage usage {};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
    return rss_to_bytes(usage.ru_maxrss);
}

CellMeasurement measure_cell(std::size_t n, std::uint64_t seed,
                             SolveVariant variant) {
    int fds[2];
    if (pipe(fds) != 0) {
        return solve_once(n, seed, variant); // no isolation, no memory figure
    }
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        return solve_once(n, seed, variant);
    }
    if (pid == 0) {
        close(fds[0]);
        WireResult wire;
        try {
            const CellMeasurement cell = solve_once(n, seed, variant);
            wire.ms = cell.ms;
            wire.dispersion = cell.dispersion;
            wire.fallback = cell.fallback_triggered ? 1 : 0;
            wire.ok = 1;
        } catch (...) {
            wire.ok = 0;
        }
        const char* out = reinterpret_cast<const char*>(&wire);
        std::size_t left = sizeof wire;
        while (left > 0) {
            const ssize_t wrote = write(fds[1], out, left);
            if (wrote <= 0) break;
            out += wrote;
            left -= static_cast<std::size_t>(wrote);
        }
        close(fds[1]);
        _exit(wire.ok ? 0 : 1);
    }
    close(fds[1]);
    WireResult wire;
    char* in = reinterpret_cast<char*>(&wire);
    std::size_t got = 0;
    while (got < sizeof wire) {
        const ssize_t read_bytes = read(fds[0], in + got, sizeof(wire) - got);
        if (read_bytes <= 0) break;
        got += static_cast<std::size_t>(read_bytes);
    }
    close(fds[0]);

    int status = 0;
    struct rusage usage {};
    if (wait4(pid, &status, 0, &usage) != pid) {
        throw Error("wait for measurement child failed");
    }
    if (got != sizeof wire || wire.ok == 0 || !WIFEXITED(status) ||
        WEXITSTATUS(status) != 0) {
        throw Error("measurement child failed (n=" + std::to_string(n) +
                    ", variant=" + variant_name(variant) + ")");
    }
    CellMeasurement cell;
    cell.ms = wire.ms;
    cell.dispersion = wire.dispersion;
    cell.fallback_triggered = wire.fallback != 0;
    cell.peak_mem_bytes = rss_to_bytes(usage.ru_maxrss);
    return cell;
}

void run_bench(const BenchSpec& spec) {
    if (spec.step == 0 || spec.start < 2 || spec.stop < spec.start ||
        spec.reps == 0) {
        throw Error("benchmark grid must satisfy 2 <= start <= stop, "
                    "step >= 1, reps >= 1");
    }
    for (std::size_t n = spec.start; n <= spec.stop; n += spec.step) {
        if (n % 2 != 0) {
            throw Error("benchmark instances use balanced constraints; "
                        "every n in the grid must be even (got " +
                        std::to_string(n) + ")");
        }
    }

    std::ofstream csv(spec.out_path, std::ios::binary);
    if (!csv) {
        throw Error("cannot open '" + spec.out_path + "' for writing");
    }
    csv << "n,variant,repetition,ms,peak_mem_bytes\n";

    for (std::size_t n = spec.start; n <= spec.stop; n += spec.step) {
        std::size_t fallback_count = 0;
        for (std::size_t rep = 0; rep < spec.reps; ++rep) {
            const std::uint64_t seed = spec.base_seed + rep;
            double full_dispersion = 0.0;
            for (const SolveVariant variant :
                 {SolveVariant::Full, SolveVariant::Heap}) {
                const CellMeasurement cell = measure_cell(n, seed, variant);
                char ms_text[64];
                std::snprintf(ms_text, sizeof(ms_text), "%.3f", cell.ms);
                csv << n << ',' << variant_name(variant) << ',' << rep << ','
                    << ms_text << ',';
                if (cell.peak_mem_bytes < 0) {
                    csv << "NA";
                } else {
                    csv << cell.peak_mem_bytes;
                }
                csv << '\n';
                csv.flush();
                std::fprintf(stderr, "bench n=%zu %s rep=%zu: %.3f ms\n", n,
                             variant_name(variant), rep, cell.ms);
                if (variant == SolveVariant::Full) {
                    full_dispersion = cell.dispersion;
                } else {
                    if (cell.dispersion != full_dispersion) {
                        throw Error("variants disagree at n=" +
                                    std::to_string(n) + " rep=" +
                                    std::to_string(rep));
                    }
                    if (cell.fallback_triggered) ++fallback_count;
                }
            }
        }
        std::printf("n=%zu heap_fallback_fraction=%.3f\n", n,
                    static_cast<double>(fallback_count) /
                        static_cast<double>(spec.reps));
        std::fflush(stdout);
    }
    if (!csv) {
        throw Error("write to '" + spec.out_path + "' failed");
    }
}

} // namespace maxdisp::bench
