#include "bench_harness.hpp"

#include "maxdisp/generator.hpp"
#include "maxdisp/io.hpp"
#include "maxdisp/solver.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

bool parse_size(std::string_view text, std::size_t& out) {
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && !text.empty() &&
           end == text.data() + text.size();
}

struct GenerateSpec {
    std::size_t n = 0;
    std::size_t m = 0;
};

bool parse_generate(const std::string& text, GenerateSpec& out) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) return false;
    std::string_view view(text);
    return parse_size(view.substr(0, comma), out.n) &&
           parse_size(view.substr(comma + 1), out.m) && out.n >= 1 &&
           out.m >= 1;
}

bool parse_grid(const std::string& text, maxdisp::bench::BenchSpec& out) {
    const std::size_t first = text.find(':');
    if (first == std::string::npos) return false;
    const std::size_t second = text.find(':', first + 1);
    if (second == std::string::npos) return false;
    std::string_view view(text);
    return parse_size(view.substr(0, first), out.start) &&
           parse_size(view.substr(first + 1, second - first - 1), out.stop) &&
           parse_size(view.substr(second + 1), out.step);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-group partitioning maximizing the minimum "
                 "within-group Euclidean distance"};

    std::string input_path;
    std::string generate_text;
    std::string out_path;
    std::string summary_path;
    std::string bench_text;
    std::string bench_out;
    std::string variant_text = "auto";
    std::uint64_t seed = 1;
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    std::size_t reps = 10;
    bool balanced = false;

    auto* input_opt =
        app.add_option("--input", input_path, "CSV of feature rows, one item per row");
    auto* generate_opt = app.add_option(
        "--generate", generate_text,
        "Generate N,M standard-normal items instead of reading a file");
    app.add_option("--seed", seed,
                   "Generator seed; benchmark mode uses it as the base seed")
        ->capture_default_str();
    auto* c1_opt = app.add_option("--c1", c1, "Required size of group 1");
    auto* c2_opt = app.add_option("--c2", c2, "Required size of group 2");
    auto* balanced_opt = app.add_flag(
        "--balanced", balanced, "Split into equal halves (item count must be even)");
    app.add_option("--variant", variant_text,
                   "Solver variant: full sorts every pair, heap keeps only the "
                   "n smallest, auto picks heap")
        ->check(CLI::IsMember({"full", "heap", "auto"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write the assignment CSV here");
    app.add_option("--summary", summary_path,
                   "Write the key=value run summary here (always printed to "
                   "stdout too)");
    auto* bench_opt = app.add_option(
        "--bench", bench_text,
        "Benchmark mode: item-count grid start:stop:step, balanced m=2 "
        "standard-normal instances, both variants");
    auto* reps_opt =
        app.add_option("--reps", reps, "Benchmark repetitions per grid point")
            ->capture_default_str();
    auto* bench_out_opt =
        app.add_option("--bench-out", bench_out, "Benchmark timing CSV path");

    input_opt->excludes(generate_opt);
    c1_opt->needs(c2_opt);
    c2_opt->needs(c1_opt);
    balanced_opt->excludes(c1_opt);
    balanced_opt->excludes(c2_opt);
    reps_opt->needs(bench_opt);
    bench_out_opt->needs(bench_opt);
    bench_opt->needs(bench_out_opt);
    for (CLI::Option* solve_only :
         {input_opt, generate_opt, c1_opt, balanced_opt}) {
        bench_opt->excludes(solve_only);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*bench_opt) {
        maxdisp::bench::BenchSpec spec;
        if (!parse_grid(bench_text, spec)) {
            std::cerr << "error: --bench expects start:stop:step\n";
            return 1;
        }
        spec.reps = reps;
        spec.base_seed = seed;
        spec.out_path = bench_out;
        try {
            maxdisp::bench::run_bench(spec);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        return 0;
    }

    if (!*input_opt && !*generate_opt) {
        std::cerr << "error: provide --input PATH or --generate N,M "
                     "(or --bench for benchmark mode)\n";
        return 1;
    }
    if (!*c1_opt && !balanced) {
        std::cerr << "error: provide --c1 K --c2 K or --balanced\n";
        return 1;
    }
    GenerateSpec generate_spec;
    if (*generate_opt && !parse_generate(generate_text, generate_spec)) {
        std::cerr << "error: --generate expects N,M with both at least 1\n";
        return 1;
    }

    try {
        const maxdisp::PointSet points =
            *input_opt ? maxdisp::ingest_csv(input_path)
                       : maxdisp::generate_normal(generate_spec.n,
                                                  generate_spec.m, seed);
        maxdisp::CardinalityConstraint constraint{c1, c2};
        if (balanced) {
            if (points.size() % 2 != 0) {
                throw maxdisp::CardinalityMismatch(
                    "--balanced requires an even item count, got " +
                    std::to_string(points.size()));
            }
            constraint = {points.size() / 2, points.size() / 2};
        }
        const maxdisp::SolveVariant variant =
            variant_text == "full"   ? maxdisp::SolveVariant::Full
            : variant_text == "heap" ? maxdisp::SolveVariant::Heap
                                     : maxdisp::SolveVariant::Auto;

        const auto t0 = std::chrono::steady_clock::now();
        const maxdisp::DispersionResult result =
            maxdisp::solve(points, constraint, variant);
        const auto t1 = std::chrono::steady_clock::now();

        maxdisp::SolveSummary summary;
        summary.dispersion = result.dispersion;
        summary.iterations_used = result.iterations_used;
        summary.fallback_triggered = result.fallback_triggered;
        summary.variant = result.variant;
        summary.wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        summary.peak_mem_bytes = maxdisp::bench::peak_rss_self_bytes();

        if (!out_path.empty()) {
            maxdisp::write_assignment_csv(out_path, result.assignment);
        }
        if (!summary_path.empty()) {
            maxdisp::write_summary(summary_path, summary);
        }
        maxdisp::write_summary(std::cout, summary);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
