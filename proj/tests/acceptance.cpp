// Acceptance gate: seven end-to-end checks, one per claimed property of the
// solver. Run with no arguments for all of them or with a single number
// (1..7) for one. Each prints exactly one PASS/FAIL line; the exit code is
// the number of failures.

#include "maxdisp/coloring.hpp"
#include "maxdisp/distances.hpp"
#include "maxdisp/generator.hpp"
#include "maxdisp/graph.hpp"
#include "maxdisp/io.hpp"
#include "maxdisp/oracle.hpp"
#include "maxdisp/solver.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace maxdisp;

namespace {

/// Deterministic test-instance randomness. Raw engine draws with modulo keep
/// the sequences identical across standard-library implementations.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t bound) { return rng_() % bound; }

    std::uint64_t next() { return rng_(); }

    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 rng_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Outcome {
    bool pass = true;
    std::string detail; ///< first failure, or summary stats when passing

    void fail(const std::string& what) {
        if (pass) {
            pass = false;
            detail = what;
        }
    }
};

void report(int criterion, const char* name, const Outcome& outcome,
            double elapsed_s) {
    std::printf("%s criterion-%d %s (%s, %.1fs)\n",
                outcome.pass ? "PASS" : "FAIL", criterion, name,
                outcome.detail.c_str(), elapsed_s);
    std::fflush(stdout);
}

bool coloring_is_proper(const ThresholdGraph& graph,
                        const Assignment& assignment) {
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
        for (const std::uint32_t v : graph.neighbors(u)) {
            if (u < v && assignment.groups[u] == assignment.groups[v]) {
                return false;
            }
        }
    }
    return true;
}

// --- criterion 1: solved dispersions match exhaustive search bitwise -------

bool criterion_optimality() {
    Stopwatch watch;
    Outcome outcome;
    TestRng rng(0x5eed0001);
    std::size_t instances = 0;
    std::size_t checks = 0;

    for (std::size_t rep = 0; rep < 61 && outcome.pass; ++rep) {
        for (std::size_t n = 2; n <= 12 && outcome.pass; ++n) {
            for (std::size_t m = 1; m <= 3 && outcome.pass; ++m) {
                const std::uint64_t seed = rng.next();
                const PointSet points = generate_normal(n, m, seed);
                ++instances;
                for (std::size_t c1 = 0; c1 <= n && outcome.pass; ++c1) {
                    const CardinalityConstraint constraint{c1, n - c1};
                    const double best =
                        oracle::brute_force_mdcc(points, constraint).first;
                    for (const SolveVariant variant :
                         {SolveVariant::Full, SolveVariant::Heap}) {
                        const DispersionResult result =
                            solve(points, constraint, variant);
                        ++checks;
                        if (result.dispersion != best) {
                            outcome.fail(
                                "dispersion mismatch at n=" +
                                std::to_string(n) + " m=" + std::to_string(m) +
                                " c1=" + std::to_string(c1) + " seed=" +
                                std::to_string(seed) + ": got " +
                                format_dispersion(result.dispersion) +
                                " want " + format_dispersion(best));
                            break;
                        }
                        if (!result.assignment.satisfies(constraint) ||
                            dispersion_of(points, result.assignment) != best) {
                            outcome.fail("assignment does not achieve the "
                                         "optimum at n=" +
                                         std::to_string(n) +
                                         " c1=" + std::to_string(c1) +
                                         " seed=" + std::to_string(seed));
                            break;
                        }
                    }
                }
            }
        }
    }

    if (outcome.pass && instances < 2000) {
        outcome.fail("only " + std::to_string(instances) + " instances");
    }
    const double elapsed = watch.seconds();
    if (outcome.pass && elapsed >= 120.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 120s");
    }
    if (outcome.pass) {
        outcome.detail = std::to_string(instances) + " instances, " +
                         std::to_string(checks) + " solver-vs-search checks";
    }
    report(1, "exhaustive-search agreement", outcome, elapsed);
    return outcome.pass;
}

// --- criterion 2: coloring feasibility matches exhaustive search -----------

void check_graph_all_splits(const ThresholdGraph& graph, Outcome& outcome,
                            std::size_t& checks, const std::string& label) {
    const std::size_t n = graph.vertex_count();
    for (std::size_t c1 = 0; c1 <= n && outcome.pass; ++c1) {
        const CardinalityConstraint constraint{c1, n - c1};
        const std::optional<Assignment> mine = solve_2colcc(graph, constraint);
        const std::optional<Assignment> ref =
            oracle::brute_force_2colcc(graph, constraint);
        ++checks;
        if (mine.has_value() != ref.has_value()) {
            outcome.fail("feasibility disagrees on " + label +
                         " c1=" + std::to_string(c1) + ": solver says " +
                         (mine ? "yes" : "no"));
            return;
        }
        if (mine && (!coloring_is_proper(graph, *mine) ||
                     !mine->satisfies(constraint))) {
            outcome.fail("coloring invalid on " + label +
                         " c1=" + std::to_string(c1));
        }
    }
}

ThresholdGraph make_path(std::size_t n) {
    ThresholdGraph g(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

ThresholdGraph make_cycle(std::size_t n) {
    ThresholdGraph g(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, static_cast<std::uint32_t>(n - 1));
    return g;
}

ThresholdGraph make_star(std::size_t leaves) {
    ThresholdGraph g(leaves + 1);
    for (std::uint32_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

/// Disjoint union of a path and a cycle laid out back to back.
ThresholdGraph make_path_plus_cycle(std::size_t path_n, std::size_t cycle_n) {
    ThresholdGraph g(path_n + cycle_n);
    for (std::uint32_t i = 0; i + 1 < path_n; ++i) g.add_edge(i, i + 1);
    const auto base = static_cast<std::uint32_t>(path_n);
    for (std::uint32_t i = 0; i + 1 < cycle_n; ++i) {
        g.add_edge(base + i, base + i + 1);
    }
    g.add_edge(base, base + static_cast<std::uint32_t>(cycle_n - 1));
    return g;
}

ThresholdGraph make_two_cycles(std::size_t a, std::size_t b) {
    ThresholdGraph g(a + b);
    for (std::uint32_t i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, static_cast<std::uint32_t>(a - 1));
    const auto base = static_cast<std::uint32_t>(a);
    for (std::uint32_t i = 0; i + 1 < b; ++i) g.add_edge(base + i, base + i + 1);
    g.add_edge(base, base + static_cast<std::uint32_t>(b - 1));
    return g;
}

bool criterion_coloring() {
    Stopwatch watch;
    Outcome outcome;
    TestRng rng(0x5eed0002);
    std::size_t graphs = 0;
    std::size_t checks = 0;

    // Structured families first: paths, even and odd cycles, stars, and
    // disjoint unions mixing them.
    for (std::size_t n = 1; n <= 14 && outcome.pass; ++n) {
        check_graph_all_splits(make_path(n), outcome, checks,
                               "path-" + std::to_string(n));
        ++graphs;
    }
    for (std::size_t n = 3; n <= 14 && outcome.pass; ++n) {
        check_graph_all_splits(make_cycle(n), outcome, checks,
                               "cycle-" + std::to_string(n));
        ++graphs;
    }
    for (std::size_t leaves = 1; leaves <= 13 && outcome.pass; ++leaves) {
        check_graph_all_splits(make_star(leaves), outcome, checks,
                               "star-" + std::to_string(leaves));
        ++graphs;
    }
    const std::pair<std::size_t, std::size_t> path_cycle_unions[] = {
        {1, 3}, {2, 4}, {3, 3}, {3, 5}, {4, 4}, {5, 3}, {4, 6}, {6, 5}};
    for (const auto& [p, c] : path_cycle_unions) {
        if (!outcome.pass) break;
        check_graph_all_splits(make_path_plus_cycle(p, c), outcome, checks,
                               "path" + std::to_string(p) + "+cycle" +
                                   std::to_string(c));
        ++graphs;
    }
    const std::pair<std::size_t, std::size_t> cycle_unions[] = {
        {3, 3}, {3, 4}, {4, 4}, {3, 5}, {5, 4}, {5, 5}, {6, 4}, {3, 6}};
    for (const auto& [a, b] : cycle_unions) {
        if (!outcome.pass) break;
        check_graph_all_splits(make_two_cycles(a, b), outcome, checks,
                               "cycle" + std::to_string(a) + "+cycle" +
                                   std::to_string(b));
        ++graphs;
    }

    // 2000 random sparse-to-medium graphs across all sizes the exhaustive
    // reference can handle, on top of the structured families.
    const std::size_t structured = graphs;
    const double edge_probs[] = {0.05, 0.1, 0.15, 0.2, 0.25,
                                 0.3,  0.35, 0.4, 0.45, 0.5};
    for (std::size_t i = 0; i < 2000 && outcome.pass; ++i) {
        const std::size_t n = 2 + rng.below(13); // 2..14
        const double p = edge_probs[rng.below(10)];
        ThresholdGraph g(n);
        for (std::uint32_t u = 0; u + 1 < n; ++u) {
            for (std::uint32_t v = u + 1; v < n; ++v) {
                if (rng.uniform01() < p) g.add_edge(u, v);
            }
        }
        check_graph_all_splits(g, outcome, checks,
                               "random-" + std::to_string(i));
        ++graphs;
    }

    const double elapsed = watch.seconds();
    if (outcome.pass && elapsed >= 60.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 60s");
    }
    if (outcome.pass) {
        outcome.detail = std::to_string(graphs - structured) + " random + " +
                         std::to_string(structured) + " structured graphs, " +
                         std::to_string(checks) + " split checks";
    }
    report(2, "coloring-feasibility agreement", outcome, elapsed);
    return outcome.pass;
}

// --- criterion 3: subset-sum table vs exhaustive enumeration ---------------

bool criterion_subset_sum() {
    Stopwatch watch;
    Outcome outcome;
    TestRng rng(0x5eed0003);
    std::size_t multisets = 0;
    std::size_t target_checks = 0;

    // The one known way to go wrong: reusing a summand on the backtrack
    // chain. Inputs [2, 2] reaching 4 must use both indices.
    {
        const std::vector<std::size_t> values{2, 2};
        const SubsetSumTable table = subset_sum_table(values);
        const std::vector<std::size_t> chain = table.backtrack(4);
        if (chain != std::vector<std::size_t>{2, 1}) {
            outcome.fail("chain for [2,2] target 4 reused a summand");
        }
    }

    while (multisets < 520 && outcome.pass) {
        const std::size_t size = rng.below(16); // 0..15
        std::vector<std::size_t> values(size);
        for (auto& v : values) v = 1 + rng.below(10);
        ++multisets;

        const SubsetSumTable table = subset_sum_table(values);
        std::size_t total = 0;
        for (const auto v : values) total += v;
        if (table.total() != total) {
            outcome.fail("table total wrong for multiset " +
                         std::to_string(multisets));
            break;
        }

        for (std::size_t target = 0; target <= total + 2; ++target) {
            const bool mine = table.reachable(target);
            const bool ref = oracle::brute_force_subset_sum(values, target);
            ++target_checks;
            if (mine != ref) {
                outcome.fail("reachability of " + std::to_string(target) +
                             " disagrees on multiset " +
                             std::to_string(multisets));
                break;
            }
            const std::optional<std::vector<std::size_t>> chain =
                subset_sum_chain(values, target);
            if (chain.has_value() != mine) {
                outcome.fail("single-target chain disagrees with the table "
                             "on multiset " + std::to_string(multisets));
                break;
            }
            if (!mine) continue;

            const std::vector<std::size_t> steps = table.backtrack(target);
            if (steps != *chain) {
                outcome.fail("chain and table backtrack differ on multiset " +
                             std::to_string(multisets));
                break;
            }
            std::size_t sum = 0;
            bool ordered = true;
            for (std::size_t i = 0; i < steps.size(); ++i) {
                if (steps[i] < 1 || steps[i] > values.size()) ordered = false;
                if (i > 0 && steps[i] >= steps[i - 1]) ordered = false;
                if (ordered) sum += values[steps[i] - 1];
            }
            if (!ordered || sum != target) {
                outcome.fail("backtrack chain malformed for target " +
                             std::to_string(target) + " on multiset " +
                             std::to_string(multisets));
                break;
            }
        }
    }

    const double elapsed = watch.seconds();
    if (outcome.pass && elapsed >= 30.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 30s");
    }
    if (outcome.pass) {
        outcome.detail = std::to_string(multisets) + " multisets, " +
                         std::to_string(target_checks) + " targets";
    }
    report(3, "subset-sum agreement", outcome, elapsed);
    return outcome.pass;
}

// --- criterion 4: both variants return identical dispersions ---------------

bool criterion_variant_agreement() {
    Stopwatch watch;
    Outcome outcome;
    TestRng rng(0x5eed0004);
    std::size_t instances = 0;
    std::size_t fallbacks = 0;

    while (instances < 510 && outcome.pass) {
        const std::size_t n = 2 + rng.below(299); // 2..300
        const std::size_t m = 1 + rng.below(3);
        const std::uint64_t seed = rng.next();
        const PointSet points = generate_normal(n, m, seed);
        const std::size_t c1 = rng.below(n + 1);
        const CardinalityConstraint constraint{c1, n - c1};
        ++instances;

        const DispersionResult full = solve(points, constraint,
                                            SolveVariant::Full);
        const DispersionResult heap = solve(points, constraint,
                                            SolveVariant::Heap);
        if (heap.fallback_triggered) ++fallbacks;
        if (full.dispersion != heap.dispersion) {
            outcome.fail("variants disagree at n=" + std::to_string(n) +
                         " m=" + std::to_string(m) + " c1=" +
                         std::to_string(c1) + " seed=" + std::to_string(seed));
            break;
        }
        if (dispersion_of(points, full.assignment) != full.dispersion ||
            dispersion_of(points, heap.assignment) != heap.dispersion) {
            outcome.fail("assignment does not reproduce the dispersion at "
                         "n=" + std::to_string(n) + " seed=" +
                         std::to_string(seed));
            break;
        }
    }

    // Constructed instances whose bounded sweep finishes feasibly, forcing
    // the rerun: the unit square under a balanced split (retained pairs are
    // the four sides, an even cycle) and the two-point instance.
    if (outcome.pass) {
        const PointSet square({0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0}, 4, 2);
        const DispersionResult full = solve(square, {2, 2}, SolveVariant::Full);
        const DispersionResult heap = solve(square, {2, 2}, SolveVariant::Heap);
        ++instances;
        if (!heap.fallback_triggered) {
            outcome.fail("unit square did not trigger the rerun");
        } else if (heap.dispersion != full.dispersion ||
                   heap.assignment.groups != full.assignment.groups) {
            outcome.fail("unit square rerun disagrees with the full variant");
        } else {
            ++fallbacks;
        }
    }
    if (outcome.pass) {
        const PointSet pair({0.0, 5.0}, 2, 1);
        const DispersionResult full = solve(pair, {1, 1}, SolveVariant::Full);
        const DispersionResult heap = solve(pair, {1, 1}, SolveVariant::Heap);
        ++instances;
        if (!heap.fallback_triggered) {
            outcome.fail("two-point instance did not trigger the rerun");
        } else if (heap.dispersion != full.dispersion) {
            outcome.fail("two-point rerun disagrees with the full variant");
        } else {
            ++fallbacks;
        }
    }
    if (outcome.pass && fallbacks == 0) {
        outcome.fail("no instance exercised the rerun path");
    }

    const double elapsed = watch.seconds();
    if (outcome.pass && elapsed >= 120.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 120s");
    }
    if (outcome.pass) {
        outcome.detail = std::to_string(instances) + " instances, " +
                         std::to_string(fallbacks) + " rerun(s) exercised";
    }
    report(4, "variant agreement", outcome, elapsed);
    return outcome.pass;
}

// --- criterion 5: the bounded variant stays fast at n = 10,000 -------------

bool criterion_large_instance() {
    Stopwatch watch;
    Outcome outcome;

    const PointSet points = generate_normal(10000, 2, 1);
    const Stopwatch solve_watch;
    const DispersionResult result = solve(points, {5000, 5000},
                                          SolveVariant::Heap);
    const double solve_s = solve_watch.seconds();

    if (solve_s >= 10.0) {
        outcome.fail("solve took " + std::to_string(solve_s) + "s");
    }
    // The answer must have come from the bounded pair set alone — a rerun
    // would mean quadratic work happened.
    if (outcome.pass && (result.variant != ExecutedVariant::HeapOnly ||
                         result.fallback_triggered)) {
        outcome.fail("bounded sweep fell back to the quadratic path");
    }
    if (outcome.pass &&
        (!std::isfinite(result.dispersion) || result.dispersion <= 0.0)) {
        outcome.fail("implausible dispersion " +
                     format_dispersion(result.dispersion));
    }
    if (outcome.pass) {
        char buffer[128];
        std::snprintf(buffer, sizeof buffer,
                      "n=10000 solved in %.2fs, dispersion=%s, %zu thresholds",
                      solve_s, format_dispersion(result.dispersion).c_str(),
                      result.iterations_used);
        outcome.detail = buffer;
    }
    report(5, "large-instance latency", outcome, watch.seconds());
    return outcome.pass;
}

// --- criterion 6: timing and memory scaling across the grid ----------------

struct BenchRow {
    std::size_t n = 0;
    std::string variant;
    double ms = 0.0;
    long long mem = -1;
    bool mem_known = false;
};

std::optional<std::vector<BenchRow>> read_bench_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) ||
        line != "n,variant,repetition,ms,peak_mem_bytes") {
        return std::nullopt;
    }
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string n_text, variant, rep, ms, mem;
        if (!std::getline(fields, n_text, ',') ||
            !std::getline(fields, variant, ',') ||
            !std::getline(fields, rep, ',') ||
            !std::getline(fields, ms, ',') || !std::getline(fields, mem)) {
            return std::nullopt;
        }
        BenchRow row;
        row.n = std::stoull(n_text);
        row.variant = variant;
        row.ms = std::stod(ms);
        if (mem != "NA") {
            row.mem = std::stoll(mem);
            row.mem_known = true;
        }
        rows.push_back(row);
    }
    return rows;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size() / 2;
    if (values.size() % 2 == 1) return values[k];
    return 0.5 * (values[k - 1] + values[k]);
}

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<std::pair<double, double>>& points) {
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += std::log(x);
        mean_y += std::log(y);
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());
    double num = 0.0;
    double den = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mean_x;
        num += dx * (std::log(y) - mean_y);
        den += dx * dx;
    }
    return num / den;
}

bool criterion_scaling() {
    Stopwatch watch;
    Outcome outcome;

    const std::string csv_path =
        (std::filesystem::temp_directory_path() / "maxdisp_acceptance_bench.csv")
            .string();
    const std::string stdout_path =
        (std::filesystem::temp_directory_path() /
         "maxdisp_acceptance_bench_stdout.txt")
            .string();
    const std::string cmd = std::string("\"") + MAXDISP_CLI_PATH +
                            "\" --bench 1000:10000:1000 --reps 10 --seed 1 "
                            "--bench-out \"" + csv_path + "\" >\"" +
                            stdout_path + "\"";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        outcome.fail("benchmark command failed");
    }

    std::map<std::size_t, std::vector<double>> full_ms, heap_ms;
    std::map<std::size_t, std::vector<double>> full_mem, heap_mem;
    if (outcome.pass) {
        const auto rows = read_bench_csv(csv_path);
        if (!rows || rows->size() != 10 * 2 * 10) {
            outcome.fail("benchmark table malformed");
        } else {
            for (const BenchRow& row : *rows) {
                if (!row.mem_known) {
                    outcome.fail("memory unknown for n=" +
                                 std::to_string(row.n) + " " + row.variant);
                    break;
                }
                auto& ms = row.variant == "full" ? full_ms : heap_ms;
                auto& mem = row.variant == "full" ? full_mem : heap_mem;
                ms[row.n].push_back(row.ms);
                mem[row.n].push_back(static_cast<double>(row.mem));
            }
        }
    }

    double full_slope = 0.0;
    double heap_slope = 0.0;
    if (outcome.pass) {
        std::vector<std::pair<double, double>> full_fit, heap_fit;
        for (std::size_t n = 1000; n <= 10000; n += 1000) {
            full_fit.emplace_back(static_cast<double>(n),
                                  median(full_mem[n]));
            heap_fit.emplace_back(static_cast<double>(n),
                                  median(heap_mem[n]));
        }
        full_slope = log_log_slope(full_fit);
        heap_slope = log_log_slope(heap_fit);
        if (heap_slope >= 1.5) {
            outcome.fail("bounded-variant memory grows too fast: slope " +
                         std::to_string(heap_slope));
        } else if (full_slope <= 1.5) {
            outcome.fail("full-variant memory slope " +
                         std::to_string(full_slope) +
                         " is not clearly quadratic");
        }
    }
    if (outcome.pass) {
        for (std::size_t n = 2000; n <= 10000; n += 1000) {
            const double f = median(full_ms[n]);
            const double h = median(heap_ms[n]);
            if (h > f) {
                outcome.fail("bounded variant slower at n=" +
                             std::to_string(n) + ": " + std::to_string(h) +
                             "ms vs " + std::to_string(f) + "ms");
                break;
            }
        }
    }

    if (outcome.pass) {
        char buffer[160];
        std::snprintf(buffer, sizeof buffer,
                      "mem slope full=%.2f heap=%.2f, heap median never "
                      "slower past n=1000",
                      full_slope, heap_slope);
        outcome.detail = buffer;
    }
    report(6, "scaling trends", outcome, watch.seconds());
    return outcome.pass;
}

// --- criterion 7: the bounded sweep usually decides on its own -------------

bool criterion_fallback_fraction() {
    Stopwatch watch;
    Outcome outcome;

    const std::size_t runs = 100;
    std::size_t fallbacks = 0;
    for (std::size_t seed = 1; seed <= runs; ++seed) {
        const PointSet points = generate_normal(1000, 2, seed);
        const DispersionResult result =
            solve(points, {500, 500}, SolveVariant::Heap);
        if (result.fallback_triggered) ++fallbacks;
    }
    const double fraction =
        static_cast<double>(fallbacks) / static_cast<double>(runs);
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "rerun fraction %.2f over %zu runs",
                  fraction, runs);
    outcome.detail = buffer;
    if (fraction >= 0.5) {
        outcome.fail(buffer);
    }
    report(7, "rerun fraction", outcome, watch.seconds());
    return outcome.pass;
}

} // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion 1..7]\n", argv[0]);
        return 64;
    }
    if (argc == 2) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 7) {
            std::fprintf(stderr, "usage: %s [criterion 1..7]\n", argv[0]);
            return 64;
        }
    }

    using Criterion = bool (*)();
    const Criterion criteria[] = {
        criterion_optimality,        criterion_coloring,
        criterion_subset_sum,        criterion_variant_agreement,
        criterion_large_instance,    criterion_scaling,
        criterion_fallback_fraction,
    };

    int failures = 0;
    for (int i = 0; i < 7; ++i) {
        if (selected != 0 && selected != i + 1) continue;
        if (!criteria[i]()) ++failures;
    }
    return failures;
}
