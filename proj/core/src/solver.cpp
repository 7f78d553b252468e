#include "maxdisp/solver.hpp"

#include "maxdisp/coloring.hpp"
#include "maxdisp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace maxdisp {

namespace {

void require_two_groups(const CardinalityConstraint& constraint) {
    if (constraint.c1 == 0 || constraint.c2 == 0) {
        throw std::invalid_argument(
            "empty-group constraints must go through solve()");
    }
}

DispersionResult finish(SweepOutcome&& sweep, ExecutedVariant variant,
                        bool fallback_triggered) {
    DispersionResult result;
    result.assignment = std::move(sweep.last_feasible);
    result.iterations_used = sweep.thresholds_processed;
    result.variant = variant;
    result.fallback_triggered = fallback_triggered;
    if (sweep.broke) {
        result.dispersion = std::sqrt(sweep.break_d2);
        return result;
    }
    // The sweep ran out of thresholds while still feasible. Feasibility of
    // the final graph means no same-group pair is closer than the last
    // threshold; with every pair in the graph a same-group pair cannot exist
    // at all, but the counts are what decide it.
    const std::size_t group1 = result.assignment.count_group1();
    const std::size_t group2 = result.assignment.groups.size() - group1;
    if (group1 >= 2 || group2 >= 2) {
        result.dispersion = std::sqrt(sweep.last_d2);
    } else {
        result.dispersion = kInfiniteDispersion;
    }
    return result;
}

} // namespace

Assignment canonical_assignment(std::size_t item_count,
                                const CardinalityConstraint& constraint) {
    Assignment assignment;
    assignment.groups.assign(item_count, 2);
    std::fill_n(assignment.groups.begin(), constraint.c1, std::uint8_t{1});
    return assignment;
}

SweepOutcome run_sweep(std::span<const DistanceEntry> distances,
                       std::size_t item_count,
                       const CardinalityConstraint& constraint) {
    SweepOutcome outcome;
    outcome.last_feasible = canonical_assignment(item_count, constraint);
    ThresholdGraph graph(item_count);
    std::size_t i = 0;
    while (i < distances.size()) {
        const double threshold_d2 = distances[i].d2;
        std::size_t j = i + 1;
        while (j < distances.size() && distances[j].d2 == threshold_d2) ++j;
        graph.add_edges(distances.subspan(i, j - i));
        ++outcome.thresholds_processed;
        outcome.last_d2 = threshold_d2;
        auto coloring = solve_2colcc(graph, constraint);
        if (!coloring) {
            outcome.broke = true;
            outcome.break_d2 = threshold_d2;
            return outcome;
        }
        outcome.last_feasible = std::move(*coloring);
        i = j;
    }
    return outcome;
}

DispersionResult solve_full(const PointSet& points,
                            const CardinalityConstraint& constraint) {
    validate_instance(points, constraint);
    require_two_groups(constraint);
    const SortedDistanceList distances = all_distances_sorted(points);
    return finish(run_sweep(distances, points.size(), constraint),
                  ExecutedVariant::FullSort, false);
}

DispersionResult solve_heap(const PointSet& points,
                            const CardinalityConstraint& constraint) {
    validate_instance(points, constraint);
    require_two_groups(constraint);
    const SortedDistanceList retained = smallest_n_distances(points);
    SweepOutcome sweep = run_sweep(retained, points.size(), constraint);
    if (sweep.broke) {
        return finish(std::move(sweep), ExecutedVariant::HeapOnly, false);
    }
    // Every retained pair fit a proper coloring, so the breaking threshold
    // (if any) lies beyond the retained horizon; rerun over all pairs.
    const SortedDistanceList distances = all_distances_sorted(points);
    return finish(run_sweep(distances, points.size(), constraint),
                  ExecutedVariant::HeapThenFallback, true);
}

DispersionResult solve(const PointSet& points,
                       const CardinalityConstraint& constraint,
                       SolveVariant variant) {
    validate_instance(points, constraint);
    if (constraint.c1 == 0 || constraint.c2 == 0) {
        DispersionResult result;
        const std::uint8_t label = constraint.c1 == 0 ? 2 : 1;
        result.assignment.groups.assign(points.size(), label);
        result.dispersion = points.size() < 2
                                ? kInfiniteDispersion
                                : std::sqrt(min_pairwise_d2(points));
        result.iterations_used = 0;
        result.fallback_triggered = false;
        result.variant = variant == SolveVariant::Full
                             ? ExecutedVariant::FullSort
                             : ExecutedVariant::HeapOnly;
        return result;
    }
    if (variant == SolveVariant::Full) return solve_full(points, constraint);
    return solve_heap(points, constraint);
}

} // namespace maxdisp
