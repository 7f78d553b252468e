#ifndef MAXDISP_SOLVER_HPP
#define MAXDISP_SOLVER_HPP

#include "maxdisp/distances.hpp"
#include "maxdisp/types.hpp"

#include <cstddef>
#include <span>

namespace maxdisp {

/// First c1 items in group 1, the rest in group 2 — a valid coloring of the
/// edgeless graph, used as the pre-sweep assignment.
Assignment canonical_assignment(std::size_t item_count,
                                const CardinalityConstraint& constraint);

/// What a threshold sweep over an ascending distance list ended with.
struct SweepOutcome {
    /// Some threshold's edge batch made the coloring infeasible.
    bool broke = false;
    /// Squared distance at the infeasible threshold; meaningful when broke.
    double break_d2 = 0.0;
    /// Last threshold whose batch was added; meaningful when at least one
    /// threshold was processed.
    double last_d2 = 0.0;
    /// Feasible coloring of the graph before the breaking batch (or of the
    /// whole list when the sweep never broke).
    Assignment last_feasible;
    /// Distinct distance values processed, counting the breaking one.
    std::size_t thresholds_processed = 0;
};

/// Sweeps thresholds in ascending order: each batch of pairs sharing one
/// squared distance enters the graph, then the coloring feasibility check
/// runs. Stops at the first infeasible threshold. `distances` must be sorted
/// ascending with equal values contiguous (both producers guarantee this).
SweepOutcome run_sweep(std::span<const DistanceEntry> distances,
                       std::size_t item_count,
                       const CardinalityConstraint& constraint);

/// Sorts all n(n-1)/2 pairs, then sweeps. Requires c1 >= 1 and c2 >= 1
/// (empty-group constraints are handled by solve).
DispersionResult solve_full(const PointSet& points,
                            const CardinalityConstraint& constraint);

/// Sweeps only the n smallest pairs, kept by a bounded max-heap. If that
/// sweep finishes without an infeasible threshold the answer is not decided
/// by the retained pairs, so the full variant reruns from scratch and
/// fallback_triggered is set. Dispersion always equals solve_full's.
DispersionResult solve_heap(const PointSet& points,
                            const CardinalityConstraint& constraint);

/// Validates, handles empty-group constraints directly (dispersion is the
/// minimum pairwise distance, every item in the nonempty group), then
/// dispatches on the variant. Auto resolves to the heap variant.
DispersionResult solve(const PointSet& points,
                       const CardinalityConstraint& constraint,
                       SolveVariant variant = SolveVariant::Auto);

} // namespace maxdisp

#endif
