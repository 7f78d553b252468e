#ifndef MAXDISP_COLORING_HPP
#define MAXDISP_COLORING_HPP

#include "maxdisp/graph.hpp"
#include "maxdisp/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace maxdisp {

/// Backtrackable subset-sum reachability table over component imbalances.
///
/// cell(x) is unreachable, or records the 1-based input index and value of
/// the summand that first reached x. Updates are first-write-wins: a cell is
/// assigned only while unreachable, which guarantees that every backtracking
/// chain x -> x - value visits strictly decreasing input indices, so no
/// summand is ever used twice on a chain. (An unconditional overwrite breaks
/// this: with inputs [2, 2] and target 4, the chain would take index 2 twice.)
class SubsetSumTable {
public:
    struct Cell {
        std::int32_t component; ///< 1-based input index; 0 at cell 0; -1 unreachable
        std::int32_t value;
    };

    explicit SubsetSumTable(std::size_t total);

    /// Sum of all inputs; cells cover 0..total().
    std::size_t total() const { return cells_.size() - 1; }

    bool reachable(std::size_t sum) const {
        return sum < cells_.size() && cells_[sum].component >= 0;
    }

    const Cell& cell(std::size_t sum) const { return cells_.at(sum); }

    /// Chain of 1-based input indices reaching target, in the strictly
    /// decreasing order the links are followed. Throws when unreachable.
    std::vector<std::size_t> backtrack(std::size_t target) const;

private:
    friend SubsetSumTable subset_sum_table(std::span<const std::size_t>);
    std::vector<Cell> cells_;
};

/// Builds the DP table for one multiset of positive imbalances, iterating
/// inputs in ascending index and sums in descending order.
SubsetSumTable subset_sum_table(std::span<const std::size_t> imbalances);

/// Backtracking chain for a single target: equal to
/// subset_sum_table(imbalances).backtrack(target) when the target is
/// reachable, nullopt otherwise. Stops filling cells once the target's cell
/// is written — sound because chain links only ever point at cells written
/// in strictly earlier passes, which first-write-wins makes final — so the
/// common mostly-singleton case costs O(target) instead of O(|S| * total).
std::optional<std::vector<std::size_t>>
subset_sum_chain(std::span<const std::size_t> imbalances, std::size_t target);

/// Proper 2-coloring of the graph with exactly c1 vertices of color 1 and c2
/// of color 2, or nullopt when none exists. Labels are 1 and 2.
std::optional<Assignment> solve_2colcc(const ThresholdGraph& graph,
                                       const CardinalityConstraint& constraint);

} // namespace maxdisp

#endif
