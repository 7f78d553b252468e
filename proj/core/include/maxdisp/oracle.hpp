#ifndef MAXDISP_ORACLE_HPP
#define MAXDISP_ORACLE_HPP

#include "maxdisp/graph.hpp"
#include "maxdisp/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

namespace maxdisp::oracle {

/// Exhaustive maximum over all C(n, c1) cardinality-exact partitions; returns
/// the best dispersion and the first witness reaching it. Deliberately shares
/// no sweep, graph, or DP code with the production solver.
/// Throws InstanceTooLarge when C(n, c1) exceeds 10^6.
std::pair<double, Assignment>
brute_force_mdcc(const PointSet& points, const CardinalityConstraint& constraint);

/// First proper coloring with exactly c1 ones over all 2^n label masks, or
/// nullopt. Throws InstanceTooLarge when n exceeds 20.
std::optional<Assignment>
brute_force_2colcc(const ThresholdGraph& graph,
                   const CardinalityConstraint& constraint);

/// Whether some sub-multiset sums to target, by 2^|S| enumeration.
/// Throws InstanceTooLarge when |S| exceeds 20.
bool brute_force_subset_sum(std::span<const std::size_t> values,
                            std::size_t target);

/// Odd-cycle-freeness via union-find with parity — no BFS leveling, so it
/// cross-checks the production bipartition structurally.
bool parity_dsu_is_bipartite(const ThresholdGraph& graph);

} // namespace maxdisp::oracle

#endif
