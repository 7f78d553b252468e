#ifndef MAXDISP_DISTANCES_HPP
#define MAXDISP_DISTANCES_HPP

#include "maxdisp/types.hpp"

#include <cstdint>
#include <vector>

namespace maxdisp {

/// Entries ascending by squared distance, ties by (u, v).
using SortedDistanceList = std::vector<DistanceEntry>;

inline bool distance_entry_less(const DistanceEntry& a, const DistanceEntry& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
}

/// Visits every unordered pair u < v in row-major order with its squared
/// distance. This is the single pair enumeration used everywhere, so distance
/// values and their order are identical across call sites.
template <class F>
void for_each_pair(const PointSet& points, F&& f) {
    const std::size_t n = points.size();
    for (std::uint32_t u = 0; u + 1 < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            f(squared_distance(points, u, v), u, v);
        }
    }
}

/// All n(n-1)/2 pairs, sorted. Materializes the full list.
SortedDistanceList all_distances_sorted(const PointSet& points);

/// The min(n, n(n-1)/2) smallest pairs via a capacity-n max-heap over the
/// pair stream, sorted ascending. Pairs tied with the final maximum may be
/// partially excluded. Peak extra memory is O(n).
SortedDistanceList smallest_n_distances(const PointSet& points);

/// Minimum squared pairwise distance, streamed. Requires n >= 2.
double min_pairwise_d2(const PointSet& points);

} // namespace maxdisp

#endif
