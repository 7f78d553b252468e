#include "maxdisp/distances.hpp"

#include <algorithm>

namespace maxdisp {

SortedDistanceList all_distances_sorted(const PointSet& points) {
    const std::size_t n = points.size();
    SortedDistanceList entries;
    if (n >= 2) {
        entries.reserve(n * (n - 1) / 2);
        for_each_pair(points, [&](double d2, std::uint32_t u, std::uint32_t v) {
            entries.push_back({d2, u, v});
        });
        std::sort(entries.begin(), entries.end(), distance_entry_less);
    }
    return entries;
}

SortedDistanceList smallest_n_distances(const PointSet& points) {
    const std::size_t n = points.size();
    SortedDistanceList heap;
    if (n < 2) return heap;

    const std::size_t capacity = n;
    heap.reserve(capacity);
    for_each_pair(points, [&](double d2, std::uint32_t u, std::uint32_t v) {
        // Boundary ties are dropped: the eviction test is strict on d2 only.
        if (heap.size() == capacity && d2 < heap.front().d2) {
            std::pop_heap(heap.begin(), heap.end(), distance_entry_less);
            heap.pop_back();
        }
        if (heap.size() < capacity) {
            heap.push_back({d2, u, v});
            std::push_heap(heap.begin(), heap.end(), distance_entry_less);
        }
    });
    std::sort_heap(heap.begin(), heap.end(), distance_entry_less);
    return heap;
}

double min_pairwise_d2(const PointSet& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("min_pairwise_d2 needs at least two points");
    }
    double best = kInfiniteDispersion;
    for_each_pair(points, [&](double d2, std::uint32_t, std::uint32_t) {
        if (d2 < best) best = d2;
    });
    return best;
}

} // namespace maxdisp
