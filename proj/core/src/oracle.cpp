#include "maxdisp/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace maxdisp::oracle {

namespace {

constexpr std::uint64_t kMaxPartitions = 1'000'000;

std::uint64_t binomial_guarded(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t value = 1;
    for (std::size_t step = 1; step <= k; ++step) {
        // Multiply-then-divide keeps every prefix an exact integer.
        value = value * (n - k + step) / step;
        if (value > kMaxPartitions) {
            throw InstanceTooLarge("partition count exceeds " +
                                   std::to_string(kMaxPartitions));
        }
    }
    return value;
}

/// Minimum squared same-group distance of one labeling, or +infinity when no
/// same-group pair exists. Local distance loop, not the solver's enumeration.
double min_same_group_d2(const PointSet& points,
                         const std::vector<std::uint8_t>& groups) {
    const std::size_t n = points.size();
    const std::size_t m = points.dim();
    const double* data = points.data().data();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u + 1 < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (groups[u] != groups[v]) continue;
            double acc = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double diff = data[u * m + k] - data[v * m + k];
                acc += diff * diff;
            }
            if (acc < best) best = acc;
        }
    }
    return best;
}

} // namespace

std::pair<double, Assignment>
brute_force_mdcc(const PointSet& points,
                 const CardinalityConstraint& constraint) {
    validate_instance(points, constraint);
    const std::size_t n = points.size();
    const std::size_t c1 = constraint.c1;
    binomial_guarded(n, c1);

    std::vector<std::size_t> chosen(c1);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});

    std::vector<std::uint8_t> groups(n);
    double best_d2 = -1.0;
    Assignment best;
    while (true) {
        std::fill(groups.begin(), groups.end(), std::uint8_t{2});
        for (const std::size_t i : chosen) groups[i] = 1;
        const double d2 = min_same_group_d2(points, groups);
        if (d2 > best_d2) {
            best_d2 = d2;
            best.groups = groups;
        }

        // Advance to the next size-c1 index combination, lexicographically.
        std::size_t pos = c1;
        while (pos > 0 && chosen[pos - 1] == n - c1 + pos - 1) --pos;
        if (pos == 0) break;
        ++chosen[pos - 1];
        for (std::size_t i = pos; i < c1; ++i) chosen[i] = chosen[i - 1] + 1;
    }

    const double dispersion = std::isinf(best_d2) ? kInfiniteDispersion
                                                  : std::sqrt(best_d2);
    return {dispersion, std::move(best)};
}

std::optional<Assignment>
brute_force_2colcc(const ThresholdGraph& graph,
                   const CardinalityConstraint& constraint) {
    const std::size_t n = graph.vertex_count();
    if (n > 20) {
        throw InstanceTooLarge("coloring enumeration limited to 20 vertices");
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(graph.edge_count());
    for (std::uint32_t u = 0; u < n; ++u) {
        for (const std::uint32_t v : graph.neighbors(u)) {
            if (u < v) edges.emplace_back(u, v);
        }
    }

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != static_cast<int>(constraint.c1)) continue;
        bool proper = true;
        for (const auto& [u, v] : edges) {
            if (((mask >> u) & 1u) == ((mask >> v) & 1u)) {
                proper = false;
                break;
            }
        }
        if (!proper) continue;
        Assignment assignment;
        assignment.groups.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            assignment.groups[i] = ((mask >> i) & 1u) ? 1 : 2;
        }
        return assignment;
    }
    return std::nullopt;
}

bool brute_force_subset_sum(std::span<const std::size_t> values,
                            std::size_t target) {
    if (values.size() > 20) {
        throw InstanceTooLarge("subset enumeration limited to 20 values");
    }
    for (std::uint32_t mask = 0;
         mask < (std::uint32_t{1} << values.size()); ++mask) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if ((mask >> i) & 1u) sum += values[i];
        }
        if (sum == target) return true;
    }
    return false;
}

namespace {

/// Union-find where each node stores its parity relative to its parent.
class ParityDSU {
public:
    explicit ParityDSU(std::size_t n)
        : parent_(n), parity_(n, 0), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::pair<std::uint32_t, std::uint8_t> find(std::uint32_t x) {
        std::uint32_t root = x;
        std::uint8_t parity = 0;
        while (parent_[root] != root) {
            parity ^= parity_[root];
            root = parent_[root];
        }
        // Second pass: point everything on the walk straight at the root.
        std::uint32_t cur = x;
        std::uint8_t cur_parity = parity;
        while (parent_[cur] != root) {
            const std::uint32_t next = parent_[cur];
            const std::uint8_t next_parity = cur_parity ^ parity_[cur];
            parent_[cur] = root;
            parity_[cur] = cur_parity;
            cur = next;
            cur_parity = next_parity;
        }
        return {root, parity};
    }

    /// Joins u and v as endpoints of an edge (opposite parities). Returns
    /// false when they already share a root with equal parity — an odd cycle.
    bool unite_opposite(std::uint32_t u, std::uint32_t v) {
        auto [root_u, parity_u] = find(u);
        auto [root_v, parity_v] = find(v);
        if (root_u == root_v) return parity_u != parity_v;
        const std::uint8_t relative =
            static_cast<std::uint8_t>(parity_u ^ parity_v ^ 1u);
        if (rank_[root_u] < rank_[root_v]) std::swap(root_u, root_v);
        parent_[root_v] = root_u;
        parity_[root_v] = relative;
        if (rank_[root_u] == rank_[root_v]) ++rank_[root_u];
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::uint8_t> rank_;
};

} // namespace

bool parity_dsu_is_bipartite(const ThresholdGraph& graph) {
    ParityDSU dsu(graph.vertex_count());
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
        for (const std::uint32_t v : graph.neighbors(u)) {
            if (u < v && !dsu.unite_opposite(u, v)) return false;
        }
    }
    return true;
}

} // namespace maxdisp::oracle
