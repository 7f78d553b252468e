#include "maxdisp/types.hpp"

#include <cmath>

namespace maxdisp {

PointSet::PointSet(std::vector<double> data, std::size_t n, std::size_t m)
    : data_(std::move(data)), n_(n), m_(m) {
    if (n_ == 0) {
        throw std::invalid_argument("point set must contain at least one point");
    }
    if (m_ == 0) {
        throw std::invalid_argument("points must have at least one feature");
    }
    if (data_.size() != n_ * m_) {
        throw DimensionMismatch("point data has " + std::to_string(data_.size()) +
                                " values, expected " + std::to_string(n_ * m_));
    }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("point set must contain at least one point");
    }
    const std::size_t m = rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) {
            throw DimensionMismatch("row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) +
                                    " features, expected " + std::to_string(m));
        }
        data.insert(data.end(), rows[i].begin(), rows[i].end());
    }
    return PointSet(std::move(data), rows.size(), m);
}

std::size_t Assignment::count_group1() const {
    std::size_t count = 0;
    for (const std::uint8_t g : groups) {
        if (g == 1) ++count;
    }
    return count;
}

bool Assignment::satisfies(const CardinalityConstraint& constraint) const {
    const std::size_t ones = count_group1();
    return ones == constraint.c1 && groups.size() - ones == constraint.c2;
}

const char* to_string(ExecutedVariant variant) {
    switch (variant) {
    case ExecutedVariant::FullSort: return "full_sort";
    case ExecutedVariant::HeapThenFallback: return "heap_then_fallback";
    case ExecutedVariant::HeapOnly: return "heap_only";
    }
    return "unknown";
}

void validate_instance(const PointSet& points,
                       const CardinalityConstraint& constraint) {
    for (std::size_t i = 0; i < points.data().size(); ++i) {
        if (!std::isfinite(points.data()[i])) {
            throw NonFiniteFeature("non-finite feature value at item " +
                                   std::to_string(i / points.dim()) +
                                   ", feature " + std::to_string(i % points.dim()));
        }
    }
    if (constraint.c1 + constraint.c2 != points.size()) {
        throw CardinalityMismatch(
            "group sizes " + std::to_string(constraint.c1) + " + " +
            std::to_string(constraint.c2) + " do not sum to item count " +
            std::to_string(points.size()));
    }
}

double dispersion_of(const PointSet& points, const Assignment& assignment) {
    const std::size_t n = points.size();
    if (assignment.groups.size() != n) {
        throw std::invalid_argument("assignment has " +
                                    std::to_string(assignment.groups.size()) +
                                    " labels, expected " + std::to_string(n));
    }
    double min_d2 = kInfiniteDispersion;
    bool found = false;
    for (std::size_t u = 0; u + 1 < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (assignment.groups[u] != assignment.groups[v]) continue;
            const double d2 = squared_distance(points, u, v);
            if (!found || d2 < min_d2) {
                min_d2 = d2;
                found = true;
            }
        }
    }
    return found ? std::sqrt(min_d2) : kInfiniteDispersion;
}

} // namespace maxdisp
