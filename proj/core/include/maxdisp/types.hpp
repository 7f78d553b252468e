#ifndef MAXDISP_TYPES_HPP
#define MAXDISP_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxdisp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteFeature : public Error {
public:
    using Error::Error;
};

class CardinalityMismatch : public Error {
public:
    using Error::Error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class EmptyFile : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

/// Sentinel dispersion for partitions with no intra-group pair.
inline constexpr double kInfiniteDispersion =
    std::numeric_limits<double>::infinity();

/// n items with m real-valued features, stored row-major.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::vector<double> data, std::size_t n, std::size_t m);

    /// Builds from one vector per item; all rows must share one length.
    static PointSet from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return m_; }

    std::span<const double> point(std::size_t i) const {
        return {data_.data() + i * m_, m_};
    }

    const std::vector<double>& data() const { return data_; }

private:
    std::vector<double> data_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
};

/// Required group sizes; c1 + c2 must equal the point count.
struct CardinalityConstraint {
    std::size_t c1 = 0;
    std::size_t c2 = 0;
};

/// One unordered pair with its squared Euclidean distance, u < v.
struct DistanceEntry {
    double d2;
    std::uint32_t u;
    std::uint32_t v;
};

/// Group labels, one per item, each 1 or 2.
struct Assignment {
    std::vector<std::uint8_t> groups;

    std::size_t count_group1() const;
    bool satisfies(const CardinalityConstraint& constraint) const;
};

enum class SolveVariant { Full, Heap, Auto };

enum class ExecutedVariant { FullSort, HeapThenFallback, HeapOnly };

const char* to_string(ExecutedVariant variant);

struct DispersionResult {
    /// Euclidean dispersion; kInfiniteDispersion when no same-group pair exists.
    double dispersion = 0.0;
    Assignment assignment;
    /// Distinct distance values processed by the sweep that produced the result.
    std::size_t iterations_used = 0;
    ExecutedVariant variant = ExecutedVariant::FullSort;
    bool fallback_triggered = false;
};

/// Throws NonFiniteFeature or CardinalityMismatch when the pair is not a
/// well-formed instance. Raggedness is impossible post-construction; it is
/// rejected by PointSet::from_rows.
void validate_instance(const PointSet& points,
                       const CardinalityConstraint& constraint);

/// Squared Euclidean distance, accumulated over features in index order so
/// results are bit-reproducible.
inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        acc += diff * diff;
    }
    return acc;
}

inline double squared_distance(const PointSet& points, std::size_t u,
                               std::size_t v) {
    return squared_distance(points.point(u), points.point(v));
}

/// Minimum Euclidean distance over all same-group pairs;
/// kInfiniteDispersion when no such pair exists.
double dispersion_of(const PointSet& points, const Assignment& assignment);

} // namespace maxdisp

#endif
