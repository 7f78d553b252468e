#ifndef MAXDISP_IO_HPP
#define MAXDISP_IO_HPP

#include "maxdisp/types.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace maxdisp {

/// Parses comma-separated feature rows. An optional single header row is
/// auto-detected: the first row is a header iff its first field does not
/// parse as a number. Column counts must match across rows. Reported row and
/// column positions are 1-based and count the header row.
/// Throws ParseError, NonFiniteFeature, or EmptyFile.
PointSet parse_points_csv(const std::string& content);

/// parse_points_csv over the file's bytes. Throws ParseError when the file
/// cannot be opened.
PointSet ingest_csv(const std::string& path);

/// Writes "item_index,group" rows, one item per row, groups 1 or 2.
void write_assignment_csv(const std::string& path, const Assignment& assignment);

/// Reads an assignment CSV back (header required, groups must be 1 or 2).
Assignment read_assignment_csv(const std::string& path);

/// 17-significant-digit decimal, or "inf" for the no-same-group-pair
/// sentinel; round-trips doubles exactly.
std::string format_dispersion(double dispersion);

/// Inverse of format_dispersion. Throws ParseError on malformed text.
double parse_dispersion(const std::string& text);

/// Solver outcome plus run metadata, serialized as key=value lines.
struct SolveSummary {
    double dispersion = 0.0;
    std::size_t iterations_used = 0;
    bool fallback_triggered = false;
    ExecutedVariant variant = ExecutedVariant::FullSort;
    double wall_ms = 0.0;
    long long peak_mem_bytes = -1; ///< -1 when the platform gave no figure
};

void write_summary(std::ostream& out, const SolveSummary& summary);
void write_summary(const std::string& path, const SolveSummary& summary);

} // namespace maxdisp

#endif
