#include "maxdisp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace maxdisp {

namespace {

struct NumberedLine {
    std::string_view text;
    std::size_t number; ///< 1-based physical line in the file
};

/// Non-blank lines with their physical positions; blank lines are skipped
/// but still counted, so error messages match what an editor shows.
std::vector<NumberedLine> split_lines(std::string_view content) {
    std::vector<NumberedLine> lines;
    std::size_t start = 0;
    std::size_t number = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++number;
        if (!line.empty()) lines.push_back({line, number});
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view field) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
        field.remove_suffix(1);
    }
    return field;
}

std::string position(std::size_t row, std::size_t col) {
    return "row " + std::to_string(row) + " col " + std::to_string(col);
}

/// Strict full-consumption double parse; nullopt on any syntax failure.
std::optional<double> try_parse_double(std::string_view field) {
    field = trim(field);
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
        // Syntactically a number; the caller decides how to report it.
        return field.front() == '-'
                   ? -std::numeric_limits<double>::infinity()
                   : std::numeric_limits<double>::infinity();
    }
    if (ec != std::errc() || end != field.data() + field.size()) {
        return std::nullopt;
    }
    return value;
}

double parse_feature(std::string_view field, std::size_t row, std::size_t col) {
    const std::string_view trimmed = trim(field);
    if (trimmed.empty()) {
        throw ParseError(position(row, col) + ": empty field");
    }
    const auto value = try_parse_double(trimmed);
    if (!value) {
        throw ParseError(position(row, col) + ": '" + std::string(trimmed) +
                         "' is not a number");
    }
    if (!std::isfinite(*value)) {
        throw NonFiniteFeature(position(row, col) + ": non-finite value '" +
                               std::string(trimmed) + "'");
    }
    return *value;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return std::move(buffer).str();
}

std::size_t parse_index_field(std::string_view field, std::size_t row,
                              std::size_t col) {
    const std::string_view trimmed = trim(field);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(
        trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (ec != std::errc() || trimmed.empty() ||
        end != trimmed.data() + trimmed.size()) {
        throw ParseError(position(row, col) + ": '" + std::string(trimmed) +
                         "' is not a non-negative integer");
    }
    return value;
}

} // namespace

PointSet parse_points_csv(const std::string& content) {
    const auto lines = split_lines(content);
    if (lines.empty()) {
        throw EmptyFile("no rows");
    }

    // The first row is a header iff its first field is not numeric.
    const bool has_header =
        !try_parse_double(split_fields(lines[0].text)[0]).has_value();
    const std::size_t first_data = has_header ? 1 : 0;
    if (first_data >= lines.size()) {
        throw EmptyFile("no data rows");
    }

    std::size_t m = 0;
    std::vector<double> data;
    for (std::size_t r = first_data; r < lines.size(); ++r) {
        const std::size_t row = lines[r].number;
        const auto fields = split_fields(lines[r].text);
        if (m == 0) {
            m = fields.size();
        } else if (fields.size() != m) {
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(m) + " fields, got " +
                             std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            data.push_back(parse_feature(fields[c], row, c + 1));
        }
    }
    return PointSet(std::move(data), lines.size() - first_data, m);
}

PointSet ingest_csv(const std::string& path) {
    return parse_points_csv(read_file(path));
}

void write_assignment_csv(const std::string& path,
                          const Assignment& assignment) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open '" + path + "' for writing");
    }
    file << "item_index,group\n";
    for (std::size_t i = 0; i < assignment.groups.size(); ++i) {
        file << i << ',' << static_cast<int>(assignment.groups[i]) << '\n';
    }
    if (!file) {
        throw Error("write to '" + path + "' failed");
    }
}

Assignment read_assignment_csv(const std::string& path) {
    const std::string content = read_file(path); // keeps the views alive
    const auto lines = split_lines(content);
    if (lines.empty()) {
        throw EmptyFile("no rows");
    }
    if (lines[0].text != "item_index,group") {
        throw ParseError("row 1: expected header 'item_index,group'");
    }
    Assignment assignment;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::size_t row = lines[r].number;
        const auto fields = split_fields(lines[r].text);
        if (fields.size() != 2) {
            throw ParseError("row " + std::to_string(row) +
                             ": expected 2 fields, got " +
                             std::to_string(fields.size()));
        }
        const std::size_t index = parse_index_field(fields[0], row, 1);
        if (index != r - 1) {
            throw ParseError(position(row, 1) + ": expected item index " +
                             std::to_string(r - 1));
        }
        const std::size_t group = parse_index_field(fields[1], row, 2);
        if (group != 1 && group != 2) {
            throw ParseError(position(row, 2) + ": group must be 1 or 2");
        }
        assignment.groups.push_back(static_cast<std::uint8_t>(group));
    }
    return assignment;
}

std::string format_dispersion(double dispersion) {
    if (std::isinf(dispersion)) return "inf";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", dispersion);
    return buffer;
}

double parse_dispersion(const std::string& text) {
    if (text == "inf") return kInfiniteDispersion;
    const auto value = try_parse_double(text);
    if (!value || !std::isfinite(*value)) {
        throw ParseError("'" + text + "' is not a dispersion value");
    }
    return *value;
}

void write_summary(std::ostream& out, const SolveSummary& summary) {
    char wall[64];
    std::snprintf(wall, sizeof(wall), "%.3f", summary.wall_ms);
    out << "dispersion=" << format_dispersion(summary.dispersion) << '\n'
        << "iterations_used=" << summary.iterations_used << '\n'
        << "fallback_triggered="
        << (summary.fallback_triggered ? "true" : "false") << '\n'
        << "variant=" << to_string(summary.variant) << '\n'
        << "wall_ms=" << wall << '\n'
        << "peak_mem_bytes=";
    if (summary.peak_mem_bytes < 0) {
        out << "NA";
    } else {
        out << summary.peak_mem_bytes;
    }
    out << '\n';
}

void write_summary(const std::string& path, const SolveSummary& summary) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open '" + path + "' for writing");
    }
    write_summary(file, summary);
    if (!file) {
        throw Error("write to '" + path + "' failed");
    }
}

} // namespace maxdisp
