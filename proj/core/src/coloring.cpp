#include "maxdisp/coloring.hpp"

#include <numeric>
#include <string>

namespace maxdisp {

SubsetSumTable::SubsetSumTable(std::size_t total) : cells_(total + 1, {-1, -1}) {
    cells_[0] = {0, 0};
}

std::vector<std::size_t> SubsetSumTable::backtrack(std::size_t target) const {
    if (!reachable(target)) {
        throw std::invalid_argument("sum " + std::to_string(target) +
                                    " is not reachable");
    }
    std::vector<std::size_t> chain;
    std::size_t j = target;
    while (j != 0) {
        const Cell& c = cells_[j];
        chain.push_back(static_cast<std::size_t>(c.component));
        j -= static_cast<std::size_t>(c.value);
    }
    return chain;
}

namespace {

std::size_t checked_total(std::span<const std::size_t> imbalances) {
    std::size_t total = 0;
    for (const std::size_t s : imbalances) {
        if (s == 0) {
            throw std::invalid_argument("zero imbalance must be filtered out");
        }
        total += s;
    }
    return total;
}

} // namespace

SubsetSumTable subset_sum_table(std::span<const std::size_t> imbalances) {
    SubsetSumTable table(checked_total(imbalances));
    auto& cells = table.cells_;
    const std::size_t total = table.total();
    for (std::size_t i = 1; i <= imbalances.size(); ++i) {
        const std::size_t s = imbalances[i - 1];
        for (std::size_t j = total; j >= s; --j) {
            if (cells[j].component >= 0) continue; // first write wins
            if (cells[j - s].component >= 0) {
                cells[j] = {static_cast<std::int32_t>(i),
                            static_cast<std::int32_t>(s)};
            }
        }
    }
    return table;
}

std::optional<std::vector<std::size_t>>
subset_sum_chain(std::span<const std::size_t> imbalances, std::size_t target) {
    const std::size_t total = checked_total(imbalances);
    if (target > total) return std::nullopt;
    if (target == 0) return std::vector<std::size_t>{};

    std::vector<SubsetSumTable::Cell> cells(total + 1, {-1, -1});
    cells[0] = {0, 0};
    std::size_t max_filled = 0; // highest reachable sum so far
    std::size_t filled = 1;     // number of reachable sums
    for (std::size_t i = 1; i <= imbalances.size(); ++i) {
        const std::size_t s = imbalances[i - 1];
        // A write at j needs cells[j - s] reachable before this pass, so
        // nothing above max_filled + s can change; sums above that bound are
        // skipped rather than scanned.
        const std::size_t hi = std::min(total, max_filled + s);
        if (filled == max_filled + 1 && s <= max_filled + 1) {
            // Reachable sums are exactly 0..max_filled, so this pass writes
            // exactly max_filled+1..hi and the block stays contiguous.
            for (std::size_t j = max_filled + 1; j <= hi; ++j) {
                cells[j] = {static_cast<std::int32_t>(i),
                            static_cast<std::int32_t>(s)};
            }
            filled += hi - max_filled;
            max_filled = hi;
        } else {
            for (std::size_t j = hi; j >= s; --j) {
                if (cells[j].component >= 0) continue; // first write wins
                if (cells[j - s].component >= 0) {
                    cells[j] = {static_cast<std::int32_t>(i),
                                static_cast<std::int32_t>(s)};
                    ++filled;
                    if (j > max_filled) max_filled = j;
                }
            }
        }
        if (cells[target].component >= 0) break;
    }
    if (cells[target].component < 0) return std::nullopt;

    std::vector<std::size_t> chain;
    std::size_t j = target;
    while (j != 0) {
        chain.push_back(static_cast<std::size_t>(cells[j].component));
        j -= static_cast<std::size_t>(cells[j].value);
    }
    return chain;
}

std::optional<Assignment> solve_2colcc(const ThresholdGraph& graph,
                                       const CardinalityConstraint& constraint) {
    const auto components_opt = bipartition_components(graph);
    if (!components_opt) return std::nullopt;
    const auto& components = *components_opt;

    std::size_t min_side_total = 0;
    std::vector<std::size_t> imbalances;
    std::vector<std::size_t> imbalance_comp; // component index per imbalance
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& comp = components[i];
        min_side_total += std::min(comp.even_side.size(), comp.odd_side.size());
        if (comp.imbalance > 0) {
            imbalances.push_back(comp.imbalance);
            imbalance_comp.push_back(i);
        }
    }

    const std::int64_t c1_adjusted = static_cast<std::int64_t>(constraint.c1) -
                                     static_cast<std::int64_t>(min_side_total);
    const std::int64_t imbalance_total = std::accumulate(
        imbalances.begin(), imbalances.end(), std::int64_t{0});
    if (c1_adjusted < 0 || c1_adjusted > imbalance_total) return std::nullopt;

    const auto chain =
        subset_sum_chain(imbalances, static_cast<std::size_t>(c1_adjusted));
    if (!chain) return std::nullopt;

    std::vector<char> larger_side_to_color1(components.size(), 0);
    for (const std::size_t idx : *chain) {
        larger_side_to_color1[imbalance_comp[idx - 1]] = 1;
    }

    Assignment assignment;
    assignment.groups.assign(graph.vertex_count(), 0);
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& comp = components[i];
        // Chosen components orient their larger side to color 1, unchosen to
        // color 2; the even side counts as larger on ties. Zero-imbalance
        // components are colored even->1, odd->2.
        const bool even_is_larger = comp.even_side.size() >= comp.odd_side.size();
        std::uint8_t even_color;
        if (comp.imbalance == 0) {
            even_color = 1;
        } else if (larger_side_to_color1[i]) {
            even_color = even_is_larger ? 1 : 2;
        } else {
            even_color = even_is_larger ? 2 : 1;
        }
        const std::uint8_t odd_color = even_color == 1 ? 2 : 1;
        for (const std::uint32_t v : comp.even_side) {
            assignment.groups[v] = even_color;
        }
        for (const std::uint32_t v : comp.odd_side) {
            assignment.groups[v] = odd_color;
        }
    }
    return assignment;
}

} // namespace maxdisp
