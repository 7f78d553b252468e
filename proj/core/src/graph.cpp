#include "maxdisp/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace maxdisp {

ThresholdGraph::ThresholdGraph(std::size_t vertex_count) : adj_(vertex_count) {}

bool ThresholdGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const std::uint32_t other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(list.begin(), list.end(), other);
}

void ThresholdGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    if (u >= adj_.size() || v >= adj_.size()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    auto& lu = adj_[u];
    const auto pos = std::lower_bound(lu.begin(), lu.end(), v);
    if (pos != lu.end() && *pos == v) {
        throw DuplicateEdge("edge {" + std::to_string(u) + ", " +
                            std::to_string(v) + "} inserted twice");
    }
    lu.insert(pos, v);
    auto& lv = adj_[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    ++edge_count_;
}

void ThresholdGraph::add_edges(std::span<const DistanceEntry> batch) {
    assert(std::all_of(batch.begin(), batch.end(), [&](const DistanceEntry& e) {
        return e.d2 == batch.front().d2;
    }));
    for (const DistanceEntry& e : batch) {
        add_edge(e.u, e.v);
    }
}

std::optional<std::vector<BipartitionComponent>>
bipartition_components(const ThresholdGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::int8_t> parity(n, -1);
    std::vector<BipartitionComponent> components;
    std::vector<std::uint32_t> queue;
    queue.reserve(n);

    for (std::uint32_t root = 0; root < n; ++root) {
        if (parity[root] != -1) continue;
        BipartitionComponent comp;
        comp.component_id = static_cast<std::uint32_t>(components.size());
        queue.clear();
        queue.push_back(root);
        parity[root] = 0;
        comp.even_side.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            const std::int8_t next = parity[u] ^ 1;
            for (const std::uint32_t w : graph.neighbors(u)) {
                if (parity[w] == -1) {
                    parity[w] = next;
                    (next == 0 ? comp.even_side : comp.odd_side).push_back(w);
                    queue.push_back(w);
                } else if (parity[w] == parity[u]) {
                    return std::nullopt;
                }
            }
        }
        const std::size_t p = comp.even_side.size();
        const std::size_t q = comp.odd_side.size();
        comp.imbalance = p >= q ? p - q : q - p;
        components.push_back(std::move(comp));
    }
    return components;
}

} // namespace maxdisp
