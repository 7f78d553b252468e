#ifndef MAXDISP_GRAPH_HPP
#define MAXDISP_GRAPH_HPP

#include "maxdisp/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace maxdisp {

/// Undirected simple graph over item indices; edges are only ever added.
/// Adjacency lists are kept sorted ascending so traversal order is fixed.
class ThresholdGraph {
public:
    explicit ThresholdGraph(std::size_t vertex_count);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return adj_[v];
    }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    /// Throws DuplicateEdge when the pair is already present.
    void add_edge(std::uint32_t u, std::uint32_t v);

    /// Adds one batch of pairs sharing a single distance value.
    void add_edges(std::span<const DistanceEntry> batch);

private:
    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t edge_count_ = 0;
};

/// One connected component split by BFS level parity. even_side holds the
/// vertices discovered at even levels, odd_side those at odd levels.
struct BipartitionComponent {
    std::uint32_t component_id = 0;
    std::vector<std::uint32_t> even_side;
    std::vector<std::uint32_t> odd_side;
    std::size_t imbalance = 0;
};

/// BFS decomposition into bipartition components, or nullopt when some edge
/// joins two vertices at the same BFS level (odd cycle). Roots and neighbor
/// visits are in ascending vertex order; isolated vertices become components
/// with |even_side| = 1.
std::optional<std::vector<BipartitionComponent>>
bipartition_components(const ThresholdGraph& graph);

} // namespace maxdisp

#endif
