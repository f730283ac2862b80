#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace annigraph {

using VertexSet = std::vector<std::size_t>;

/// Undirected simple graph on vertices 0..n-1 stored as adjacency bit rows. No loops.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n = 0);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }

    /// Ignores u == v and duplicate edges.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    VertexSet neighbors(std::size_t v) const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Open neighbourhood masks; only valid for graphs with at most 64 vertices.
    std::vector<std::uint64_t> neighbor_masks() const;

private:
    std::size_t n_;
    std::size_t words_;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);
SimpleGraph path_graph(std::size_t n);

}  // namespace annigraph
