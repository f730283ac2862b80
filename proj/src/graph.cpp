#include "annigraph/graph.hpp"

#include <bit>
#include <stdexcept>

namespace annigraph {

SimpleGraph::SimpleGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v || adjacent(u, v)) return;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edges_;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[v * words_ + w]));
    return d;
}

VertexSet SimpleGraph::neighbors(std::size_t v) const {
    VertexSet out;
    for (std::size_t u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> SimpleGraph::neighbor_masks() const {
    if (n_ > 64) throw std::length_error("mask representation needs at most 64 vertices");
    std::vector<std::uint64_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = bits_[v * words_];
    return out;
}

SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
    SimpleGraph g(a + b);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

SimpleGraph path_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace annigraph
