#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>

#include "annigraph/errors.hpp"
#include "annigraph/invariants.hpp"

namespace annigraph {

namespace {

using Mask = std::uint64_t;

VertexSet max_clique_exact(const SimpleGraph& G) {
    const auto adj = G.neighbor_masks();
    const std::size_t n = G.order();
    Mask best = 0;
    int best_size = 0;
    std::function<void(Mask, Mask)> grow = [&](Mask chosen, Mask candidates) {
        int size = std::popcount(chosen);
        if (!candidates) {
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        // Bound: even taking every candidate cannot beat the incumbent.
        if (size + std::popcount(candidates) <= best_size) return;
        while (candidates) {
            if (size + std::popcount(candidates) <= best_size) return;
            std::size_t v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            grow(chosen | (Mask{1} << v), candidates & adj[v]);
        }
        if (size > best_size) {
            best_size = size;
            best = chosen;
        }
    };
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    grow(0, all);
    VertexSet out;
    for (Mask b = best; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

VertexSet greedy_clique(const SimpleGraph& G) {
    VertexSet order(G.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return G.degree(a) > G.degree(b); });
    VertexSet clique;
    for (auto v : order)
        if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return G.adjacent(c, v); }))
            clique.push_back(v);
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::vector<std::size_t> greedy_coloring(const SimpleGraph& G) {
    const std::size_t n = G.order();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<char> used(n + 1, 0);
        for (auto w : G.neighbors(v))
            if (w < v) used[color[w]] = 1;
        std::size_t c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

// k-coloring by backtracking; clique vertices are fixed first to distinct colors.
std::optional<std::vector<std::size_t>> try_color(const SimpleGraph& G, const VertexSet& clique, std::size_t k) {
    const std::size_t n = G.order();
    VertexSet order = clique;
    VertexSet rest;
    for (std::size_t v = 0; v < n; ++v)
        if (std::find(clique.begin(), clique.end(), v) == clique.end()) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(), [&](auto a, auto b) { return G.degree(a) > G.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> color(n, unset);
    for (std::size_t i = 0; i < clique.size(); ++i) color[clique[i]] = i;

    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t idx, std::size_t used) {
        if (idx == order.size()) return true;
        std::size_t v = order[idx];
        // A fresh color is interchangeable with any other unused one, so only the first is tried.
        std::size_t limit = std::min(k, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            bool clash = false;
            for (auto w : G.neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (place(idx + 1, std::max(used, c + 1))) return true;
            color[v] = unset;
        }
        return false;
    };
    if (place(clique.size(), clique.size())) return color;
    return std::nullopt;
}

}  // namespace

ColoringReport coloring_report(const SimpleGraph& G, std::size_t exact_cap) {
    if (exact_cap > kMaxExactCap) throw Error("exact cap cannot exceed " + std::to_string(kMaxExactCap));
    const std::size_t n = G.order();
    ColoringReport r;

    // Bipartiteness by BFS two-coloring.
    std::vector<int> side(n, -1);
    r.is_bipartite = true;
    for (std::size_t s = 0; s < n && r.is_bipartite; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty() && r.is_bipartite) {
            auto u = q.front();
            q.pop();
            for (auto w : G.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    r.is_bipartite = false;
                    break;
                }
            }
        }
    }
    if (r.is_bipartite) {
        VertexSet a, b;
        for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
        bool connected = metric_report(G).is_connected;
        if (connected && !a.empty() && !b.empty() && G.edge_count() == a.size() * b.size()) {
            r.is_complete_bipartite = true;
            r.is_star = std::min(a.size(), b.size()) == 1;
        }
        r.parts = std::make_pair(std::move(a), std::move(b));
    }

    if (n <= exact_cap) {
        r.clique_witness = max_clique_exact(G);
        r.clique = r.clique_witness.size();
        for (std::size_t k = r.clique; k <= n; ++k) {
            if (auto c = try_color(G, r.clique_witness, k)) {
                r.chi = k;
                r.coloring = *c;
                break;
            }
        }
    } else {
        r.clique_witness = greedy_clique(G);
        r.clique = r.clique_witness.size();
        r.clique_status = SolverStatus::bound_only;
        r.coloring = greedy_coloring(G);
        r.chi = n ? *std::max_element(r.coloring.begin(), r.coloring.end()) + 1 : 0;
        r.chi_status = SolverStatus::bound_only;
    }
    return r;
}

}  // namespace annigraph
