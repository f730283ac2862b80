#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

#include "annigraph/errors.hpp"
#include "annigraph/invariants.hpp"

namespace annigraph {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

bool matching_exists(const SimpleGraph& G, std::vector<std::size_t> rest) {
    if (rest.empty()) return true;
    if (rest.size() % 2) return false;
    std::size_t u = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        if (!G.adjacent(u, rest[i])) continue;
        std::vector<std::size_t> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        if (matching_exists(G, std::move(next))) return true;
    }
    return false;
}

bool induced_connected(const SimpleGraph& G, const VertexSet& S) {
    if (S.empty()) return true;
    std::vector<char> in(G.order(), 0), seen(G.order(), 0);
    for (auto v : S) in[v] = 1;
    std::queue<std::size_t> q;
    q.push(S.front());
    seen[S.front()] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : S) {
            if (!seen[w] && G.adjacent(u, w)) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == S.size();
}

bool graph_connected(const SimpleGraph& G) {
    VertexSet all(G.order());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return induced_connected(G, all);
}

bool has_isolated_vertex(const SimpleGraph& G) {
    for (std::size_t v = 0; v < G.order(); ++v)
        if (G.degree(v) == 0) return true;
    return false;
}

// Mask-level predicates for the exact search.
struct MaskGraph {
    std::size_t n;
    std::vector<Mask> open, closed;
    Mask all;

    explicit MaskGraph(const SimpleGraph& G) : n(G.order()), open(G.neighbor_masks()), closed(open) {
        for (std::size_t v = 0; v < n; ++v) closed[v] |= bit(v);
        all = n == 64 ? ~Mask{0} : bit(n) - 1;
    }

    bool connected(Mask S) const {
        if (!S) return true;
        Mask seen = S & (~S + 1), frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= open[std::countr_zero(f)];
            next &= S & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == S;
    }

    bool perfect_matching(Mask S) const {
        if (!S) return true;
        if (std::popcount(S) % 2) return false;
        std::size_t u = std::countr_zero(S);
        Mask rest = S & ~bit(u);
        for (Mask c = open[u] & rest; c; c &= c - 1) {
            std::size_t w = std::countr_zero(c);
            if (perfect_matching(rest & ~bit(w))) return true;
        }
        return false;
    }
};

// Size-increasing search; within a size, combinations are visited in lexicographic order, so
// the first hit is the lexicographically least optimum.
std::optional<VertexSet> exact_domination(const SimpleGraph& G, DominationVariant variant) {
    const MaskGraph mg(G);
    const std::size_t n = mg.n;
    const bool use_open = variant == DominationVariant::total;
    const auto& cover = use_open ? mg.open : mg.closed;

    // coverers[u]: vertices whose neighbourhood (of the relevant kind) contains u.
    std::vector<Mask> coverers(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (Mask c = cover[v]; c; c &= c - 1) coverers[std::countr_zero(c)] |= bit(v);

    auto extra_ok = [&](Mask S) {
        switch (variant) {
            case DominationVariant::connected: return mg.connected(S);
            case DominationVariant::paired: return mg.perfect_matching(S);
            default: return true;  // clique is enforced while branching
        }
    };

    std::size_t k = 0;
    Mask found = 0;
    bool hit = false;
    std::function<void(std::size_t, Mask, Mask, std::size_t)> dfs = [&](std::size_t start, Mask chosen, Mask covered,
                                                                        std::size_t depth) {
        if (hit) return;
        Mask uncovered = mg.all & ~covered;
        if (depth == k) {
            if (!uncovered && extra_ok(chosen)) {
                hit = true;
                found = chosen;
            }
            return;
        }
        Mask remaining = start >= n ? 0 : (mg.all & ~(bit(start) - 1));
        if (uncovered) {
            std::size_t u = std::countr_zero(uncovered);
            if (!(coverers[u] & remaining)) return;
        }
        for (std::size_t v = start; v < n && n - v >= k - depth; ++v) {
            if (variant == DominationVariant::clique && (chosen & ~mg.open[v])) continue;
            dfs(v + 1, chosen | bit(v), covered | cover[v], depth + 1);
            if (hit) return;
        }
    };

    const std::size_t step = variant == DominationVariant::paired ? 2 : 1;
    for (k = 0; k <= n; k += step) {
        dfs(0, 0, 0, 0);
        if (hit) return mask_to_set(found);
    }
    return std::nullopt;
}

VertexSet greedy_cover(const SimpleGraph& G, bool open) {
    const std::size_t n = G.order();
    std::vector<char> covered(n, 0);
    std::size_t left = n;
    VertexSet out;
    while (left) {
        std::size_t best = 0, gain_best = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t gain = (!open && !covered[v]) ? 1 : 0;
            for (std::size_t w : G.neighbors(v)) gain += !covered[w];
            if (gain > gain_best) {
                gain_best = gain;
                best = v;
            }
        }
        if (gain_best == 0) throw InfeasibleVariant();
        out.push_back(best);
        if (!open && !covered[best]) {
            covered[best] = 1;
            --left;
        }
        for (std::size_t w : G.neighbors(best))
            if (!covered[w]) {
                covered[w] = 1;
                --left;
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet bfs_tree_internal(const SimpleGraph& G) {
    const std::size_t n = G.order();
    if (n <= 2) return n ? VertexSet{0} : VertexSet{};
    std::vector<std::optional<std::size_t>> parent(n);
    std::vector<char> seen(n, 0), internal(n, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : G.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                internal[u] = 1;
                q.push(w);
            }
        }
    }
    VertexSet out;
    for (std::size_t v = 0; v < n; ++v)
        if (internal[v]) out.push_back(v);
    return out;
}

VertexSet greedy_matching_vertices(const SimpleGraph& G) {
    std::vector<char> used(G.order(), 0);
    VertexSet out;
    for (auto [u, v] : G.edges()) {
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            out.push_back(u);
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexSet> greedy_clique_dominating(const SimpleGraph& G) {
    std::optional<VertexSet> best;
    for (std::size_t s = 0; s < G.order(); ++s) {
        VertexSet clique{s};
        while (!satisfies(G, clique, DominationVariant::plain)) {
            std::optional<std::size_t> pick;
            for (std::size_t v = 0; v < G.order() && !pick; ++v) {
                bool joins = std::find(clique.begin(), clique.end(), v) == clique.end() &&
                             std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return G.adjacent(c, v); });
                if (joins) pick = v;
            }
            if (!pick) break;
            clique.push_back(*pick);
        }
        std::sort(clique.begin(), clique.end());
        if (satisfies(G, clique, DominationVariant::plain) && (!best || clique.size() < best->size())) best = clique;
    }
    return best;
}

}  // namespace

std::string_view status_name(SolverStatus s) {
    switch (s) {
        case SolverStatus::exact: return "exact";
        case SolverStatus::bound_only: return "bound_only";
        case SolverStatus::infeasible: return "infeasible";
    }
    return "?";
}

std::string_view domination_name(DominationVariant v) {
    switch (v) {
        case DominationVariant::plain: return "plain";
        case DominationVariant::total: return "total";
        case DominationVariant::connected: return "connected";
        case DominationVariant::clique: return "clique";
        case DominationVariant::paired: return "paired";
    }
    return "?";
}

SetPredicates set_predicates(const SimpleGraph& G, const VertexSet& S) {
    const std::size_t n = G.order();
    SetPredicates p;
    std::vector<char> in(n, 0);
    for (auto v : S) in.at(v) = 1;

    p.is_dominating = p.is_total_dominating = true;
    for (std::size_t v = 0; v < n; ++v) {
        bool touched = std::any_of(S.begin(), S.end(), [&](std::size_t s) { return G.adjacent(v, s); });
        if (!touched) {
            p.is_total_dominating = false;
            if (!in[v]) p.is_dominating = false;
        }
    }
    p.induces_connected = induced_connected(G, S);
    p.induces_clique = true;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b)
            if (!G.adjacent(S[a], S[b])) p.induces_clique = false;
    p.induces_perfect_matching = matching_exists(G, S);

    auto in_closed = [&](std::size_t x, std::size_t u) { return x == u || G.adjacent(x, u); };
    auto private_of = [&](const VertexSet& T, std::size_t u) {
        VertexSet priv;
        for (std::size_t x = 0; x < n; ++x) {
            if (!in_closed(x, u)) continue;
            bool elsewhere = std::any_of(T.begin(), T.end(), [&](std::size_t w) { return w != u && in_closed(x, w); });
            if (!elsewhere) priv.push_back(x);
        }
        return priv;
    };
    auto irredundant = [&](const VertexSet& T) {
        return std::all_of(T.begin(), T.end(), [&](std::size_t u) { return !private_of(T, u).empty(); });
    };

    for (auto u : S) p.private_neighborhoods.push_back(private_of(S, u));
    p.is_irredundant = std::all_of(p.private_neighborhoods.begin(), p.private_neighborhoods.end(),
                                   [](const VertexSet& x) { return !x.empty(); });
    p.is_maximal_irredundant = p.is_irredundant;
    for (std::size_t u = 0; u < n && p.is_maximal_irredundant; ++u) {
        if (in[u]) continue;
        VertexSet T = S;
        T.push_back(u);
        if (irredundant(T)) p.is_maximal_irredundant = false;
    }
    return p;
}

bool satisfies(const SimpleGraph& G, const VertexSet& S, DominationVariant variant) {
    const auto p = set_predicates(G, S);
    switch (variant) {
        case DominationVariant::plain: return p.is_dominating;
        case DominationVariant::total: return p.is_total_dominating;
        case DominationVariant::connected: return p.is_dominating && p.induces_connected;
        case DominationVariant::clique: return p.is_dominating && p.induces_clique;
        case DominationVariant::paired: return p.is_dominating && p.induces_perfect_matching;
    }
    return false;
}

bool is_minimal_dominating(const SimpleGraph& G, const VertexSet& S) {
    if (!satisfies(G, S, DominationVariant::plain)) return false;
    for (std::size_t i = 0; i < S.size(); ++i) {
        VertexSet T;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (j != i) T.push_back(S[j]);
        if (satisfies(G, T, DominationVariant::plain)) return false;
    }
    return true;
}

SolverResult domination(const SimpleGraph& G, DominationVariant variant, std::size_t exact_cap) {
    if (exact_cap > kMaxExactCap) throw Error("exact cap cannot exceed " + std::to_string(kMaxExactCap));
    const std::size_t n = G.order();
    const bool nonempty = n > 0;
    if (nonempty) {
        if ((variant == DominationVariant::total || variant == DominationVariant::paired) && has_isolated_vertex(G))
            throw InfeasibleVariant();
        if (variant == DominationVariant::connected && !graph_connected(G)) throw InfeasibleVariant();
    }

    if (n <= exact_cap) {
        auto best = exact_domination(G, variant);
        if (!best) throw InfeasibleVariant();
        return {best->size(), *best, SolverStatus::exact};
    }

    VertexSet bound;
    switch (variant) {
        case DominationVariant::plain: bound = greedy_cover(G, false); break;
        case DominationVariant::total: bound = greedy_cover(G, true); break;
        case DominationVariant::connected: bound = bfs_tree_internal(G); break;
        case DominationVariant::paired: bound = greedy_matching_vertices(G); break;
        case DominationVariant::clique: {
            auto c = greedy_clique_dominating(G);
            if (!c) throw CapExceeded("no clique dominating set found above the exact cap", n);
            bound = *c;
            break;
        }
    }
    return {bound.size(), bound, SolverStatus::bound_only};
}

SolverResult irredundance_number(const SimpleGraph& G, std::size_t exact_cap) {
    if (exact_cap > kMaxExactCap) throw Error("exact cap cannot exceed " + std::to_string(kMaxExactCap));
    if (G.order() > exact_cap)
        throw CapExceeded("irredundance needs an exact search; graph has " + std::to_string(G.order()) +
                              " vertices, cap is " + std::to_string(exact_cap),
                          G.order());
    const MaskGraph mg(G);
    const std::size_t n = mg.n;

    auto irredundant = [&](Mask S) {
        Mask once = 0, twice = 0;
        for (Mask s = S; s; s &= s - 1) {
            Mask c = mg.closed[std::countr_zero(s)];
            twice |= once & c;
            once |= c;
        }
        for (Mask s = S; s; s &= s - 1)
            if (!(mg.closed[std::countr_zero(s)] & ~twice)) return false;
        return true;
    };
    auto maximal = [&](Mask S) {
        for (Mask rest = mg.all & ~S; rest; rest &= rest - 1)
            if (irredundant(S | bit(std::countr_zero(rest)))) return false;
        return true;
    };

    // Irredundance is hereditary, so branches that lose it are cut.
    std::size_t k = 0;
    std::optional<Mask> found;
    std::function<void(std::size_t, Mask, std::size_t)> dfs = [&](std::size_t start, Mask S, std::size_t depth) {
        if (found) return;
        if (depth == k) {
            if (maximal(S)) found = S;
            return;
        }
        for (std::size_t v = start; v < n && n - v >= k - depth; ++v) {
            Mask T = S | bit(v);
            if (!irredundant(T)) continue;
            dfs(v + 1, T, depth + 1);
            if (found) return;
        }
    };
    for (k = 0; k <= n; ++k) {
        dfs(0, 0, 0);
        if (found) {
            auto w = mask_to_set(*found);
            return {w.size(), w, SolverStatus::exact};
        }
    }
    throw std::logic_error("no maximal irredundant set found");
}

}  // namespace annigraph
