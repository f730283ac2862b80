#include <algorithm>
#include <queue>

#include "annigraph/invariants.hpp"

namespace annigraph {

MetricReport metric_report(const SimpleGraph& G) {
    const std::size_t n = G.order();
    MetricReport r;
    r.distance.assign(n, std::vector<std::optional<std::size_t>>(n));
    std::vector<VertexSet> adj(n);
    for (std::size_t v = 0; v < n; ++v) adj[v] = G.neighbors(v);

    for (std::size_t s = 0; s < n; ++s) {
        auto& dist = r.distance[s];
        dist[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t w : adj[u]) {
                if (!dist[w]) {
                    dist[w] = *dist[u] + 1;
                    q.push(w);
                }
            }
        }
    }

    r.eccentricity.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t ecc = 0;
        bool finite = true;
        for (std::size_t u = 0; u < n; ++u) {
            if (!r.distance[v][u]) {
                finite = false;
                break;
            }
            ecc = std::max(ecc, *r.distance[v][u]);
        }
        if (finite) r.eccentricity[v] = ecc;
        else r.is_connected = false;
    }

    for (std::size_t v = 0; v < n; ++v) {
        const auto& e = r.eccentricity[v];
        if (!e) continue;
        if (!r.radius || *e < *r.radius) r.radius = *e;
        if (!r.diameter || *e > *r.diameter) r.diameter = *e;
    }
    if (r.radius)
        for (std::size_t v = 0; v < n; ++v)
            if (r.eccentricity[v] == r.radius) r.center.push_back(v);
    return r;
}

}  // namespace annigraph
