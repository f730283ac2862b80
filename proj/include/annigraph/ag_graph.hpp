#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/module.hpp"

namespace annigraph {

enum class GraphVariant { ag, ag_star };

std::string_view variant_name(GraphVariant v);

/// The annihilating-submodule graph AG(M), or its subgraph AG(M)*.
/// Vertex i of `graph` is the lattice submodule `vertices[i]`; vertex order follows the lattice order.
struct AGGraph {
    GraphVariant variant = GraphVariant::ag;
    std::vector<std::size_t> vertices;
    std::vector<std::string> labels;
    SimpleGraph graph;
    std::string ring_text;
    std::string module_text;
};

/// AG: nonzero N with NK = 0 for some nonzero proper K.
/// AG*: proper N with (N:M) != Ann(M) and NK = 0 for some proper K with (K:M) != Ann(M).
/// Distinct vertices are adjacent iff their product is (0).
AGGraph build_ag(const SubmoduleLattice& L, GraphVariant variant);

enum class ExportFormat { dot, json, csv_edges };

/// Byte-deterministic for a fixed graph.
std::string export_graph(const AGGraph& G, ExportFormat format);

}  // namespace annigraph
