#include "annigraph/ag_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace annigraph {

namespace {

std::vector<std::size_t> select_vertices(const SubmoduleLattice& L, GraphVariant variant) {
    const ModuleSpec& M = L.module();
    const Ideal ann = M.annihilator();
    auto admissible_partner = [&](const Submodule& K) {
        if (variant == GraphVariant::ag) return !K.is_zero() && K.is_proper();
        return K.is_proper() && K.colon() != ann;
    };
    auto admissible_vertex = [&](const Submodule& N) {
        if (variant == GraphVariant::ag) return !N.is_zero();
        return N.is_proper() && N.colon() != ann;
    };

    // NK depends on K only through (K:M), so the partner search runs over distinct colon ideals.
    std::set<Ideal> partner_colons;
    for (const auto& K : L.submodules())
        if (admissible_partner(K)) partner_colons.insert(K.colon());

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const Submodule& N = L.at(i);
        if (!admissible_vertex(N)) continue;
        bool has_partner = std::any_of(partner_colons.begin(), partner_colons.end(),
                                       [&](const Ideal& b) { return ideal_product_kills(N.colon(), b, M); });
        if (has_partner) out.push_back(i);
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string_view variant_name(GraphVariant v) { return v == GraphVariant::ag ? "AG" : "AG_star"; }

AGGraph build_ag(const SubmoduleLattice& L, GraphVariant variant) {
    const ModuleSpec& M = L.module();
    AGGraph G;
    G.variant = variant;
    G.vertices = select_vertices(L, variant);
    G.ring_text = M.ring().text();
    G.module_text = M.text();

    const Ideal ann = M.annihilator();
    bool m_is_vertex = std::any_of(L.submodules().begin(), L.submodules().end(), [&](const Submodule& N) {
        return !N.is_zero() && N.is_proper() && N.colon() == ann;
    });
    if (!m_is_vertex) {
        GraphVariant other = variant == GraphVariant::ag ? GraphVariant::ag_star : GraphVariant::ag;
        if (select_vertices(L, other) != G.vertices)
            throw std::logic_error("AG(M) and AG(M)* differ although M is not a vertex");
    }

    G.graph = SimpleGraph(G.vertices.size());
    for (std::size_t a = 0; a < G.vertices.size(); ++a) {
        const Submodule& N = L.at(G.vertices[a]);
        G.labels.push_back(submodule_label(N, M));
        for (std::size_t b = a + 1; b < G.vertices.size(); ++b)
            if (ideal_product_kills(N.colon(), L.at(G.vertices[b]).colon(), M)) G.graph.add_edge(a, b);
    }
    return G;
}

std::string export_graph(const AGGraph& G, ExportFormat format) {
    const auto edges = G.graph.edges();
    std::ostringstream out;
    switch (format) {
        case ExportFormat::dot: {
            out << "graph " << variant_name(G.variant) << " {\n";
            out << "  label=\"ring " << G.ring_text << " module " << dot_escape(G.module_text) << "\";\n";
            for (std::size_t v = 0; v < G.labels.size(); ++v)
                out << "  n" << v << " [label=\"" << dot_escape(G.labels[v]) << "\"];\n";
            for (auto [u, v] : edges) out << "  n" << u << " -- n" << v << ";\n";
            out << "}\n";
            break;
        }
        case ExportFormat::json: {
            nlohmann::ordered_json j;
            j["variant"] = variant_name(G.variant);
            j["n"] = G.labels.size();
            j["labels"] = G.labels;
            j["edges"] = nlohmann::ordered_json::array();
            for (auto [u, v] : edges) j["edges"].push_back({u, v});
            j["module"] = {{"ring", G.ring_text}, {"module", G.module_text}};
            out << j.dump() << "\n";
            break;
        }
        case ExportFormat::csv_edges: {
            out << "u,v,u_label,v_label\n";
            for (auto [u, v] : edges)
                out << u << ',' << v << ',' << csv_quote(G.labels[u]) << ',' << csv_quote(G.labels[v]) << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace annigraph
