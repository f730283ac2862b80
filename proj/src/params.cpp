#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "annigraph/errors.hpp"
#include "annigraph/invariants.hpp"

namespace annigraph {

namespace {

using nlohmann::ordered_json;

std::optional<SolverResult> feasible_or_none(const SimpleGraph& G, DominationVariant v, std::size_t cap) {
    try {
        return domination(G, v, cap);
    } catch (const InfeasibleVariant&) {
        return std::nullopt;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("parameter report check failed: " + what);
}

bool exact(const std::optional<SolverResult>& r) { return r && r->status == SolverStatus::exact; }

void validate(const ParamReport& p, const SimpleGraph& G) {
    const std::pair<const std::optional<SolverResult>*, DominationVariant> checks[] = {
        {&p.gamma, DominationVariant::plain},     {&p.gamma_t, DominationVariant::total},
        {&p.gamma_c, DominationVariant::connected}, {&p.gamma_cl, DominationVariant::clique},
        {&p.gamma_pr, DominationVariant::paired},
    };
    for (auto [res, variant] : checks) {
        if (!*res) continue;
        require((*res)->witness.size() == (*res)->value, std::string(domination_name(variant)) + " witness size");
        require(satisfies(G, (*res)->witness, variant), std::string(domination_name(variant)) + " witness");
    }
    if (p.ir) {
        require(p.ir->witness.size() == p.ir->value, "ir witness size");
        require(set_predicates(G, p.ir->witness).is_maximal_irredundant, "ir witness");
    }
    if (exact(p.gamma)) {
        for (auto* other : {&p.gamma_t, &p.gamma_c, &p.gamma_cl, &p.gamma_pr})
            if (*other) require(p.gamma->value <= (*other)->value, "gamma is not the smallest variant");
        if (p.ir) require(p.ir->value <= p.gamma->value, "ir <= gamma");
    }

    const auto& c = p.coloring;
    require(c.clique_witness.size() == c.clique && set_predicates(G, c.clique_witness).induces_clique, "clique witness");
    require(c.coloring.size() == G.order(), "coloring size");
    for (auto [u, v] : G.edges()) require(c.coloring[u] != c.coloring[v], "coloring is proper");
    for (auto col : c.coloring) require(col < c.chi, "coloring uses at most chi colors");
    require(c.clique <= c.chi, "clique <= chi");
}

ordered_json set_json(const VertexSet& s) { return ordered_json(s); }

ordered_json result_json(const std::optional<SolverResult>& r, std::string_view missing) {
    if (!r) return {{"value", nullptr}, {"witness", nullptr}, {"status", missing}};
    return {{"value", r->value}, {"witness", set_json(r->witness)}, {"status", status_name(r->status)}};
}

ordered_json optional_json(const std::optional<std::size_t>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string set_text(const VertexSet& s, const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += labels.at(s[i]);
    }
    return out + "}";
}

}  // namespace

ParamReport param_report(const AGGraph& A, std::size_t exact_cap) {
    const SimpleGraph& G = A.graph;
    ParamReport p;
    p.n = G.order();
    p.m = G.edge_count();
    p.labels = A.labels;
    p.ring_text = A.ring_text;
    p.module_text = A.module_text;
    p.variant = std::string(variant_name(A.variant));
    p.metric = metric_report(G);
    p.gamma = feasible_or_none(G, DominationVariant::plain, exact_cap);
    p.gamma_t = feasible_or_none(G, DominationVariant::total, exact_cap);
    p.gamma_c = feasible_or_none(G, DominationVariant::connected, exact_cap);
    p.gamma_cl = feasible_or_none(G, DominationVariant::clique, exact_cap);
    p.gamma_pr = feasible_or_none(G, DominationVariant::paired, exact_cap);
    if (G.order() <= exact_cap) p.ir = irredundance_number(G, exact_cap);
    p.coloring = coloring_report(G, exact_cap);
    validate(p, G);
    return p;
}

ordered_json to_json(const ParamReport& p) {
    ordered_json j;
    j["module"] = {{"ring", p.ring_text}, {"module", p.module_text}};
    j["variant"] = p.variant;
    j["n"] = p.n;
    j["m"] = p.m;
    j["labels"] = p.labels;

    ordered_json ecc = ordered_json::array();
    for (const auto& e : p.metric.eccentricity) ecc.push_back(e ? ordered_json(*e) : ordered_json("inf"));
    j["metric"] = {{"is_connected", p.metric.is_connected},
                   {"radius", optional_json(p.metric.radius)},
                   {"diameter", optional_json(p.metric.diameter)},
                   {"eccentricity", ecc},
                   {"center", set_json(p.metric.center)}};

    j["gamma"] = result_json(p.gamma, "infeasible");
    j["gamma_t"] = result_json(p.gamma_t, "infeasible");
    j["gamma_c"] = result_json(p.gamma_c, "infeasible");
    j["gamma_cl"] = result_json(p.gamma_cl, "infeasible");
    j["gamma_pr"] = result_json(p.gamma_pr, "infeasible");
    j["ir"] = result_json(p.ir, "cap_exceeded");

    const auto& c = p.coloring;
    ordered_json col;
    col["chi"] = {{"value", c.chi}, {"coloring", c.coloring}, {"status", status_name(c.chi_status)}};
    col["clique"] = {{"value", c.clique}, {"witness", set_json(c.clique_witness)}, {"status", status_name(c.clique_status)}};
    col["is_bipartite"] = c.is_bipartite;
    col["parts"] = c.parts ? ordered_json::array({c.parts->first, c.parts->second}) : ordered_json(nullptr);
    col["is_complete_bipartite"] = c.is_complete_bipartite;
    col["part_sizes"] = c.is_complete_bipartite ? ordered_json::array({c.parts->first.size(), c.parts->second.size()})
                                                : ordered_json(nullptr);
    col["is_star"] = c.is_star;
    j["coloring"] = col;
    return j;
}

std::string to_table(const ParamReport& p) {
    struct Row {
        std::string name, value, status, witness;
    };
    std::vector<Row> rows;
    auto num = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    rows.push_back({"vertices", std::to_string(p.n), "", ""});
    rows.push_back({"edges", std::to_string(p.m), "", ""});
    rows.push_back({"connected", p.metric.is_connected ? "yes" : "no", "", ""});
    rows.push_back({"radius", num(p.metric.radius), "", ""});
    rows.push_back({"diameter", num(p.metric.diameter), "", ""});
    rows.push_back({"center", std::to_string(p.metric.center.size()), "", set_text(p.metric.center, p.labels)});

    auto add = [&](const std::string& name, const std::optional<SolverResult>& r, const std::string& missing) {
        if (!r) rows.push_back({name, "-", missing, ""});
        else rows.push_back({name, std::to_string(r->value), std::string(status_name(r->status)), set_text(r->witness, p.labels)});
    };
    add("gamma", p.gamma, "infeasible");
    add("gamma_t", p.gamma_t, "infeasible");
    add("gamma_c", p.gamma_c, "infeasible");
    add("gamma_cl", p.gamma_cl, "infeasible");
    add("gamma_pr", p.gamma_pr, "infeasible");
    add("ir", p.ir, "cap_exceeded");
    const auto& c = p.coloring;
    rows.push_back({"chi", std::to_string(c.chi), std::string(status_name(c.chi_status)), ""});
    rows.push_back({"clique", std::to_string(c.clique), std::string(status_name(c.clique_status)),
                    set_text(c.clique_witness, p.labels)});
    std::string shape = c.is_star ? "star" : c.is_complete_bipartite ? "complete bipartite" : c.is_bipartite ? "bipartite" : "no";
    rows.push_back({"bipartite", shape, "", ""});

    std::size_t w0 = 9, w1 = 5, w2 = 6;
    for (const auto& r : rows) {
        w0 = std::max(w0, r.name.size());
        w1 = std::max(w1, r.value.size());
        w2 = std::max(w2, r.status.size());
    }
    std::ostringstream out;
    out << p.variant << " ring " << p.ring_text << " module " << p.module_text << "\n";
    auto line = [&](const std::string& a, const std::string& b, const std::string& c2, const std::string& d) {
        out << a << std::string(w0 - a.size() + 2, ' ') << b << std::string(w1 - b.size() + 2, ' ') << c2;
        if (!d.empty()) out << std::string(w2 - c2.size() + 2, ' ') << d;
        out << "\n";
    };
    line("parameter", "value", "status", "witness");
    for (const auto& r : rows) line(r.name, r.value, r.status, r.witness);
    return out.str();
}

}  // namespace annigraph
