#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "annigraph/cli.hpp"
#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"

namespace py = pybind11;
using namespace annigraph;

namespace {

SubmoduleLattice lattice(const std::string& ring, const std::string& module) {
    return enumerate_submodules(ModuleSpec::parse(RingSpec::parse(ring), module));
}

GraphVariant variant(bool star) { return star ? GraphVariant::ag_star : GraphVariant::ag; }

ExportFormat export_format(const std::string& name) {
    if (name == "dot") return ExportFormat::dot;
    if (name == "json") return ExportFormat::json;
    if (name == "csv") return ExportFormat::csv_edges;
    throw Error("unknown graph format '" + name + "'");
}

// JSON crosses the boundary as text; the Python wrapper decodes it.
std::string describe(const std::string& ring, const std::string& module) {
    return describe_json(lattice(ring, module)).dump();
}

std::string graph(const std::string& ring, const std::string& module, bool star, const std::string& format) {
    return export_graph(build_ag(lattice(ring, module), variant(star)), export_format(format));
}

std::string params(const std::string& ring, const std::string& module, bool star, std::size_t exact_cap) {
    auto G = build_ag(lattice(ring, module), variant(star));
    return to_json(param_report(G, exact_cap)).dump();
}

std::pair<std::string, bool> suite_run(const std::vector<std::string>& families, Int budget,
                                       const std::vector<std::string>& claims, const std::string& format,
                                       std::size_t exact_cap, std::size_t threads) {
    SuiteConfig config;
    if (!families.empty()) {
        config.families.clear();
        for (const auto& name : families) {
            auto f = parse_family(name);
            if (!f) throw Error("unknown family '" + name + "'");
            config.families.push_back(*f);
        }
    }
    config.budget = budget;
    config.claims = claims;
    config.exact_cap = exact_cap;
    config.threads = threads;
    if (format != "json" && format != "md") throw Error("unknown report format '" + format + "'");
    SuiteResult result;
    {
        py::gil_scoped_release release;
        result = run_suite(config);
    }
    return {report(result, format == "json" ? ReportFormat::json : ReportFormat::markdown), result.green()};
}

std::vector<std::pair<std::string, std::string>> family_instances(const std::string& family, Int budget) {
    auto f = parse_family(family);
    if (!f) throw Error("unknown family '" + family + "'");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& i : generate_family(*f, budget)) out.emplace_back(i.ring_text, i.module_text);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Annihilating-submodule graphs of finite modules (native core)";

    auto& error = py::register_exception<Error>(m, "AnnigraphError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

    m.def("describe", &describe, py::arg("ring"), py::arg("module"));
    m.def("graph", &graph, py::arg("ring"), py::arg("module"), py::arg("star") = false, py::arg("format") = "json");
    m.def("params", &params, py::arg("ring"), py::arg("module"), py::arg("star") = false,
          py::arg("exact_cap") = kDefaultExactCap);
    m.def("suite_run", &suite_run, py::arg("families") = std::vector<std::string>{}, py::arg("budget") = kDefaultBudget,
          py::arg("claims") = std::vector<std::string>{}, py::arg("format") = "json",
          py::arg("exact_cap") = kDefaultExactCap, py::arg("threads") = 0);
    m.def("family_instances", &family_instances, py::arg("family"), py::arg("budget") = kDefaultBudget);
    m.attr("families") = [] {
        std::vector<std::string> names;
        for (Family f : all_families()) names.emplace_back(family_name(f));
        return names;
    }();
}
