#include "annigraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"

namespace annigraph {

namespace {

using nlohmann::ordered_json;

struct ModuleArgs {
    std::string ring;
    std::string module;
    Int max_module_size = EnumerationCaps{}.max_module_size;
    std::size_t max_submodules = EnumerationCaps{}.max_submodules;

    void attach(CLI::App* cmd) {
        cmd->add_option("--ring", ring, "ring moduli, e.g. 12 or 4,3")->required();
        cmd->add_option("--module", module, "';'-separated cyclic components, e.g. 4;3")->required();
        cmd->add_option("--max-module-size", max_module_size, "cap on |M|")->capture_default_str();
        cmd->add_option("--max-submodules", max_submodules, "cap on the number of submodules")->capture_default_str();
    }
    EnumerationCaps caps() const { return {max_module_size, max_submodules}; }
    SubmoduleLattice lattice() const {
        auto M = ModuleSpec::parse(RingSpec::parse(ring), module);
        return enumerate_submodules(M, caps());
    }
};

std::size_t exact_cap_default() {
    const char* env = std::getenv("ANNIGRAPH_EXACT_CAP");
    if (!env || !*env) return kDefaultExactCap;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > kMaxExactCap) throw Error("ANNIGRAPH_EXACT_CAP must be an integer in 0.." + std::to_string(kMaxExactCap));
    return static_cast<std::size_t>(v);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

nlohmann::ordered_json describe_json(const SubmoduleLattice& L) {
    const ModuleSpec& M = L.module();
    const RingSpec& R = M.ring();
    auto S = structure_report(L);
    auto rs = ring_summary(R);
    auto labels = [&](const std::vector<std::size_t>& idx) {
        ordered_json a = ordered_json::array();
        for (auto i : idx) a.push_back(submodule_label(L.at(i), M));
        return a;
    };
    auto elems = [&](const std::vector<Int>& codes) {
        ordered_json a = ordered_json::array();
        for (auto c : codes) a.push_back(ring_elem_text(ring_decode(R, c)));
        return a;
    };
    auto ideals = [](const std::vector<Ideal>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& i : v) a.push_back(i.text());
        return a;
    };
    std::vector<std::size_t> all(L.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    ordered_json j;
    j["ring"] = R.text();
    j["module"] = M.text();
    j["module_size"] = M.cardinality();
    j["annihilator"] = M.annihilator().text();
    j["faithful"] = M.is_faithful();
    j["submodules"] = labels(all);
    j["maximal"] = labels(S.maximal);
    j["jacobson"] = submodule_label(L.at(S.jacobson), M);
    j["minimal"] = labels(S.minimal);
    j["zero_divisors"] = elems(S.zero_divisors);
    j["associated_primes"] = ideals(S.associated_primes);
    j["is_local"] = S.is_local;
    j["is_simple"] = S.is_simple;
    j["is_prime_module"] = S.is_prime_module;
    j["is_domain_module"] = S.is_domain_module;
    j["m_is_vertex"] = S.m_is_vertex;
    j["ring_summary"] = {{"is_reduced", rs.is_reduced},
                         {"nilradical", rs.nilradical.text()},
                         {"minimal_primes", ideals(minimal_primes(R))},
                         {"idempotents", elems(rs.idempotents)},
                         {"zero_divisor_count", rs.zero_divisors.size()}};
    return j;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Annihilating-submodule graphs of finite modules: construction, invariants, claim checks"};
    app.name("annigraph");
    app.require_subcommand(1);

    ModuleArgs describe_args, graph_args, params_args;
    std::string describe_format = "json";
    auto* describe = app.add_subcommand("describe", "structure report of a module");
    describe_args.attach(describe);

    bool star = false;
    std::string graph_format = "dot";
    auto* graph = app.add_subcommand("graph", "build AG(M) and export it");
    graph_args.attach(graph);
    graph->add_flag("--star", star, "build AG(M)* instead of AG(M)");
    graph->add_option("--format", graph_format, "dot, json or csv")
        ->check(CLI::IsMember({"dot", "json", "csv"}))
        ->capture_default_str();

    bool params_star = false;
    std::optional<std::size_t> params_cap;
    std::string params_format = "json";
    auto* params = app.add_subcommand("params", "every graph invariant of AG(M) with witnesses");
    params_args.attach(params);
    params->add_flag("--star", params_star, "use AG(M)* instead of AG(M)");
    params->add_option("--exact-cap", params_cap, "largest graph solved exactly (env ANNIGRAPH_EXACT_CAP, default 26)")
        ->check(CLI::Range(std::size_t{0}, kMaxExactCap));
    params->add_option("--format", params_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    auto* suite = app.add_subcommand("suite", "claim verification suite");
    suite->require_subcommand(1);
    auto* run = suite->add_subcommand("run", "run the checks over generated families");
    std::vector<std::string> families;
    Int budget = kDefaultBudget;
    std::string claims_text, suite_format = "json", output, allowlist_path;
    std::optional<std::size_t> suite_cap;
    std::size_t threads = 0;
    EnumerationCaps suite_caps;
    run->add_option("--family", families, "family to include (repeatable; default all)")->delimiter(',');
    run->add_option("--budget", budget, "largest |M| generated")->capture_default_str();
    run->add_option("--claims", claims_text, "comma-separated claim ids (default all)");
    run->add_option("--format", suite_format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    run->add_option("--output", output, "write the report here instead of standard output");
    run->add_option("--allowlist", allowlist_path, "known-discrepancy JSON replacing the built-in list");
    run->add_option("--exact-cap", suite_cap, "largest graph solved exactly")->check(CLI::Range(std::size_t{0}, kMaxExactCap));
    run->add_option("--threads", threads, "worker threads, 0 for one per core")->capture_default_str();
    run->add_option("--max-module-size", suite_caps.max_module_size, "cap on |M|")->capture_default_str();
    run->add_option("--max-submodules", suite_caps.max_submodules, "cap on the number of submodules")->capture_default_str();

    auto* family = app.add_subcommand("family", "module families");
    family->require_subcommand(1);
    auto* list = family->add_subcommand("list", "list families and their instances");
    Int list_budget = kDefaultBudget;
    list->add_option("--budget", list_budget, "largest |M| generated")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*describe) {
            out << describe_json(describe_args.lattice()).dump(2) << "\n";
            return 0;
        }
        if (*graph) {
            auto L = graph_args.lattice();
            auto G = build_ag(L, star ? GraphVariant::ag_star : GraphVariant::ag);
            ExportFormat f = graph_format == "dot" ? ExportFormat::dot
                             : graph_format == "json" ? ExportFormat::json
                                                      : ExportFormat::csv_edges;
            out << export_graph(G, f);
            return 0;
        }
        if (*params) {
            std::size_t cap = params_cap ? *params_cap : exact_cap_default();
            auto L = params_args.lattice();
            auto G = build_ag(L, params_star ? GraphVariant::ag_star : GraphVariant::ag);
            auto report = param_report(G, cap);
            if (params_format == "json") out << to_json(report).dump(2) << "\n";
            else out << to_table(report);
            return 0;
        }
        if (*run) {
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
            std::stringstream ss(claims_text);
            for (std::string id; std::getline(ss, id, ',');)
                if (!id.empty()) config.claims.push_back(id);
            config.exact_cap = suite_cap ? *suite_cap : exact_cap_default();
            config.caps = suite_caps;
            config.threads = threads;
            if (!allowlist_path.empty()) config.allowlist = parse_allowlist(read_file(allowlist_path));
            auto result = run_suite(config);
            write_output(report(result, suite_format == "json" ? ReportFormat::json : ReportFormat::markdown), output, out);
            if (!result.green())
                err << "suite: " << result.count(Verdict::fail) << " FAIL, " << result.unknown_discrepancies()
                    << " unknown DISCREPANCY\n";
            return result.green() ? 0 : 1;
        }
        if (*list) {
            for (Family f : all_families()) {
                auto instances = generate_family(f, list_budget);
                out << family_name(f) << " (" << instances.size() << " instances): " << family_description(f) << "\n";
                for (const auto& inst : instances) out << "  " << inst.id() << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace annigraph
