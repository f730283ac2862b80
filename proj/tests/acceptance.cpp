// Acceptance criteria runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"
#include "oracle.hpp"

using namespace annigraph;

namespace {

// Pinned limits. All value comparisons are exact integer equality (zero tolerance).
constexpr double kGoldenSeconds = 5.0;
constexpr double kFamilySeconds = 60.0;
constexpr double kOracleSeconds = 120.0;
constexpr std::size_t kOracleMaxOrder = 16;
constexpr std::size_t kSamples = 500;
constexpr std::uint32_t kSampleSeed = 20261016;

#ifndef ANNIGRAPH_CLI_PATH
#error "ANNIGRAPH_CLI_PATH must name the CLI binary"
#endif

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail << "first failure: ";
        else detail << "; ";
        detail << what;
        pass = false;
    }
};

struct Corpus {
    SuiteResult suite;
    double suite_seconds = 0;
    std::vector<Instance> instances;
    std::vector<AGGraph> graphs;  // AG(M) per instance, same order
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AGGraph build(const std::string& ring, const std::string& module, GraphVariant v = GraphVariant::ag) {
    return build_ag(enumerate_submodules(ModuleSpec::parse(RingSpec::parse(ring), module)), v);
}

std::optional<std::size_t> gamma_of(const SimpleGraph& G, DominationVariant v) {
    try {
        auto r = domination(G, v, kMaxExactCap);
        if (r.status != SolverStatus::exact) throw std::logic_error("inexact solver result");
        return r.value;
    } catch (const InfeasibleVariant&) {
        return std::nullopt;
    }
}

std::set<std::string> label_set(const AGGraph& G) { return {G.labels.begin(), G.labels.end()}; }

std::set<std::pair<std::string, std::string>> edge_set(const AGGraph& G) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : G.graph.edges()) {
        auto a = G.labels[u], b = G.labels[v];
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

std::string str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "undefined"; }

// 1 ------------------------------------------------------------------------------------------
Outcome golden(const Corpus&) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto same = [&](const AGGraph& G, const char* name) {
        auto orc = oracle::graph_values(G.graph);
        o.require(gamma_of(G.graph, DominationVariant::plain) == orc.gamma, std::string(name) + " gamma vs oracle");
        o.require(gamma_of(G.graph, DominationVariant::total) == orc.gamma_t, std::string(name) + " gamma_t vs oracle");
        return orc;
    };

    auto z6 = build("6", "6");
    auto v6 = same(z6, "Z_6");
    o.require(z6.graph.order() == 2 && z6.graph.edge_count() == 1, "AG(Z_6) is not K_2");
    o.require(v6.gamma == 1u && v6.gamma_t == 2u, "AG(Z_6) gamma/gamma_t");

    auto z9 = build("9", "9");
    o.require(z9.graph.order() == 1 && z9.graph.edge_count() == 0, "AG(Z_9) is not K_1");
    o.require(metric_report(z9.graph).radius == 0u, "AG(Z_9) radius");

    auto z12 = build("12", "12");
    auto v12 = same(z12, "Z_12");
    o.require(label_set(z12) == std::set<std::string>{"(2)", "(3)", "(4)", "(6)"}, "AG(Z_12) vertices");
    o.require(edge_set(z12) == std::set<std::pair<std::string, std::string>>{{"(2)", "(6)"}, {"(3)", "(4)"}, {"(4)", "(6)"}},
              "AG(Z_12) edges");
    o.require(v12.gamma == 2u && v12.gamma_t == 2u, "AG(Z_12) gamma/gamma_t");

    auto z30 = build("30", "30");
    auto v30 = same(z30, "Z_30");
    auto min = minimal_primes(RingSpec::parse("30")).size();
    o.require(z30.graph.order() == 6 && z30.graph.edge_count() == 6, "AG(Z_30) size");
    o.require(v30.gamma == 3u && v30.gamma_t == 3u && min == 3, "AG(Z_30) gamma/gamma_t/|Min|");

    double s = seconds_since(t0);
    o.require(s < kGoldenSeconds, "runtime " + std::to_string(s) + " s");
    o.detail << (o.pass ? "" : "; ") << "Z_6, Z_9, Z_12, Z_30 in " << s << " s";
    return o;
}

std::vector<const CheckResult*> applicable(const Corpus& c, const std::string& claim) {
    std::vector<const CheckResult*> out;
    for (const auto& r : c.suite.results)
        if (r.claim_id == claim && r.hypotheses_met) out.push_back(&r);
    return out;
}

// 2, 3 --------------------------------------------------------------------------------------
Outcome all_pass(const Corpus& c, const std::string& claim, bool timed) {
    Outcome o;
    auto rs = applicable(c, claim);
    o.require(!rs.empty(), "no applicable instance");
    for (auto* r : rs) o.require(r->verdict == Verdict::pass, r->instance + ": " + r->computed);
    std::size_t skipped = std::count_if(c.suite.skipped.begin(), c.suite.skipped.end(),
                                        [&](const SkippedCheck& s) { return s.claim_id.empty() || s.claim_id == claim; });
    o.require(skipped == 0, std::to_string(skipped) + " instances skipped");
    if (timed) o.require(c.suite_seconds < kFamilySeconds, "corpus runtime " + std::to_string(c.suite_seconds) + " s");
    o.detail << (o.pass ? "" : "; ") << rs.size() << " instances exact";
    if (timed) o.detail << ", corpus in " << c.suite_seconds << " s";
    return o;
}

// 4 ------------------------------------------------------------------------------------------
Outcome total_dichotomy(const Corpus& c) {
    Outcome o;
    std::size_t evaluated = 0, undefined = 0;
    for (std::size_t i = 0; i < c.graphs.size(); ++i) {
        const auto& G = c.graphs[i].graph;
        auto g = gamma_of(G, DominationVariant::plain);
        auto t = gamma_of(G, DominationVariant::total);
        if (!t) {
            ++undefined;  // an isolated vertex: no total dominating set exists
            continue;
        }
        ++evaluated;
        o.require(g && *t >= *g && *t - *g <= 1, c.instances[i].id() + ": gamma " + str(g) + ", gamma_t " + str(t));
    }
    o.detail << (o.pass ? "" : "; ") << evaluated << " graphs with gamma_t defined, " << undefined
             << " excluded (gamma_t undefined: isolated vertex)";
    return o;
}

// 5 ------------------------------------------------------------------------------------------
Outcome radius_two(const Corpus& c) {
    Outcome o;
    auto rs = applicable(c, "C-2.4");
    o.require(!rs.empty(), "no applicable instance");
    std::size_t center_known = 0;
    for (auto* r : rs) {
        for (std::size_t i = 0; i < c.instances.size(); ++i)
            if (c.instances[i].id() == r->instance)
                o.require(metric_report(c.graphs[i].graph).radius == 2u, r->instance + ": radius is not 2");
        bool radius_failed = std::count(r->failed_parts.begin(), r->failed_parts.end(), "radius") > 0;
        o.require(!radius_failed, r->instance + ": radius part failed");
        if (r->verdict == Verdict::discrepancy) {
            o.require(r->known, r->instance + ": center mismatch not on the allowlist");
            if (r->known) ++center_known;
        }
        o.require(r->verdict != Verdict::fail, r->instance + ": FAIL");
        o.require(r->evidence.contains("center_inside_jacobson"), r->instance + ": center-in-J(M) check missing");
    }
    o.detail << (o.pass ? "" : "; ") << rs.size() << " instances radius 2, " << center_known
             << " center mismatches on the allowlist";
    return o;
}

// 6 ------------------------------------------------------------------------------------------
Outcome ass_bound(const Corpus& c) {
    Outcome o;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        auto L = enumerate_submodules(c.instances[i].module());
        auto ass = structure_report(L).associated_primes.size();
        auto g = gamma_of(c.graphs[i].graph, DominationVariant::plain);
        o.require(g && *g <= ass, c.instances[i].id() + ": gamma " + str(g) + " > |Ass| " + std::to_string(ass));
    }
    o.detail << (o.pass ? "" : "; ") << c.instances.size() << " instances";
    return o;
}

// 7 ------------------------------------------------------------------------------------------
Outcome two_factor(const Corpus& c) {
    Outcome o;
    std::size_t checked = 0, mismatches = 0;
    std::ostringstream bad;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& inst = c.instances[i];
        if (inst.family != Family::product_mixed || !inst.split_slots) continue;
        auto M = inst.module();
        std::size_t k = *inst.split_slots;
        std::array<ModuleSpec, 2> parts{M.restrict_slots(0, k), M.restrict_slots(k, M.ring().slots() - k)};
        std::array<bool, 2> prime{};
        std::array<std::optional<std::size_t>, 2> g{};
        for (int f = 0; f < 2; ++f) {
            auto L = enumerate_submodules(parts[f]);
            prime[f] = structure_report(L).is_prime_module;
            g[f] = gamma_of(build_ag(L, GraphVariant::ag).graph, DominationVariant::plain);
        }
        std::optional<std::size_t> expect;
        std::string rule;
        if (!prime[0] && !prime[1]) {
            expect = *g[0] + *g[1];
            rule = "(d)";
        } else if (!prime[0] && prime[1]) {
            expect = *g[0] + 1;
            rule = "(c)";
        } else if (prime[0] && !prime[1]) {
            expect = *g[1] + 1;
            rule = "(c, factors swapped)";
        } else {
            continue;
        }
        ++checked;
        auto got = gamma_of(c.graphs[i].graph, DominationVariant::plain);
        if (got != expect) {
            ++mismatches;
            bad << (mismatches > 1 ? ", " : "") << inst.ring_text << " " << rule << " expected " << *expect << " got "
                << str(got);
        }
    }
    o.require(checked > 0, "no two-factor instance in case (c) or (d)");
    o.require(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(checked) + " mismatch: " + bad.str());
    if (o.pass) o.detail << checked << " two-factor instances";
    return o;
}

// 8 ------------------------------------------------------------------------------------------
Outcome oracle_equivalence(const Corpus& c) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t compared = 0, too_big = 0;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        for (GraphVariant variant : {GraphVariant::ag, GraphVariant::ag_star}) {
            auto A = variant == GraphVariant::ag ? c.graphs[i]
                                                 : build(c.instances[i].ring_text, c.instances[i].module_text, variant);
            const auto& G = A.graph;
            if (G.order() > kOracleMaxOrder) {
                ++too_big;
                continue;
            }
            ++compared;
            auto want = oracle::graph_values(G);
            auto col = coloring_report(G, kMaxExactCap);
            auto ir = irredundance_number(G, kMaxExactCap);
            std::string where = c.instances[i].id() + " " + std::string(variant_name(variant));
            o.require(gamma_of(G, DominationVariant::plain) == want.gamma, where + " gamma");
            o.require(gamma_of(G, DominationVariant::total) == want.gamma_t, where + " gamma_t");
            o.require(gamma_of(G, DominationVariant::connected) == want.gamma_c, where + " gamma_c");
            o.require(gamma_of(G, DominationVariant::clique) == want.gamma_cl, where + " gamma_cl");
            o.require(gamma_of(G, DominationVariant::paired) == want.gamma_pr, where + " gamma_pr");
            o.require(want.ir && ir.value == *want.ir, where + " ir");
            o.require(col.chi == want.chi && col.chi_status == SolverStatus::exact, where + " chi");
            o.require(col.clique == want.clique && col.clique_status == SolverStatus::exact, where + " clique");
        }
    }
    double s = seconds_since(t0);
    o.require(s < kOracleSeconds, "runtime " + std::to_string(s) + " s");
    o.require(compared > 0, "nothing compared");
    o.detail << (o.pass ? "" : "; ") << compared << " graphs compared on 8 parameters (" << too_big
             << " above " << kOracleMaxOrder << " vertices) in " << s << " s";
    return o;
}

// 9 ------------------------------------------------------------------------------------------
Outcome minimal_dominating_sample(const Corpus& c) {
    Outcome o;
    std::vector<const SimpleGraph*> pool;
    for (const auto& A : c.graphs)
        if (A.graph.order() > 0 && A.graph.order() <= 32) pool.push_back(&A.graph);
    o.require(!pool.empty(), "no graphs");
    if (!o.pass) return o;
    std::mt19937 rng(kSampleSeed);
    std::size_t violations = 0;
    for (std::size_t s = 0; s < kSamples; ++s) {
        const auto& G = *pool[rng() % pool.size()];
        // Peel vertices in random order while the rest still dominates: the result is a
        // minimal dominating set, and every minimal dominating set is reachable this way.
        std::vector<std::size_t> order(G.order());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        oracle::Mask S = (oracle::Mask{1} << G.order()) - 1;
        if (G.order() == 32) S = ~oracle::Mask{0};
        for (auto v : order) {
            oracle::Mask smaller = S & ~(oracle::Mask{1} << v);
            if (oracle::dominating(G, smaller)) S = smaller;
        }
        auto set = oracle::members(S, G.order());
        bool minimal = is_minimal_dominating(G, set);
        bool maximal_irr = oracle::maximal_irredundant(G, S) && set_predicates(G, set).is_maximal_irredundant;
        if (!minimal || !maximal_irr) ++violations;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.detail << (o.pass ? "" : "; ") << kSamples << " samples over " << pool.size() << " graphs, seed " << kSampleSeed;
    return o;
}

// 10 -----------------------------------------------------------------------------------------
std::pair<int, std::string> capture(const std::string& command) {
    std::string out;
    FILE* p = popen(command.c_str(), "r");
    if (!p) return {-1, out};
    std::array<char, 65536> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism(const Corpus& c) {
    Outcome o;
    SuiteConfig config;
    auto again = report(run_suite(config), ReportFormat::json);
    o.require(report(c.suite, ReportFormat::json) == again, "library reports differ");
    std::string cmd = std::string("'") + ANNIGRAPH_CLI_PATH + "' suite run --format json";
    auto first = capture(cmd), second = capture(cmd);
    o.require(first.first == 0 && second.first == 0, "suite run exit status " + std::to_string(first.first) + "/" +
                                                         std::to_string(second.first));
    o.require(!first.second.empty() && first.second == second.second, "CLI reports differ");
    o.require(first.second == again, "CLI and library reports differ");
    o.detail << (o.pass ? "" : "; ") << "two library runs and two CLI runs, " << first.second.size() << " bytes each";
    return o;
}

}  // namespace

int main() {
    Corpus corpus;
    try {
        auto t0 = std::chrono::steady_clock::now();
        corpus.suite = run_suite(SuiteConfig{});
        corpus.suite_seconds = seconds_since(t0);
        corpus.instances = corpus.suite.instances;
        for (const auto& inst : corpus.instances) corpus.graphs.push_back(build(inst.ring_text, inst.module_text));
    } catch (const std::exception& e) {
        std::cout << "FAIL corpus construction: " << e.what() << "\n";
        return 1;
    }

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome(const Corpus&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden instances", golden},
        {2, "direct-sum domination number equals n", [](const Corpus& c) { return all_pass(c, "C-2.6", true); }},
        {3, "direct-sum ir and domination variants", [](const Corpus& c) { return all_pass(c, "C-2.7", false); }},
        {4, "total domination dichotomy", total_dichotomy},
        {5, "direct-sum radius 2 and center", radius_two},
        {6, "domination bounded by |Ass(M)|", ass_bound},
        {7, "two-factor product additivity", two_factor},
        {8, "solver and oracle agreement", oracle_equivalence},
        {9, "minimal dominating sets are maximal irredundant", minimal_dominating_sample},
        {10, "deterministic suite reports", determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run(corpus);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
                  << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
