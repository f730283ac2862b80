#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annigraph/ag_graph.hpp"
#include "annigraph/graph.hpp"
#include "json.hpp"

namespace annigraph {

/// Exact solvers use 64-bit vertex masks, so the exact cap can never exceed this.
inline constexpr std::size_t kMaxExactCap = 64;
inline constexpr std::size_t kDefaultExactCap = 26;

enum class SolverStatus { exact, bound_only, infeasible };
std::string_view status_name(SolverStatus s);

enum class DominationVariant { plain, total, connected, clique, paired };
std::string_view domination_name(DominationVariant v);

struct SolverResult {
    std::size_t value = 0;
    VertexSet witness;
    SolverStatus status = SolverStatus::exact;
};

// ---------------------------------------------------------------------------------------------
// Metric parameters

struct MetricReport {
    bool is_connected = true;
    /// Hop distances; nullopt marks unreachable pairs.
    std::vector<std::vector<std::optional<std::size_t>>> distance;
    /// Maximum distance to another vertex; nullopt when some vertex is unreachable.
    std::vector<std::optional<std::size_t>> eccentricity;
    /// Over finite eccentricities only; absent when none is finite (disconnected or empty graph).
    std::optional<std::size_t> radius;
    std::optional<std::size_t> diameter;
    VertexSet center;
};

MetricReport metric_report(const SimpleGraph& G);

// ---------------------------------------------------------------------------------------------
// Domination and irredundance

/// Definitional evaluation of the set predicates used everywhere else (witness checks, oracles).
struct SetPredicates {
    bool is_dominating = false;
    bool is_total_dominating = false;
    bool induces_connected = false;
    bool induces_clique = false;
    bool induces_perfect_matching = false;
    bool is_irredundant = false;
    bool is_maximal_irredundant = false;
    /// P_N(u, S) for each u in S, in the order of S.
    std::vector<VertexSet> private_neighborhoods;
};

SetPredicates set_predicates(const SimpleGraph& G, const VertexSet& S);
bool satisfies(const SimpleGraph& G, const VertexSet& S, DominationVariant variant);

/// Minimum satisfying set, lexicographically least among optima when exact.
/// Exact when order <= exact_cap, otherwise a greedy upper bound flagged bound_only.
/// Throws InfeasibleVariant when no satisfying set exists.
SolverResult domination(const SimpleGraph& G, DominationVariant variant, std::size_t exact_cap = kDefaultExactCap);

/// ir(G): minimum size of a maximal irredundant set. Throws CapExceeded above exact_cap.
SolverResult irredundance_number(const SimpleGraph& G, std::size_t exact_cap = kDefaultExactCap);

/// Whether S is a minimal dominating set (dominating, and no single removal keeps it dominating).
bool is_minimal_dominating(const SimpleGraph& G, const VertexSet& S);

// ---------------------------------------------------------------------------------------------
// Coloring, cliques, bipartite structure

struct ColoringReport {
    std::size_t chi = 0;
    std::vector<std::size_t> coloring;  // color per vertex
    SolverStatus chi_status = SolverStatus::exact;
    std::size_t clique = 0;
    VertexSet clique_witness;
    SolverStatus clique_status = SolverStatus::exact;
    bool is_bipartite = false;
    /// Two-coloring classes when bipartite.
    std::optional<std::pair<VertexSet, VertexSet>> parts;
    bool is_complete_bipartite = false;  // K_{a,b} with a, b >= 1
    bool is_star = false;                // K_{1,m} with m >= 1
};

ColoringReport coloring_report(const SimpleGraph& G, std::size_t exact_cap = kDefaultExactCap);

// ---------------------------------------------------------------------------------------------
// Everything at once

struct ParamReport {
    std::size_t n = 0;
    std::size_t m = 0;
    MetricReport metric;
    /// nullopt when the variant is infeasible on this graph.
    std::optional<SolverResult> gamma, gamma_t, gamma_c, gamma_cl, gamma_pr;
    /// nullopt when above the exact cap.
    std::optional<SolverResult> ir;
    ColoringReport coloring;
    std::vector<std::string> labels;
    std::string ring_text, module_text, variant;
};

/// Computes every parameter, re-validates every witness and the chain inequalities
/// (gamma <= other variants, ir <= gamma, clique <= chi); a violation throws std::logic_error.
ParamReport param_report(const AGGraph& G, std::size_t exact_cap = kDefaultExactCap);

nlohmann::ordered_json to_json(const ParamReport& report);
std::string to_table(const ParamReport& report);

}  // namespace annigraph
