#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"

namespace annigraph {

namespace {

using nlohmann::ordered_json;

const std::vector<ClaimInfo> kClaims = {
    {"C-1.1", "idempotent_decomposition", true},
    {"C-1.2", "orthogonal_idempotents", true},
    {"C-1.4", "minimal_submodule_dichotomy", false},
    {"C-1.5", "proper_submodules_are_vertices", false},
    {"C-1.6", "universal_vertex_characterization", false},
    {"C-1.7", "faithful_bipartite_equivalence", false},
    {"C-1.8", "reduced_bipartite_equivalence", false},
    {"C-1.9", "minimal_dominating_is_maximal_irredundant", true},
    {"C-2.1", "domain_module_domination_one", false},
    {"C-2.2", "local_radius_and_center", false},
    {"C-2.3", "local_gamma_sets", false},
    {"C-2.4", "direct_sum_radius_and_center", false},
    {"C-2.5", "semisimple_radius_and_center", false},
    {"C-2.6", "direct_sum_domination", false},
    {"C-2.7", "direct_sum_domination_variants", false},
    {"C-2.8", "domination_counts_maximal_submodules", false},
    {"C-3.1", "total_domination_dichotomy", false},
    {"C-3.2", "total_domination_of_maximal_vertices", false},
    {"C-3.3", "reduced_total_domination", false},
    {"C-3.4", "reduced_two_primes_equivalence", false},
    {"C-3.5", "bipartite_domination_bound", false},
    {"C-3.6", "direct_sum_total_domination", false},
    {"C-3.7", "associated_primes_bound", false},
    {"C-3.8", "two_factor_product_domination", false},
    {"C-conn", "star_graph_connected", false},
};

const std::vector<std::pair<std::string, std::string>> kOutOfScope = {
    {"C-1.3", "idempotent lifting modulo a nil ideal; idempotents are enumerated exhaustively instead"},
};

struct Block {
    RingElem idempotent;
    std::size_t index = 0;  // eM in the lattice
    bool local = false;
    bool simple = false;
    std::size_t socle_power = 0;  // last nonzero (J_i : M)^k M, or the block itself when simple
};

// Everything the checkers share for one instance.
class Context {
public:
    Context(const Instance& inst, const SuiteConfig& config)
        : inst(inst),
          M(inst.module()),
          L(enumerate_submodules(M, config.caps)),
          S(structure_report(L)),
          ring(ring_summary(M.ring())),
          min_primes(minimal_primes(M.ring())),
          ag(build_ag(L, GraphVariant::ag)),
          ag_star(build_ag(L, GraphVariant::ag_star)),
          cap(config.exact_cap) {
        annihilator_is_nil = is_nil_ideal(M.annihilator());
        faithful = M.is_faithful();
        standing = !S.m_is_vertex;
        for (std::size_t v = 0; v < ag.vertices.size(); ++v) vertex_of[ag.vertices[v]] = v;

        int length = 0;
        for (const auto& c : M.coordinates()) length += nt::prime_length(c.modulus);
        two_simple = length == 2 && L.at(S.jacobson).is_zero();

        for (const auto& e : primitive_idempotents(M.ring())) {
            Submodule eM = scalar_image(M, e, full_submodule(M));
            if (eM.is_zero()) continue;
            Block b;
            b.idempotent = e;
            b.index = L.index_of(eM);
            auto maxes = maximal_below(b.index);
            b.local = maxes.size() == 1;
            b.simple = b.local && L.at(maxes.front()).is_zero();
            if (b.simple) {
                b.socle_power = b.index;
            } else if (b.local) {
                Ideal J = L.at(maxes.front()).colon();
                Ideal power = J;
                Submodule last = ideal_times_module(M, power);
                for (;;) {
                    power = ideal_combine(power, J, IdealOp::product);
                    Submodule next = ideal_times_module(M, power);
                    if (next.is_zero() || next == last) break;
                    last = next;
                }
                b.socle_power = L.index_of(last);
            }
            blocks.push_back(b);
        }
        direct_sum_local = blocks.size() >= 2 &&
                           std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.local; });
        semisimple_blocks = blocks.size() >= 2 &&
                            std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.simple; });
    }

    const Instance& inst;
    ModuleSpec M;
    SubmoduleLattice L;
    StructureReport S;
    RingSummary ring;
    std::vector<Ideal> min_primes;
    AGGraph ag, ag_star;
    std::size_t cap;
    std::map<std::size_t, std::size_t> vertex_of;  // lattice index -> AG vertex
    bool annihilator_is_nil = false, faithful = false, standing = false, two_simple = false;
    std::vector<Block> blocks;
    bool direct_sum_local = false, semisimple_blocks = false;

    const ParamReport& params() {
        if (!params_) params_ = param_report(ag, cap);
        return *params_;
    }

    bool contained(std::size_t inner, std::size_t outer) const { return L.at(outer).contains(L.at(inner)); }

    /// Lattice indices of the maximal proper submodules of L[a].
    std::vector<std::size_t> maximal_below(std::size_t a) const {
        std::vector<std::size_t> below;
        for (std::size_t i = 0; i < L.size(); ++i)
            if (i != a && contained(i, a)) below.push_back(i);
        std::vector<std::size_t> out;
        for (auto k : below) {
            bool covered = std::any_of(below.begin(), below.end(),
                                       [&](std::size_t j) { return j != k && contained(k, j); });
            if (!covered) out.push_back(k);
        }
        return out;
    }

    std::string label(std::size_t lattice_index) const { return submodule_label(L.at(lattice_index), M); }

    ordered_json labels(const std::vector<std::size_t>& lattice_indices) const {
        ordered_json out = ordered_json::array();
        for (auto i : lattice_indices) out.push_back(label(i));
        return out;
    }

    ordered_json vertex_labels(const AGGraph& G, const VertexSet& vs) const {
        ordered_json out = ordered_json::array();
        for (auto v : vs) out.push_back(G.labels.at(v));
        return out;
    }

    /// AG vertices as lattice indices.
    std::set<std::size_t> lattice_set(const VertexSet& vs) const {
        std::set<std::size_t> out;
        for (auto v : vs) out.insert(ag.vertices.at(v));
        return out;
    }

    /// The idempotent-generated submodules eM, as lattice indices.
    std::set<std::size_t> idempotent_images() const {
        std::set<std::size_t> out;
        for (Int code : ring.idempotents)
            out.insert(L.index_of(scalar_image(M, ring_decode(M.ring(), code), full_submodule(M))));
        return out;
    }

    bool is_prime_module_at(std::size_t index) const {
        if (L.at(index).is_zero()) return false;
        return is_prime_relative(M, zero_submodule(M), L.at(index));
    }

    bool is_simple_at(std::size_t index) const {
        return std::find(S.minimal.begin(), S.minimal.end(), index) != S.minimal.end();
    }

    /// Some idempotent e with eM simple and (1 - e)M a prime module.
    std::optional<Int> simple_prime_split() const {
        const RingSpec& R = M.ring();
        for (Int code : ring.idempotents) {
            RingElem e = ring_decode(R, code);
            RingElem f = ring_sub(R, ring_one(R), e);
            std::size_t a = L.index_of(scalar_image(M, e, full_submodule(M)));
            std::size_t b = L.index_of(scalar_image(M, f, full_submodule(M)));
            if (is_simple_at(a) && is_prime_module_at(b)) return code;
        }
        return std::nullopt;
    }

    ordered_json metric_evidence(const MetricReport& m, const AGGraph& G) const {
        ordered_json dist = ordered_json::array();
        for (const auto& row : m.distance) {
            ordered_json r = ordered_json::array();
            for (const auto& d : row) r.push_back(d ? ordered_json(*d) : ordered_json("inf"));
            dist.push_back(r);
        }
        ordered_json ecc = ordered_json::array();
        for (const auto& e : m.eccentricity) ecc.push_back(e ? ordered_json(*e) : ordered_json("inf"));
        return {{"labels", G.labels}, {"distance", dist}, {"eccentricity", ecc}};
    }

private:
    std::optional<ParamReport> params_;
};

std::size_t exact_value(const std::optional<SolverResult>& r, const char* name) {
    if (!r) throw std::logic_error(std::string(name) + " is undefined on this graph");
    if (r->status != SolverStatus::exact)
        throw CapExceeded(std::string(name) + " is only bounded above the exact cap", r->value);
    return r->value;
}

std::optional<std::size_t> exact_or_undefined(const std::optional<SolverResult>& r, const char* name) {
    if (!r) return std::nullopt;
    return exact_value(r, name);
}

ColoringReport exact_coloring(const SimpleGraph& G, std::size_t cap) {
    auto c = coloring_report(G, cap);
    if (c.chi_status != SolverStatus::exact) throw CapExceeded("chromatic number above the exact cap", G.order());
    return c;
}

std::string set_text(const std::set<std::size_t>& lattice_indices, const Context& c) {
    std::string out = "{";
    bool first = true;
    for (auto i : lattice_indices) {
        if (!first) out += ", ";
        first = false;
        out += c.label(i);
    }
    return out + "}";
}

ordered_json opt_json(const std::optional<std::size_t>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("undefined"); }

// Each checker fills hypotheses, expected/computed, failed_parts and evidence; the verdict is
// derived afterwards.
using Checker = std::function<void(Context&, CheckResult&)>;

bool require_standing(Context& c, CheckResult& r) {
    if (c.standing) return true;
    r.hypotheses = "M is a vertex of AG(M)";
    return false;
}

void check_idempotent_decomposition(Context& c, CheckResult& r) {
    const RingSpec& R = c.M.ring();
    std::vector<Int> nontrivial;
    for (Int code : c.ring.idempotents) {
        RingElem e = ring_decode(R, code);
        if (!ring_is_zero(e) && e != ring_one(R)) nontrivial.push_back(code);
    }
    if (nontrivial.empty()) {
        r.hypotheses = "R has no idempotent other than 0 and 1";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = std::to_string(nontrivial.size()) + " nontrivial idempotents";
    r.expected = "M = eM x (1-e)M with submodules, colons, products and primes splitting";

    std::set<std::string> failed;
    ordered_json bad = ordered_json::array();
    const Submodule full = full_submodule(c.M);
    std::vector<std::size_t> primes;
    for (std::size_t i = 0; i < c.L.size(); ++i)
        if (c.L.at(i).is_proper() && is_prime_submodule(c.L.at(i), c.M)) primes.push_back(i);

    for (Int code : nontrivial) {
        RingElem e = ring_decode(R, code);
        RingElem f = ring_sub(R, ring_one(R), e);
        auto split = idempotent_decompose(c.L, e);
        auto note = [&](const std::string& part, ordered_json detail) {
            failed.insert(part);
            bad.push_back({{"e", ring_elem_text(e)}, {"part", part}, {"detail", detail}});
        };
        if (!split.is_direct) note("b_direct_sum", nullptr);
        if (!split.every_submodule_splits) note("c_submodule_split", nullptr);

        const Submodule& eM = split.first;
        const Submodule& fM = split.second;
        std::vector<Ideal> c1, c2;
        std::vector<Submodule> p1, p2;
        for (const auto& N : c.L.submodules()) {
            Submodule N1 = scalar_image(c.M, e, N), N2 = scalar_image(c.M, f, N);
            c1.push_back(relative_colon(c.M, N1, eM));
            c2.push_back(relative_colon(c.M, N2, fM));
            if (N.colon() != ideal_combine(c1.back(), c2.back(), IdealOp::intersection))
                note("c_colon_split", submodule_label(N, c.M));
            p1.push_back(N1);
            p2.push_back(N2);
        }
        for (std::size_t a = 0; a < c.L.size(); ++a)
            for (std::size_t b = a; b < c.L.size(); ++b) {
                Submodule lhs = submodule_product(c.L.at(a), c.L.at(b), c.M);
                Submodule left = ideal_times(c.M, ideal_combine(c1[a], c1[b], IdealOp::product), eM);
                Submodule right = ideal_times(c.M, ideal_combine(c2[a], c2[b], IdealOp::product), fM);
                if (lhs != submodule_sum(c.M, left, right))
                    note("d_product_split", ordered_json::array({c.label(a), c.label(b)}));
            }

        std::set<std::size_t> expected_primes;
        for (std::size_t i = 0; i < c.L.size(); ++i) {
            const Submodule& P = c.L.at(i);
            if (eM.contains(P) && P != eM && is_prime_relative(c.M, P, eM))
                expected_primes.insert(c.L.index_of(submodule_sum(c.M, P, fM)));
            if (fM.contains(P) && P != fM && is_prime_relative(c.M, P, fM))
                expected_primes.insert(c.L.index_of(submodule_sum(c.M, eM, P)));
        }
        if (std::set<std::size_t>(primes.begin(), primes.end()) != expected_primes)
            note("e_prime_submodules",
                 {{"prime", c.labels(primes)},
                  {"from_factors", c.labels(std::vector<std::size_t>(expected_primes.begin(), expected_primes.end()))}});
        (void)full;
    }
    r.failed_parts.assign(failed.begin(), failed.end());
    r.computed = failed.empty() ? "every nontrivial idempotent splits M" : "split failures";
    r.evidence = {{"idempotents", nontrivial}, {"failures", bad}};
}

void check_orthogonal_idempotents(Context& c, CheckResult& r) {
    const RingSpec& R = c.M.ring();
    auto prim = primitive_idempotents(R);
    r.hypotheses_met = true;
    r.hypotheses = "R is a finite product of local rings";
    r.expected = "pairwise orthogonal idempotents summing to 1 with R = Re_1 x ... x Re_n";

    RingElem sum = ring_zero(R);
    Int product_of_sizes = 1;
    std::set<std::string> failed;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        sum = ring_add(R, sum, prim[i]);
        Ideal Ri = Ideal::generated_by(R, prim[i]);
        if (Ri.is_zero()) failed.insert("nonzero_factors");
        product_of_sizes *= Ri.cardinality();
        for (std::size_t j = i + 1; j < prim.size(); ++j) {
            if (!ring_is_zero(ring_mul(R, prim[i], prim[j]))) failed.insert("orthogonal");
            if (!ideal_combine(Ri, Ideal::generated_by(R, prim[j]), IdealOp::intersection).is_zero())
                failed.insert("direct_sum");
        }
    }
    if (sum != ring_one(R)) failed.insert("sum_is_one");
    if (product_of_sizes != R.cardinality()) failed.insert("direct_sum");
    // Independent count: a product of n connected factors has exactly 2^n idempotents.
    if (c.ring.idempotents.size() != (std::size_t{1} << prim.size())) failed.insert("idempotent_count");

    r.failed_parts.assign(failed.begin(), failed.end());
    ordered_json es = ordered_json::array();
    for (const auto& e : prim) es.push_back(ring_elem_text(e));
    r.computed = std::to_string(prim.size()) + " primitive idempotents";
    r.evidence = {{"primitive_idempotents", es}, {"idempotent_count", c.ring.idempotents.size()}};
}

void check_minimal_dichotomy(Context& c, CheckResult& r) {
    if (!c.annihilator_is_nil) {
        r.hypotheses = "Ann(M) is not nil";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "Ann(M) is nil";
    r.expected = "every minimal N has N^2 = 0 or N = eM";
    auto images = c.idempotent_images();
    ordered_json rows = ordered_json::array();
    for (auto i : c.S.minimal) {
        bool square_zero = submodule_product(c.L.at(i), c.L.at(i), c.M).is_zero();
        bool is_image = images.count(i) > 0;
        rows.push_back({{"N", c.label(i)}, {"square_zero", square_zero}, {"idempotent_image", is_image}});
        if (!square_zero && !is_image) r.failed_parts = {"dichotomy"};
    }
    r.computed = r.failed_parts.empty() ? "holds for all minimal submodules" : "some minimal submodule fails";
    r.evidence = {{"minimal", rows}};
}

void check_proper_are_vertices(Context& c, CheckResult& r) {
    r.hypotheses_met = true;
    r.hypotheses = "M finitely generated and R/Ann(M) Artinian";
    r.expected = "every nonzero proper submodule is a vertex of AG(M)";
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < c.L.size(); ++i) {
        const auto& N = c.L.at(i);
        if (!N.is_zero() && N.is_proper() && !c.vertex_of.count(i)) missing.push_back(i);
    }
    if (!missing.empty()) r.failed_parts = {"non_vertex_submodule"};
    r.computed = std::to_string(missing.size()) + " nonzero proper submodules are not vertices";
    r.evidence = {{"not_vertices", c.labels(missing)}};
}

void check_universal_vertex(Context& c, CheckResult& r) {
    if (!c.annihilator_is_nil) {
        r.hypotheses = "Ann(M) is not nil";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "Ann(M) is nil; prime module read as (0) prime";
    const auto& G = c.ag.graph;
    std::optional<std::size_t> universal;
    for (std::size_t v = 0; v < G.order() && !universal; ++v)
        if (G.degree(v) + 1 == G.order()) universal = v;

    auto split = c.simple_prime_split();
    std::optional<std::size_t> colon_witness;
    for (std::size_t i = 0; i < c.L.size() && !colon_witness; ++i) {
        const auto& N = c.L.at(i);
        if (N.is_zero() || !N.is_proper()) continue;
        Ideal a = annihilator_ideal(c.M, ideal_times_module(c.M, N.colon()));
        std::vector<Int> members;
        for_each_ring_element(c.M.ring(), [&](const RingElem& x) {
            if (a.contains(x)) members.push_back(ring_encode(c.M.ring(), x));
        });
        if (members == c.S.zero_divisors) colon_witness = i;
    }
    bool rhs = split.has_value() || colon_witness.has_value() || c.S.m_is_vertex;
    bool lhs = universal.has_value();
    if (lhs != rhs) r.failed_parts = {"equivalence"};
    r.expected = "universal vertex exists iff the structural condition holds";
    r.computed = std::string("universal vertex: ") + (lhs ? "yes" : "no") + ", structural condition: " + (rhs ? "yes" : "no");
    r.evidence = {{"universal_vertex", universal ? ordered_json(G.order() ? c.ag.labels[*universal] : "") : ordered_json(nullptr)},
                  {"simple_prime_idempotent", split ? ordered_json(ring_elem_text(ring_decode(c.M.ring(), *split))) : ordered_json(nullptr)},
                  {"zero_divisor_colon_witness", colon_witness ? ordered_json(c.label(*colon_witness)) : ordered_json(nullptr)},
                  {"m_is_vertex", c.S.m_is_vertex}};
}

// Shared by the bipartite equivalences: items (a) chi = 2, (b) bipartite with both parts
// nonempty, (c) complete bipartite, (d) supplied.
void bipartite_equivalence(Context& c, CheckResult& r, const AGGraph& G, bool d, const std::string& d_text) {
    auto col = exact_coloring(G.graph, c.cap);
    bool a = col.chi == 2;
    bool b = col.is_bipartite && G.graph.edge_count() > 0;
    bool cc = col.is_complete_bipartite;
    if (a != b) r.failed_parts.push_back("a_vs_b");
    if (a != cc) r.failed_parts.push_back("a_vs_c");
    if (a != d) r.failed_parts.push_back("a_vs_d");
    r.expected = "(a) chi = 2, (b) bipartite, (c) complete bipartite, (d) " + d_text + " all agree";
    auto yn = [](bool x) { return x ? "T" : "F"; };
    r.computed = std::string("a=") + yn(a) + " b=" + yn(b) + " c=" + yn(cc) + " d=" + yn(d);
    r.evidence = {{"graph", variant_name(G.variant)},
                  {"n", G.graph.order()},
                  {"labels", G.labels},
                  {"edges", G.graph.edges()},
                  {"chi", col.chi},
                  {"is_bipartite", col.is_bipartite},
                  {"is_complete_bipartite", col.is_complete_bipartite},
                  {"is_star", col.is_star}};
}

void check_faithful_bipartite(Context& c, CheckResult& r) {
    if (!c.faithful) {
        r.hypotheses = "M is not faithful";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M is faithful";
    auto col = exact_coloring(c.ag_star.graph, c.cap);
    bool d = (c.ring.is_reduced && c.min_primes.size() == 2) || (col.is_star && c.ag_star.graph.order() > 1);
    bipartite_equivalence(c, r, c.ag_star, d, "R reduced with two minimal primes or AG* a star");
}

void check_reduced_bipartite(Context& c, CheckResult& r) {
    if (!c.ring.is_reduced || !c.faithful) {
        r.hypotheses = !c.ring.is_reduced ? "R is not reduced" : "M is not faithful";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "R reduced, M faithful";
    bipartite_equivalence(c, r, c.ag_star, c.min_primes.size() == 2, "|Min(R)| = 2");
}

void check_minimal_dominating_irredundant(Context& c, CheckResult& r) {
    const auto& G = c.ag.graph;
    const std::size_t limit = std::min<std::size_t>(c.cap, 20);
    if (G.order() > limit) throw CapExceeded("minimal dominating set enumeration above 20 vertices", G.order());
    r.hypotheses_met = true;
    r.hypotheses = "any graph";
    r.expected = "every minimal dominating set is maximal irredundant";
    std::size_t minimal_count = 0;
    ordered_json bad = ordered_json::array();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << G.order()); ++mask) {
        VertexSet S;
        for (std::size_t v = 0; v < G.order(); ++v)
            if (mask >> v & 1) S.push_back(v);
        if (!is_minimal_dominating(G, S)) continue;
        ++minimal_count;
        if (!set_predicates(G, S).is_maximal_irredundant) bad.push_back(c.vertex_labels(c.ag, S));
    }
    if (!bad.empty()) r.failed_parts = {"maximal_irredundant"};
    r.computed = std::to_string(minimal_count) + " minimal dominating sets, " + std::to_string(bad.size()) + " violations";
    r.evidence = {{"minimal_dominating_sets", minimal_count}, {"violations", bad}};
}

void check_domain_domination_one(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (!c.annihilator_is_nil || !c.S.is_domain_module) {
        r.hypotheses = !c.annihilator_is_nil ? "Ann(M) is not nil" : "M is not a domain module";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "Ann(M) nil, M a domain module (Z(M) = {0})";
    auto gamma = exact_value(c.params().gamma, "gamma");
    bool lhs = c.ag.graph.order() > 0 && gamma == 1;
    bool rhs = c.simple_prime_split().has_value();
    if (lhs != rhs) r.failed_parts = {"equivalence"};
    r.expected = "gamma = 1 iff M = eM + (1-e)M with eM simple and (1-e)M prime";
    r.computed = "gamma = " + std::to_string(gamma) + ", split " + (rhs ? "exists" : "absent");
    r.evidence = {{"gamma", gamma}, {"vertices", c.ag.graph.order()}};
}

struct LocalData {
    std::size_t maximal;
    std::size_t ann;
    std::set<std::size_t> inside_ann;  // nonzero K ⊆ ann(N), as lattice indices
};

std::optional<LocalData> local_hypotheses(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return std::nullopt;
    if (!c.S.is_local) {
        r.hypotheses = std::to_string(c.S.maximal.size()) + " maximal submodules";
        return std::nullopt;
    }
    if (c.ag.graph.order() == 0) {
        r.hypotheses = "AG(M) has no vertices";
        return std::nullopt;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M local, AG(M) nonempty";
    LocalData d;
    d.maximal = c.S.maximal.front();
    d.ann = c.L.index_of(ann_of_submodule(c.L.at(d.maximal), c.M));
    for (std::size_t i = 0; i < c.L.size(); ++i)
        if (!c.L.at(i).is_zero() && c.contained(i, d.ann)) d.inside_ann.insert(i);
    return d;
}

void check_local_radius_center(Context& c, CheckResult& r) {
    auto d = local_hypotheses(c, r);
    if (!d) return;
    const auto& m = c.params().metric;
    auto center = c.lattice_set(m.center);
    if (!m.radius || *m.radius > 1) r.failed_parts.push_back("radius");
    if (center != d->inside_ann) r.failed_parts.push_back("center");
    r.expected = "radius in {0,1}, center = " + set_text(d->inside_ann, c);
    r.computed = "radius = " + opt_text(m.radius) + ", center = " + set_text(center, c);
    r.evidence = c.metric_evidence(m, c.ag);
    r.evidence["maximal"] = c.label(d->maximal);
    r.evidence["ann_of_maximal"] = c.label(d->ann);
}

void check_local_gamma_sets(Context& c, CheckResult& r) {
    auto d = local_hypotheses(c, r);
    if (!d) return;
    auto gamma = exact_value(c.params().gamma, "gamma");
    const auto& G = c.ag.graph;
    VertexSet singletons;
    for (std::size_t v = 0; v < G.order(); ++v)
        if (satisfies(G, {v}, DominationVariant::plain)) singletons.push_back(v);
    auto gamma_sets = c.lattice_set(singletons);
    if (gamma != 1) r.failed_parts.push_back("a_gamma");
    if (gamma_sets != d->inside_ann) r.failed_parts.push_back("b_gamma_sets");
    r.expected = "gamma = 1, gamma-sets {K} with K in " + set_text(d->inside_ann, c);
    r.computed = "gamma = " + std::to_string(gamma) + ", gamma-sets from " + set_text(gamma_sets, c);
    r.evidence = {{"gamma", gamma},
                  {"dominating_singletons", c.vertex_labels(c.ag, singletons)},
                  {"ann_of_maximal", c.label(d->ann)}};
}

bool direct_sum_hypotheses(Context& c, CheckResult& r, bool exclude_two_simple) {
    if (!require_standing(c, r)) return false;
    if (!c.direct_sum_local) {
        r.hypotheses = c.blocks.size() < 2 ? "fewer than two local summands" : "some summand is not local";
        return false;
    }
    if (exclude_two_simple && c.two_simple) {
        r.hypotheses = "M is a sum of two simple modules";
        return false;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M is a sum of " + std::to_string(c.blocks.size()) + " local modules" +
                   (exclude_two_simple ? ", not two simple ones" : "");
    return true;
}

ordered_json block_evidence(const Context& c) {
    ordered_json out = ordered_json::array();
    for (const auto& b : c.blocks)
        out.push_back({{"e", ring_elem_text(b.idempotent)},
                       {"summand", c.label(b.index)},
                       {"simple", b.simple},
                       {"socle_power", c.label(b.socle_power)}});
    return out;
}

void check_direct_sum_radius_center(Context& c, CheckResult& r) {
    if (!direct_sum_hypotheses(c, r, true)) return;
    const auto& m = c.params().metric;
    std::set<std::size_t> expected;
    for (std::size_t i = 0; i < c.L.size(); ++i)
        if (!c.L.at(i).is_zero() && c.contained(i, c.S.jacobson)) expected.insert(i);
    auto center = c.lattice_set(m.center);
    if (m.radius != std::optional<std::size_t>(2)) r.failed_parts.push_back("radius");
    if (center != expected) r.failed_parts.push_back("center");
    r.expected = "radius = 2, center = " + set_text(expected, c);
    r.computed = "radius = " + opt_text(m.radius) + ", center = " + set_text(center, c);
    r.evidence = c.metric_evidence(m, c.ag);
    r.evidence["jacobson"] = c.label(c.S.jacobson);
    r.evidence["center_inside_jacobson"] =
        std::includes(expected.begin(), expected.end(), center.begin(), center.end());
    r.evidence["summands"] = block_evidence(c);
}

void check_semisimple_radius_center(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (!c.semisimple_blocks) {
        r.hypotheses = c.blocks.size() < 2 ? "fewer than two summands" : "some summand is not simple";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M is a sum of " + std::to_string(c.blocks.size()) + " simple modules";
    const auto& m = c.params().metric;
    std::set<std::size_t> expected;
    for (const auto& b : c.blocks) expected.insert(b.index);
    auto center = c.lattice_set(m.center);
    if (!m.radius || *m.radius < 1 || *m.radius > 2) r.failed_parts.push_back("radius");
    if (center != expected) r.failed_parts.push_back("center");
    r.expected = "radius in {1,2}, center = " + set_text(expected, c);
    r.computed = "radius = " + opt_text(m.radius) + ", center = " + set_text(center, c);
    r.evidence = c.metric_evidence(m, c.ag);
}

void check_direct_sum_domination(Context& c, CheckResult& r) {
    if (!direct_sum_hypotheses(c, r, true)) return;
    const std::size_t n = c.blocks.size();
    auto gamma = exact_value(c.params().gamma, "gamma");
    if (gamma != n) r.failed_parts = {"gamma"};
    r.expected = "gamma = " + std::to_string(n);
    r.computed = "gamma = " + std::to_string(gamma);
    r.evidence = {{"gamma_witness", c.vertex_labels(c.ag, c.params().gamma->witness)}, {"summands", block_evidence(c)}};
}

void check_direct_sum_variants(Context& c, CheckResult& r) {
    if (!direct_sum_hypotheses(c, r, true)) return;
    const std::size_t n = c.blocks.size();
    const auto& p = c.params();
    if (!p.ir) throw CapExceeded("irredundance above the exact cap", p.n);
    auto ir = p.ir->value;
    auto gc = exact_or_undefined(p.gamma_c, "gamma_c");
    auto gt = exact_or_undefined(p.gamma_t, "gamma_t");
    auto gcl = exact_or_undefined(p.gamma_cl, "gamma_cl");
    auto gpr = exact_or_undefined(p.gamma_pr, "gamma_pr");
    const std::size_t pr_expected = n % 2 ? n + 1 : n;
    if (ir != n) r.failed_parts.push_back("ir");
    if (gc != n) r.failed_parts.push_back("gamma_c");
    if (gt != n) r.failed_parts.push_back("gamma_t");
    if (gcl != n) r.failed_parts.push_back("gamma_cl");
    if (gpr != pr_expected) r.failed_parts.push_back("gamma_pr");
    r.expected = "ir = gamma_c = gamma_t = gamma_cl = " + std::to_string(n) + ", gamma_pr = " + std::to_string(pr_expected);
    r.computed = "ir = " + std::to_string(ir) + ", gamma_c = " + opt_text(gc) + ", gamma_t = " + opt_text(gt) +
                 ", gamma_cl = " + opt_text(gcl) + ", gamma_pr = " + opt_text(gpr);
    r.evidence = {{"ir", ir}, {"gamma_c", opt_json(gc)}, {"gamma_t", opt_json(gt)}, {"gamma_cl", opt_json(gcl)},
                  {"gamma_pr", opt_json(gpr)}};
}

void check_domination_counts_maximal(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (c.ag.graph.order() == 0) {
        r.hypotheses = "AG(M) has no vertices";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M finite, AG(M) nonempty";
    auto gamma = exact_value(c.params().gamma, "gamma");
    const std::size_t maxes = c.S.maximal.size();
    if (!c.two_simple && maxes != gamma) r.failed_parts = {"maximal_count"};
    r.expected = "M a sum of two simple modules, or |Max(M)| = gamma";
    r.computed = "gamma = " + std::to_string(gamma) + ", |Max(M)| = " + std::to_string(maxes) +
                 (c.two_simple ? ", two simple summands" : "");
    r.evidence = {{"gamma", gamma}, {"maximal", c.labels(c.S.maximal)}, {"two_simple", c.two_simple}};
}

void check_total_dichotomy(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (c.ag.graph.order() == 0) {
        r.hypotheses = "AG(M) has no vertices";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "AG(M) nonempty";
    auto gamma = exact_value(c.params().gamma, "gamma");
    auto gt = exact_or_undefined(c.params().gamma_t, "gamma_t");
    if (!gt) r.failed_parts = {"gamma_t_undefined"};
    else if (*gt != gamma && *gt != gamma + 1) r.failed_parts = {"dichotomy"};
    r.expected = "gamma_t in {gamma, gamma + 1}";
    r.computed = "gamma = " + std::to_string(gamma) + ", gamma_t = " + opt_text(gt);
    r.evidence = {{"gamma", gamma}, {"gamma_t", opt_json(gt)}, {"labels", c.ag.labels}, {"edges", c.ag.graph.edges()}};
}

void check_total_maximal_vertices(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    std::vector<std::size_t> maximal;
    for (auto i : c.ag.vertices) {
        bool below_other = std::any_of(c.ag.vertices.begin(), c.ag.vertices.end(),
                                       [&](std::size_t j) { return j != i && c.contained(i, j); });
        if (!below_other) maximal.push_back(i);
    }
    if (maximal.size() <= 1) {
        r.hypotheses = std::to_string(maximal.size()) + " maximal vertices";
        return;
    }
    // The argument needs each maximal vertex to be ann(Rm) for some m.
    ordered_json generators = ordered_json::array();
    for (auto K : maximal) {
        std::optional<Code> found;
        for (Code m = 1; m < static_cast<Code>(c.M.cardinality()) && !found; ++m)
            if (ann_of_submodule(cyclic_submodule(c.M, m), c.M) == c.L.at(K)) found = m;
        if (!found) {
            r.hypotheses = c.label(K) + " is not ann(Rm) for any m";
            return;
        }
        generators.push_back({{"K", c.label(K)}, {"m", c.M.element_text(*found)}});
    }
    r.hypotheses_met = true;
    r.hypotheses = std::to_string(maximal.size()) + " maximal vertices, each of the form ann(Rm)";
    auto gt = exact_or_undefined(c.params().gamma_t, "gamma_t");
    if (gt != maximal.size()) r.failed_parts = {"gamma_t"};
    r.expected = "gamma_t = " + std::to_string(maximal.size());
    r.computed = "gamma_t = " + opt_text(gt);
    r.evidence = {{"maximal_vertices", c.labels(maximal)}, {"generators", generators}};
}

void check_reduced_total(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (!c.ring.is_reduced || !c.faithful) {
        r.hypotheses = !c.ring.is_reduced ? "R is not reduced" : "M is not faithful";
        return;
    }
    auto gamma = exact_value(c.params().gamma, "gamma");
    if (c.ag.graph.order() == 0 || gamma <= 1) {
        r.hypotheses = "gamma <= 1";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "R reduced, M faithful, gamma > 1";
    auto gt = exact_or_undefined(c.params().gamma_t, "gamma_t");
    const std::size_t k = c.min_primes.size();
    if (gamma != k) r.failed_parts.push_back("gamma");
    if (gt != k) r.failed_parts.push_back("gamma_t");
    r.expected = "gamma = gamma_t = |Min(R)| = " + std::to_string(k);
    r.computed = "gamma = " + std::to_string(gamma) + ", gamma_t = " + opt_text(gt);
    ordered_json primes = ordered_json::array();
    for (const auto& p : c.min_primes) primes.push_back(p.text());
    r.evidence = {{"min_primes", primes}, {"gamma_witness", c.vertex_labels(c.ag, c.params().gamma->witness)}};
}

void check_reduced_two_primes(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (!c.ring.is_reduced || !c.faithful) {
        r.hypotheses = !c.ring.is_reduced ? "R is not reduced" : "M is not faithful";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "R reduced, M faithful";
    auto gamma = exact_value(c.params().gamma, "gamma");
    bool a = gamma == 2;
    const auto& col = c.params().coloring;
    bool b = col.is_bipartite && c.ag.graph.edge_count() > 0;
    bool cc = col.is_complete_bipartite;
    bool d = c.min_primes.size() == 2;
    if (a != b) r.failed_parts.push_back("a_vs_b");
    if (a != cc) r.failed_parts.push_back("a_vs_c");
    if (a != d) r.failed_parts.push_back("a_vs_d");
    auto yn = [](bool x) { return x ? "T" : "F"; };
    r.expected = "(a) gamma = 2, (b) bipartite, (c) complete bipartite, (d) |Min(R)| = 2 all agree";
    r.computed = std::string("a=") + yn(a) + " b=" + yn(b) + " c=" + yn(cc) + " d=" + yn(d);
    r.evidence = {{"gamma", gamma}, {"min_primes", c.min_primes.size()}, {"labels", c.ag.labels},
                  {"edges", c.ag.graph.edges()}};
}

void check_bipartite_bound(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    if (!c.faithful) {
        r.hypotheses = "M is not faithful";
        return;
    }
    if (!c.params().coloring.is_bipartite) {
        r.hypotheses = "AG(M) is not bipartite";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M faithful, AG(M) bipartite";
    auto gamma = exact_value(c.params().gamma, "gamma");
    if (gamma > 2) r.failed_parts = {"gamma"};
    r.expected = "gamma <= 2";
    r.computed = "gamma = " + std::to_string(gamma);
    r.evidence = {{"gamma", gamma}};
}

void check_direct_sum_total(Context& c, CheckResult& r) {
    if (!direct_sum_hypotheses(c, r, true)) return;
    auto gamma = exact_value(c.params().gamma, "gamma");
    auto gt = exact_or_undefined(c.params().gamma_t, "gamma_t");
    const std::size_t k = c.min_primes.size();
    if (gamma != k) r.failed_parts.push_back("gamma");
    if (gt != k) r.failed_parts.push_back("gamma_t");
    r.expected = "gamma = gamma_t = |Min(R)| = " + std::to_string(k);
    r.computed = "gamma = " + std::to_string(gamma) + ", gamma_t = " + opt_text(gt);
    r.evidence = {{"summands", block_evidence(c)}, {"maximal", c.labels(c.S.maximal)}};
}

void check_associated_bound(Context& c, CheckResult& r) {
    if (!require_standing(c, r)) return;
    r.hypotheses_met = true;
    r.hypotheses = "R Noetherian, M finitely generated";
    auto gamma = exact_value(c.params().gamma, "gamma");
    const std::size_t ass = c.S.associated_primes.size();
    if (gamma > ass) r.failed_parts = {"bound"};
    r.expected = "gamma <= |Ass(M)| = " + std::to_string(ass);
    r.computed = "gamma = " + std::to_string(gamma);
    ordered_json primes = ordered_json::array();
    for (const auto& p : c.S.associated_primes) primes.push_back(p.text());
    r.evidence = {{"gamma", gamma}, {"associated_primes", primes}};
}

struct FactorFacts {
    std::string ring, module;
    bool prime = false, simple = false;
    std::size_t gamma = 0;
};

FactorFacts factor_facts(const ModuleSpec& F, const SuiteConfig& config) {
    auto L = enumerate_submodules(F, config.caps);
    auto S = structure_report(L);
    auto G = build_ag(L, GraphVariant::ag);
    FactorFacts f;
    f.ring = F.ring().text();
    f.module = F.text();
    f.prime = S.is_prime_module;
    f.simple = S.is_simple;
    f.gamma = exact_value(domination(G.graph, DominationVariant::plain, config.exact_cap), "gamma");
    return f;
}

void check_product_domination(Context& c, CheckResult& r, const SuiteConfig& config) {
    if (!require_standing(c, r)) return;
    if (!c.inst.split_slots) {
        r.hypotheses = "no two-factor split recorded";
        return;
    }
    const std::size_t s = *c.inst.split_slots;
    ModuleSpec M1 = c.M.restrict_slots(0, s);
    ModuleSpec M2 = c.M.restrict_slots(s, c.M.ring().slots() - s);
    if (M1.cardinality() == 1 || M2.cardinality() == 1) {
        r.hypotheses = "a factor is zero";
        return;
    }
    auto f1 = factor_facts(M1, config), f2 = factor_facts(M2, config);
    std::string part;
    std::size_t expected = 0;
    if ((f1.simple && f2.prime) || (f2.simple && f1.prime)) {
        part = "a";
        expected = 1;
    } else if (f1.prime && f2.prime) {
        part = "b";
        expected = 2;
    } else if (f1.prime != f2.prime) {
        part = "c";
        expected = (f1.prime ? f2.gamma : f1.gamma) + 1;
    } else {
        part = "d";
        expected = f1.gamma + f2.gamma;
    }
    r.hypotheses_met = true;
    r.hypotheses = "M = M1 x M2, case (" + part + ")";
    auto gamma = exact_value(c.params().gamma, "gamma");
    if (gamma != expected) r.failed_parts = {part};
    r.expected = "gamma = " + std::to_string(expected);
    r.computed = "gamma = " + std::to_string(gamma);
    auto facts = [](const FactorFacts& f) {
        return ordered_json{{"ring", f.ring}, {"module", f.module}, {"prime", f.prime}, {"simple", f.simple},
                            {"gamma", f.gamma}};
    };
    r.evidence = {{"case", part}, {"first", facts(f1)}, {"second", facts(f2)}};
}

void check_star_connected(Context& c, CheckResult& r) {
    const auto& G = c.ag_star.graph;
    if (G.order() == 0) {
        r.hypotheses = "AG(M)* has no vertices";
        return;
    }
    r.hypotheses_met = true;
    r.hypotheses = "AG(M)* nonempty";
    bool connected = metric_report(G).is_connected;
    if (!connected) r.failed_parts = {"connected"};
    r.expected = "AG(M)* connected";
    r.computed = connected ? "connected" : "disconnected";
    r.evidence = {{"labels", c.ag_star.labels}, {"edges", G.edges()}};
}

const std::map<std::string, std::function<void(Context&, CheckResult&, const SuiteConfig&)>>& checkers() {
    static const std::map<std::string, std::function<void(Context&, CheckResult&, const SuiteConfig&)>> table = [] {
        std::map<std::string, std::function<void(Context&, CheckResult&, const SuiteConfig&)>> t;
        auto plain = [&t](const std::string& id, Checker f) {
            t[id] = [f](Context& c, CheckResult& r, const SuiteConfig&) { f(c, r); };
        };
        plain("C-1.1", check_idempotent_decomposition);
        plain("C-1.2", check_orthogonal_idempotents);
        plain("C-1.4", check_minimal_dichotomy);
        plain("C-1.5", check_proper_are_vertices);
        plain("C-1.6", check_universal_vertex);
        plain("C-1.7", check_faithful_bipartite);
        plain("C-1.8", check_reduced_bipartite);
        plain("C-1.9", check_minimal_dominating_irredundant);
        plain("C-2.1", check_domain_domination_one);
        plain("C-2.2", check_local_radius_center);
        plain("C-2.3", check_local_gamma_sets);
        plain("C-2.4", check_direct_sum_radius_center);
        plain("C-2.5", check_semisimple_radius_center);
        plain("C-2.6", check_direct_sum_domination);
        plain("C-2.7", check_direct_sum_variants);
        plain("C-2.8", check_domination_counts_maximal);
        plain("C-3.1", check_total_dichotomy);
        plain("C-3.2", check_total_maximal_vertices);
        plain("C-3.3", check_reduced_total);
        plain("C-3.4", check_reduced_two_primes);
        plain("C-3.5", check_bipartite_bound);
        plain("C-3.6", check_direct_sum_total);
        plain("C-3.7", check_associated_bound);
        t["C-3.8"] = check_product_domination;
        plain("C-conn", check_star_connected);
        return t;
    }();
    return table;
}

bool allowlisted(const CheckResult& r, const std::vector<AllowEntry>& allow) {
    return std::any_of(allow.begin(), allow.end(), [&](const AllowEntry& e) {
        if (e.claim != r.claim_id || e.instance != r.instance) return false;
        return std::all_of(r.failed_parts.begin(), r.failed_parts.end(), [&](const std::string& p) {
            return std::find(e.parts.begin(), e.parts.end(), p) != e.parts.end();
        });
    });
}

ordered_json instance_facts(const Context& c) {
    ordered_json primes = ordered_json::array();
    for (const auto& p : c.min_primes) primes.push_back(p.text());
    return {{"instance", c.inst.id()},
            {"family", family_name(c.inst.family)},
            {"module_size", c.M.cardinality()},
            {"submodules", c.L.size()},
            {"ag_vertices", c.ag.graph.order()},
            {"ag_edges", c.ag.graph.edge_count()},
            {"local", c.S.is_local},
            {"summands", c.blocks.size()},
            {"simple_summands", std::count_if(c.blocks.begin(), c.blocks.end(), [](const Block& b) { return b.simple; })},
            {"two_simple", c.two_simple},
            {"reduced", c.ring.is_reduced},
            {"faithful", c.faithful},
            {"min_primes", primes},
            {"m_is_vertex", c.S.m_is_vertex}};
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() { return kClaims; }

const std::vector<std::pair<std::string, std::string>>& out_of_scope_claims() { return kOutOfScope; }

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::not_applicable: return "NOT_APPLICABLE";
        case Verdict::discrepancy: return "DISCREPANCY";
    }
    return "?";
}

std::vector<CheckResult> check_instance(const Instance& inst, const std::vector<std::string>& claims,
                                        const SuiteConfig& config, std::vector<SkippedCheck>& skipped,
                                        ordered_json* facts) {
    std::vector<CheckResult> out;
    std::optional<Context> ctx;
    try {
        ctx.emplace(inst, config);
    } catch (const CapExceeded& e) {
        skipped.push_back({"", inst.id(), e.what()});
        return out;
    }
    if (facts) *facts = instance_facts(*ctx);

    for (const auto& info : kClaims) {
        if (!claims.empty() && std::find(claims.begin(), claims.end(), info.id) == claims.end()) continue;
        CheckResult r;
        r.claim_id = info.id;
        r.instance = inst.id();
        r.family = inst.family;
        try {
            checkers().at(info.id)(*ctx, r, config);
        } catch (const CapExceeded& e) {
            skipped.push_back({info.id, inst.id(), e.what()});
            continue;
        } catch (const std::exception& e) {
            // An internal inconsistency is never a finding about the claim.
            r.hypotheses_met = true;
            r.failed_parts = {"internal_error"};
            r.evidence = {{"error", e.what()}};
            r.verdict = Verdict::fail;
            out.push_back(std::move(r));
            continue;
        }
        if (!r.hypotheses_met) r.verdict = Verdict::not_applicable;
        else if (r.failed_parts.empty()) r.verdict = Verdict::pass;
        else if (info.strict) r.verdict = Verdict::fail;
        else {
            r.verdict = Verdict::discrepancy;
            r.known = allowlisted(r, config.allowlist);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace annigraph
