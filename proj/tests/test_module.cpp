#include <set>

#include "annigraph/errors.hpp"
#include "annigraph/module.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace annigraph;

namespace {

SubmoduleLattice lattice(const char* ring, const char* module) {
    return enumerate_submodules(ModuleSpec::parse(RingSpec::parse(ring), module));
}

const Submodule& by_label(const SubmoduleLattice& L, const std::string& label) {
    for (const auto& N : L.submodules())
        if (submodule_label(N, L.module()) == label) return N;
    FAIL("no submodule labelled " << label);
    throw;
}

std::set<std::string> labels(const SubmoduleLattice& L, const std::vector<std::size_t>& idx) {
    std::set<std::string> out;
    for (auto i : idx) out.insert(submodule_label(L.at(i), L.module()));
    return out;
}

std::vector<RingElem> ring_elements(const RingSpec& R) { return oracle::ring_elements(R); }

const char* const kCorpus[][2] = {{"12", "12"}, {"2", "2;2"}, {"6", "2;2;3"}, {"12", "4;3"}, {"8", "8"},
                                  {"30", "30"}, {"4", "4;2"}, {"2,6", "2,6"}, {"36", "4;9"}, {"9", "9;3"},
                                  {"4,3", "4,3;2,1"}, {"6", "6;6"}};

}  // namespace

TEST_SUITE("module") {

TEST_CASE("parse, text and element coding") {
    auto M = ModuleSpec::parse(RingSpec::parse("12"), "4;3");
    CHECK(M.text() == "4;3");
    CHECK(M.cardinality() == 12);
    CHECK(M.coordinates().size() == 2);
    std::set<Code> seen;
    for (Code m = 0; m < 12; ++m) {
        auto d = M.decode(m);
        CHECK(M.encode(d) == m);
        seen.insert(m);
        CHECK(M.add(m, M.negate(m)) == 0);
    }
    CHECK_THROWS_AS(ModuleSpec::parse(RingSpec::parse("12"), "5"), Error);
    CHECK_THROWS_AS(ModuleSpec::parse(RingSpec::parse("12"), "4;;3"), ParseError);
}

TEST_CASE("enumerate_submodules examples") {
    auto L = lattice("12", "12");
    CHECK(L.size() == 6);
    CHECK(labels(L, {0, 1, 2, 3, 4, 5}) == std::set<std::string>{"(12)", "(6)", "(4)", "(3)", "(2)", "(1)"});
    CHECK(L.at(0).is_zero());
    CHECK_FALSE(L.at(L.full_index()).is_proper());
    CHECK(lattice("2", "2;2").size() == 5);
    CHECK(lattice("7", "7").size() == 2);
}

TEST_CASE("enumeration caps raise CapExceeded") {
    auto M = ModuleSpec::parse(RingSpec::parse("2"), "2;2;2;2");
    CHECK_THROWS_AS(enumerate_submodules(M, {4096, 10}), CapExceeded);
    CHECK_THROWS_AS(enumerate_submodules(M, {8, 20000}), CapExceeded);
}

TEST_CASE("lattice is sound and complete against a brute-force closure") {
    for (const auto& [ring, module] : kCorpus) {
        CAPTURE(ring);
        CAPTURE(module);
        auto L = lattice(ring, module);
        const auto& M = L.module();
        auto ring_elems = ring_elements(M.ring());
        std::set<std::vector<Code>> listed;
        for (const auto& N : L.submodules()) {
            listed.insert(N.elements());
            for (Code a : N.elements()) {
                for (Code b : N.elements()) CHECK(N.contains(M.add(a, b)));
                for (const auto& r : ring_elems) CHECK(N.contains(M.scale(r, a)));
            }
        }
        CHECK(listed.size() == L.size());
        CHECK(listed == oracle::all_submodules(M));
        for (std::size_t i = 1; i < L.size(); ++i) CHECK(L.at(i - 1) < L.at(i));
    }
}

TEST_CASE("colon_into_module examples and brute force") {
    auto L = lattice("12", "12");
    const auto& M = L.module();
    CHECK(colon_into_module(by_label(L, "(2)"), M).text() == "(2)");
    CHECK(colon_into_module(L.at(L.full_index()), M).is_unit());
    auto L2 = lattice("12", "4;3");
    const Submodule* z3 = nullptr;
    for (const auto& N : L2.submodules())
        if (N.size() == 3) z3 = &N;
    REQUIRE(z3);
    CHECK(colon_into_module(*z3, L2.module()).text() == "(4)");
    for (const auto& [ring, module] : kCorpus) {
        auto Lc = lattice(ring, module);
        for (const auto& N : Lc.submodules()) {
            std::set<RingElem> expect;
            for (const auto& r : oracle::colon(Lc.module(), N.elements())) expect.insert(r);
            for (const auto& r : ring_elements(Lc.module().ring())) CHECK(N.colon().contains(r) == expect.count(r) > 0);
        }
    }
}

TEST_CASE("submodule_product examples") {
    auto L = lattice("12", "12");
    const auto& M = L.module();
    CHECK(submodule_product(by_label(L, "(2)"), by_label(L, "(6)"), M).is_zero());
    const auto& full = L.at(L.full_index());
    CHECK(submodule_product(full, full, M) == full);
    auto L30 = lattice("30", "30");
    CHECK(submodule_product(by_label(L30, "(6)"), by_label(L30, "(10)"), L30.module()).is_zero());
}

TEST_CASE("product properties: brute force, commutativity, monotonicity, containment") {
    for (const auto& [ring, module] : kCorpus) {
        CAPTURE(ring);
        CAPTURE(module);
        auto L = lattice(ring, module);
        const auto& M = L.module();
        for (const auto& N : L.submodules())
            for (const auto& K : L.submodules()) {
                auto NK = submodule_product(N, K, M);
                CHECK(NK == submodule_product(K, N, M));
                CHECK(NK.elements() == oracle::product(M, N.elements(), K.elements()));
                CHECK(ideal_times_module(M, N.colon()).contains(NK));
                CHECK(ideal_product_kills(N.colon(), K.colon(), M) == NK.is_zero());
                for (const auto& N2 : L.submodules())
                    if (N2.contains(N)) CHECK(submodule_product(N2, K, M).contains(NK));
            }
    }
}

TEST_CASE("ann_of_submodule examples and annihilation") {
    auto L8 = lattice("8", "8");
    CHECK(submodule_label(ann_of_submodule(by_label(L8, "(2)"), L8.module()), L8.module()) == "(4)");
    auto L12 = lattice("12", "12");
    auto a = ann_of_submodule(by_label(L12, "(2)"), L12.module());
    CHECK(a.elements() == std::vector<Code>{0, 6});
    for (const auto& [ring, module] : kCorpus) {
        auto L = lattice(ring, module);
        const auto& M = L.module();
        for (const auto& N : L.submodules()) {
            auto A = ann_of_submodule(N, M);
            for (const auto& r : ring_elements(M.ring()))
                if (N.colon().contains(r))
                    for (Code m : A.elements()) CHECK(M.scale(r, m) == 0);
            // maximality: nothing outside A is killed by all of (N:M)
            for (Code m = 0; m < static_cast<Code>(M.cardinality()); ++m) {
                bool killed = true;
                for (const auto& r : ring_elements(M.ring()))
                    if (N.colon().contains(r) && M.scale(r, m) != 0) killed = false;
                CHECK(killed == A.contains(m));
            }
        }
    }
}

TEST_CASE("prime submodules") {
    auto L = lattice("12", "12");
    const auto& M = L.module();
    CHECK(is_prime_submodule(by_label(L, "(2)"), M));
    CHECK_FALSE(is_prime_submodule(by_label(L, "(4)"), M));
    CHECK_THROWS_WITH_AS(is_prime_submodule(L.at(L.full_index()), M), "prime submodules are proper", Error);
    auto Lp = lattice("7", "7");
    CHECK(is_prime_submodule(Lp.at(0), Lp.module()));

    for (const auto& [ring, module] : kCorpus) {
        auto Lc = lattice(ring, module);
        const auto& Mc = Lc.module();
        auto ring_elems = ring_elements(Mc.ring());
        for (const auto& P : Lc.submodules()) {
            if (!P.is_proper()) continue;
            bool prime = true;
            for (const auto& r : ring_elems)
                for (Code e = 0; e < static_cast<Code>(Mc.cardinality()) && prime; ++e)
                    if (P.contains(Mc.scale(r, e)) && !P.colon().contains(r) && !P.contains(e)) prime = false;
            CHECK(is_prime_submodule(P, Mc) == prime);
        }
    }
}

TEST_CASE("structure_report examples") {
    auto L = lattice("12", "12");
    auto S = structure_report(L);
    CHECK(labels(L, S.maximal) == std::set<std::string>{"(2)", "(3)"});
    CHECK(submodule_label(L.at(S.jacobson), L.module()) == "(6)");
    std::set<std::string> ass;
    for (const auto& p : S.associated_primes) ass.insert(p.text());
    CHECK(ass == std::set<std::string>{"(2)", "(3)"});
    CHECK_FALSE(S.m_is_vertex);

    auto L9 = lattice("9", "9");
    auto S9 = structure_report(L9);
    CHECK(S9.is_local);
    CHECK(submodule_label(L9.at(S9.jacobson), L9.module()) == "(3)");

    auto Lv = lattice("6", "2;2;3");
    CHECK(structure_report(Lv).m_is_vertex);

    auto Lp = lattice("5", "5");
    auto Sp = structure_report(Lp);
    CHECK(Sp.is_simple);
    CHECK(Sp.is_prime_module);
    CHECK(Sp.is_domain_module);
    CHECK_FALSE(structure_report(L).is_domain_module);
}

TEST_CASE("idempotent_decompose examples") {
    auto L = lattice("6", "6");
    const auto& R = L.module().ring();
    auto d = idempotent_decompose(L, RingElem{{3}});
    CHECK(d.first.elements() == std::vector<Code>{0, 3});
    CHECK(d.second.elements() == std::vector<Code>{0, 2, 4});
    CHECK(d.is_direct);
    CHECK(d.every_submodule_splits);
    auto one = idempotent_decompose(L, ring_one(R));
    CHECK(one.first == L.at(L.full_index()));
    CHECK(one.second.is_zero());
    auto zero = idempotent_decompose(L, ring_zero(R));
    CHECK(zero.first.is_zero());
    CHECK(zero.second == L.at(L.full_index()));
    CHECK_THROWS_AS(idempotent_decompose(L, RingElem{{2}}), Error);
}

TEST_CASE("products split along idempotents") {
    for (const auto& [ring, module] : kCorpus) {
        CAPTURE(ring);
        CAPTURE(module);
        auto L = lattice(ring, module);
        const auto& M = L.module();
        const auto& R = M.ring();
        for (Int code : ring_summary(R).idempotents) {
            auto e = ring_decode(R, code);
            auto f = ring_sub(R, ring_one(R), e);
            auto split = idempotent_decompose(L, e);
            CHECK(split.is_direct);
            CHECK(split.every_submodule_splits);
            // Products inside each summand, computed with colons relative to that summand.
            auto local_product = [&](const Submodule& A, const Submodule& B, const Submodule& whole) {
                auto I = ideal_combine(relative_colon(M, A, whole), relative_colon(M, B, whole), IdealOp::product);
                return ideal_times(M, I, whole);
            };
            for (const auto& N : L.submodules())
                for (const auto& K : L.submodules()) {
                    auto N1 = scalar_image(M, e, N), K1 = scalar_image(M, e, K);
                    auto N2 = scalar_image(M, f, N), K2 = scalar_image(M, f, K);
                    auto expect = submodule_sum(M, local_product(N1, K1, split.first), local_product(N2, K2, split.second));
                    CHECK(submodule_product(N, K, M) == expect);
                }
        }
    }
}

TEST_CASE("restrict_slots yields the factor modules") {
    auto M = ModuleSpec::parse(RingSpec::parse("2,6"), "2,6");
    CHECK(M.restrict_slots(0, 1).text() == "2");
    CHECK(M.restrict_slots(1, 1).text() == "6");
    CHECK(M.restrict_slots(0, 1).cardinality() * M.restrict_slots(1, 1).cardinality() == M.cardinality());
}

}
