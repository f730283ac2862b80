#include <set>

#include "annigraph/errors.hpp"
#include "annigraph/ring.hpp"
#include "doctest.h"

using namespace annigraph;

namespace {

std::vector<RingElem> elements(const RingSpec& R) {
    std::vector<RingElem> out;
    for_each_ring_element(R, [&](const RingElem& r) { out.push_back(r); });
    return out;
}

std::set<RingElem> ideal_set(const Ideal& I, const RingSpec& R) {
    std::set<RingElem> out;
    for (const auto& r : elements(R))
        if (I.contains(r)) out.insert(r);
    return out;
}

// Additive closure of a seed set; in these rings that is already the ideal it generates
// once the seed is closed under multiplication by R.
std::set<RingElem> additive_closure(const RingSpec& R, std::set<RingElem> seed) {
    seed.insert(ring_zero(R));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RingElem> v(seed.begin(), seed.end());
        for (const auto& a : v)
            for (const auto& b : v)
                if (seed.insert(ring_add(R, a, b)).second) grew = true;
    }
    return seed;
}

std::vector<Ideal> all_ideals(const RingSpec& R) {
    std::vector<Ideal> out{Ideal::unit(R)};
    std::vector<std::vector<Int>> tuples{{}};
    for (Int n : R.moduli()) {
        std::vector<std::vector<Int>> next;
        for (const auto& t : tuples)
            for (Int d : nt::divisors(n)) {
                auto u = t;
                u.push_back(d);
                next.push_back(u);
            }
        tuples = next;
    }
    out.clear();
    for (const auto& t : tuples) out.emplace_back(R, t);
    return out;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("parse and text round trip") {
    CHECK(RingSpec::parse("12").text() == "12");
    CHECK(RingSpec::parse("4,3").moduli() == std::vector<Int>{4, 3});
    CHECK(RingSpec::parse("4,3").cardinality() == 12);
    auto R = RingSpec::parse("4,3");
    CHECK(Ideal::parse(R, "(2,3)").text() == "(2,3)");
}

TEST_CASE("malformed text reports a position") {
    CHECK_THROWS_AS(RingSpec::parse("12,x"), ParseError);
    try {
        RingSpec::parse("12,x");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(RingSpec::parse(""), ParseError);
    CHECK_THROWS_AS(Ideal::parse(RingSpec::parse("12"), "(5)"), Error);
}

TEST_CASE("ideal_combine examples") {
    auto Z30 = RingSpec::parse("30");
    CHECK(ideal_combine(Ideal(Z30, {6}), Ideal(Z30, {10}), IdealOp::product).is_zero());
    auto Z12 = RingSpec::parse("12");
    CHECK(ideal_combine(Ideal(Z12, {4}), Ideal(Z12, {3}), IdealOp::sum).is_unit());
    auto R = RingSpec::parse("4,3");
    auto p = ideal_combine(Ideal(R, {2, 3}), Ideal(R, {2, 1}), IdealOp::product);
    CHECK(p.is_zero());
    CHECK(p.text() == "(4,3)");
    CHECK_THROWS_WITH_AS(ideal_combine(Ideal(Z12, {2}), Ideal(Z30, {2}), IdealOp::sum), "ring mismatch", Error);
}

TEST_CASE("ideal operations agree with element-wise brute force") {
    for (const char* text : {"12", "30", "4,3", "8,2", "9,6", "36"}) {
        auto R = RingSpec::parse(text);
        auto ideals = all_ideals(R);
        auto ring = elements(R);
        for (const auto& a : ideals)
            for (const auto& b : ideals) {
                auto A = ideal_set(a, R), B = ideal_set(b, R);
                std::set<RingElem> sums, prods, meet;
                for (const auto& x : A)
                    for (const auto& y : B) {
                        sums.insert(ring_add(R, x, y));
                        prods.insert(ring_mul(R, x, y));
                    }
                for (const auto& x : A)
                    if (B.count(x)) meet.insert(x);
                CHECK(ideal_set(ideal_combine(a, b, IdealOp::sum), R) == sums);
                CHECK(ideal_set(ideal_combine(a, b, IdealOp::product), R) == additive_closure(R, prods));
                CHECK(ideal_set(ideal_combine(a, b, IdealOp::intersection), R) == meet);
                for (auto op : {IdealOp::sum, IdealOp::product, IdealOp::intersection})
                    CHECK(ideal_combine(a, b, op) == ideal_combine(b, a, op));
            }
    }
}

TEST_CASE("minimal primes") {
    auto texts = [](const RingSpec& R) {
        std::set<std::string> out;
        for (const auto& p : minimal_primes(R)) out.insert(p.text());
        return out;
    };
    CHECK(texts(RingSpec::parse("30")) == std::set<std::string>{"(2)", "(3)", "(5)"});
    CHECK(texts(RingSpec::parse("9")) == std::set<std::string>{"(3)"});
    CHECK(texts(RingSpec::parse("2,2")) == std::set<std::string>{"(2,1)", "(1,2)"});
}

TEST_CASE("minimal primes are prime by definition and primality matches brute force") {
    for (const char* text : {"30", "9", "2,2", "12", "4,3", "8,9", "6,10"}) {
        auto R = RingSpec::parse(text);
        auto ring = elements(R);
        auto prime_by_definition = [&](const Ideal& P) {
            if (P.is_unit()) return false;
            for (const auto& a : ring)
                for (const auto& b : ring)
                    if (P.contains(ring_mul(R, a, b)) && !P.contains(a) && !P.contains(b)) return false;
            return true;
        };
        for (const auto& P : minimal_primes(R)) CHECK(prime_by_definition(P));
        for (const auto& I : all_ideals(R)) CHECK(is_prime_ideal(I) == prime_by_definition(I));
    }
}

TEST_CASE("ring_summary examples") {
    auto z6 = ring_summary(RingSpec::parse("6"));
    CHECK(z6.is_reduced);
    CHECK(z6.idempotents == std::vector<Int>{0, 1, 3, 4});
    auto z4 = ring_summary(RingSpec::parse("4"));
    CHECK_FALSE(z4.is_reduced);
    CHECK(z4.nilradical.text() == "(2)");
    auto z12 = ring_summary(RingSpec::parse("12"));
    CHECK(z12.zero_divisors == std::vector<Int>{0, 2, 3, 4, 6, 8, 9, 10});
}

TEST_CASE("idempotents pair up and reducedness is consistent") {
    for (const char* text : {"6", "4", "12", "30", "4,3", "2,2", "9,10", "36", "8"}) {
        auto R = RingSpec::parse(text);
        auto s = ring_summary(R);
        std::set<Int> idem(s.idempotents.begin(), s.idempotents.end());
        CHECK(idem.count(ring_encode(R, ring_zero(R))));
        CHECK(idem.count(ring_encode(R, ring_one(R))));
        for (Int e : s.idempotents) {
            auto r = ring_decode(R, e);
            CHECK(ring_mul(R, r, r) == r);
            CHECK(idem.count(ring_encode(R, ring_sub(R, ring_one(R), r))));
        }
        bool square_zero = false;
        for (const auto& r : elements(R)) square_zero = square_zero || (!ring_is_zero(r) && ring_is_zero(ring_mul(R, r, r)));
        CHECK(s.is_reduced == s.nilradical.is_zero());
        CHECK(s.is_reduced == !square_zero);
        for (const auto& r : elements(R)) {
            bool nilpotent = false;
            RingElem p = r;
            for (int k = 0; k < 8 && !nilpotent; ++k, p = ring_mul(R, p, r)) nilpotent = ring_is_zero(p);
            CHECK(s.nilradical.contains(r) == nilpotent);
            CHECK(is_nil_ideal(Ideal::generated_by(R, r)) == nilpotent);
        }
    }
}

TEST_CASE("primitive idempotents") {
    auto R = RingSpec::parse("30");
    CHECK(primitive_idempotents(R).size() == 3);
    CHECK(primitive_idempotents(RingSpec::parse("8")).size() == 1);
    CHECK(primitive_idempotents(RingSpec::parse("4,6")).size() == 3);
}

TEST_CASE("encoding is a bijection") {
    auto R = RingSpec::parse("4,3,5");
    std::set<Int> codes;
    for (const auto& r : elements(R)) {
        Int c = ring_encode(R, r);
        CHECK(ring_decode(R, c) == r);
        codes.insert(c);
    }
    CHECK(codes.size() == 60);
    CHECK(*codes.rbegin() == 59);
}

}
