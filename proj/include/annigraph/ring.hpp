#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace annigraph {

using Int = std::int64_t;

// Small number-theory helpers. All arguments are positive and small (moduli of desk-scale rings).
namespace nt {
std::vector<Int> prime_factors(Int n);  // distinct, ascending
std::vector<Int> divisors(Int n);       // ascending
Int radical(Int n);
bool is_prime(Int n);
bool is_squarefree(Int n);
int prime_length(Int n);  // number of prime factors counted with multiplicity
Int lcm(Int a, Int b);
}  // namespace nt

/// R = Z_{n_1} x ... x Z_{n_k}.
class RingSpec {
public:
    explicit RingSpec(std::vector<Int> moduli);

    static RingSpec parse(std::string_view text);
    std::string text() const;

    const std::vector<Int>& moduli() const noexcept { return moduli_; }
    std::size_t slots() const noexcept { return moduli_.size(); }
    Int modulus(std::size_t slot) const { return moduli_.at(slot); }
    Int cardinality() const noexcept { return cardinality_; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    std::vector<Int> moduli_;
    Int cardinality_ = 1;
};

struct RingElem {
    std::vector<Int> residues;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

RingElem ring_zero(const RingSpec& R);
RingElem ring_one(const RingSpec& R);
RingElem ring_add(const RingSpec& R, const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingSpec& R, const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingSpec& R, const RingElem& a, const RingElem& b);
bool ring_is_zero(const RingElem& a);

/// Mixed-radix code of an element (slot 0 least significant); a bijection onto 0..|R|-1.
Int ring_encode(const RingSpec& R, const RingElem& a);
RingElem ring_decode(const RingSpec& R, Int code);
std::string ring_elem_text(const RingElem& a);

/// Visits every element of R in code order.
void for_each_ring_element(const RingSpec& R, const std::function<void(const RingElem&)>& visit);

/// Visits one representative per class of R / (a_1) x ... x (a_k), i.e. residues r_i < a_i.
/// `divisors` must divide the moduli slot-wise.
void for_each_residue_class(const std::vector<Int>& divisors,
                            const std::function<void(const RingElem&)>& visit);

/// Ideal (d_1) x ... x (d_k) with d_i | n_i. d_i == n_i is the zero component, d_i == 1 the full one.
class Ideal {
public:
    Ideal(const RingSpec& R, std::vector<Int> divisors);

    static Ideal zero(const RingSpec& R);
    static Ideal unit(const RingSpec& R);
    static Ideal generated_by(const RingSpec& R, const RingElem& g);
    static Ideal parse(const RingSpec& R, std::string_view text);

    const std::vector<Int>& divisors() const noexcept { return divisors_; }
    const std::vector<Int>& moduli() const noexcept { return moduli_; }
    Int divisor(std::size_t slot) const { return divisors_.at(slot); }

    bool is_zero() const;
    bool is_unit() const;
    bool contains(const RingElem& r) const;
    /// Slot-wise divisibility: this ⊆ other.
    bool subset_of(const Ideal& other) const;
    Int cardinality() const;

    std::string text() const;

    friend bool operator==(const Ideal&, const Ideal&) = default;
    friend auto operator<=>(const Ideal& a, const Ideal& b) {
        if (auto c = a.moduli_ <=> b.moduli_; c != 0) return c;
        return a.divisors_ <=> b.divisors_;
    }

private:
    std::vector<Int> moduli_;
    std::vector<Int> divisors_;
};

enum class IdealOp { sum, product, intersection };

/// Throws Error("ring mismatch") when a and b live over different rings.
Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp mode);

/// Prime ideals: one slot carries a prime p | n_i, every other slot is the full component.
bool is_prime_ideal(const Ideal& I);
bool is_nil_ideal(const Ideal& I);

/// In these Artinian rings every prime is both minimal and maximal.
std::vector<Ideal> minimal_primes(const RingSpec& R);

struct RingSummary {
    bool is_reduced = false;
    Ideal nilradical;
    std::vector<Int> zero_divisors;  // element codes, ascending
    std::vector<Int> idempotents;    // element codes, ascending
};

RingSummary ring_summary(const RingSpec& R);

/// Nonzero idempotents with no smaller nonzero idempotent below them (e f = f ⇒ f ∈ {0, e}).
std::vector<RingElem> primitive_idempotents(const RingSpec& R);

}  // namespace annigraph
