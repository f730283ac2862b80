#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "annigraph/ring.hpp"

namespace annigraph {

/// Mixed-radix code of a module element; 0 is the zero element.
using Code = std::uint32_t;

/// One flat coordinate Z_q of M: cyclic component `component`, ring slot `slot`, modulus q > 1.
struct Coordinate {
    std::size_t component;
    std::size_t slot;
    Int modulus;
};

/// M = R/I_1 ⊕ ... ⊕ R/I_m. Each R/I_j splits over the ring slots into Z_{d_ij}; coordinates with
/// modulus 1 are dropped. The scalar r acts on a coordinate in slot i as multiplication by r_i.
class ModuleSpec {
public:
    ModuleSpec(RingSpec ring, std::vector<Ideal> components);

    /// `text` is a ';'-separated list of divisor tuples, e.g. "4;3" over ring "12".
    static ModuleSpec parse(const RingSpec& ring, std::string_view text);
    std::string text() const;

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<Ideal>& components() const noexcept { return components_; }
    const std::vector<Coordinate>& coordinates() const noexcept { return coords_; }
    Int cardinality() const noexcept { return cardinality_; }

    Int digit(Code m, std::size_t coord) const { return (m / strides_[coord]) % coords_[coord].modulus; }
    std::vector<Int> decode(Code m) const;
    Code encode(std::span<const Int> digits) const;
    std::string element_text(Code m) const;

    Code add(Code a, Code b) const;
    Code negate(Code a) const;
    Code scale(const RingElem& r, Code m) const;
    Code unit_vector(std::size_t coord) const { return static_cast<Code>(strides_[coord]); }

    /// Ann(M) = (0 : M).
    Ideal annihilator() const;
    bool is_faithful() const { return annihilator().is_zero(); }

    /// The factor module over the sub-ring formed by slots [first, first + count).
    ModuleSpec restrict_slots(std::size_t first, std::size_t count) const;

    friend bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
        return a.ring_ == b.ring_ && a.components_ == b.components_;
    }

private:
    RingSpec ring_;
    std::vector<Ideal> components_;
    std::vector<Coordinate> coords_;
    std::vector<Int> strides_;
    Int cardinality_ = 1;
};

/// A submodule in canonical form: its sorted element codes plus the cached colon ideal (N : M).
class Submodule {
public:
    Submodule(const ModuleSpec& M, std::vector<Code> sorted_elements);

    const std::vector<Code>& elements() const noexcept { return elements_; }
    const Ideal& colon() const noexcept { return colon_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool is_zero() const noexcept { return elements_.size() == 1; }
    bool is_proper() const noexcept { return !is_full_; }
    bool contains(Code m) const;
    bool contains(const Submodule& other) const;

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.elements_ == b.elements_; }
    /// Canonical order: size, then element list.
    friend std::strong_ordering operator<=>(const Submodule& a, const Submodule& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.elements_ <=> b.elements_;
    }

private:
    std::vector<Code> elements_;
    Ideal colon_;
    bool is_full_;
};

// Construction and lattice operations.
Submodule zero_submodule(const ModuleSpec& M);
Submodule full_submodule(const ModuleSpec& M);
Submodule span(const ModuleSpec& M, std::span<const Code> generators);
Submodule cyclic_submodule(const ModuleSpec& M, Code m);
Submodule submodule_sum(const ModuleSpec& M, const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const ModuleSpec& M, const Submodule& a, const Submodule& b);
/// Greedy generating set: scan elements in code order, keep those outside the span so far.
std::vector<Code> canonical_generators(const ModuleSpec& M, const Submodule& N);

// Operators on submodules.
/// (N : M) = {r : rM ⊆ N}.
Ideal colon_into_module(const Submodule& N, const ModuleSpec& M);
/// (N : A) = {r : rA ⊆ N} for submodules N, A of M.
Ideal relative_colon(const ModuleSpec& M, const Submodule& N, const Submodule& A);
/// IA, the submodule generated by {r a : r ∈ I, a ∈ A}.
Submodule ideal_times(const ModuleSpec& M, const Ideal& I, const Submodule& A);
Submodule ideal_times_module(const ModuleSpec& M, const Ideal& I);
Submodule scalar_image(const ModuleSpec& M, const RingElem& r, const Submodule& A);

/// NK = (N : M)(K : M)M.
Submodule submodule_product(const Submodule& N, const Submodule& K, const ModuleSpec& M);
/// Whether I·J·M = (0), without materializing the product.
bool ideal_product_kills(const Ideal& a, const Ideal& b, const ModuleSpec& M);

/// ann(N) = {m ∈ M : r m = 0 for all r ∈ (N : M)}.
Submodule ann_of_submodule(const Submodule& N, const ModuleSpec& M);
/// The ideal ann(m) = {r : r m = 0}.
Ideal element_annihilator(const ModuleSpec& M, Code m);
/// The ideal (0 : K).
Ideal annihilator_ideal(const ModuleSpec& M, const Submodule& K);

/// P must be proper; throws Error("prime submodules are proper") otherwise.
bool is_prime_submodule(const Submodule& P, const ModuleSpec& M);
/// Primality of P inside the R-module A (P ⊆ A ⊆ M). Throws when P == A.
bool is_prime_relative(const ModuleSpec& M, const Submodule& P, const Submodule& A);

/// Text label: "(d..)" when N = (N : M)M, otherwise "<g1,g2,..>" over canonical generators.
std::string submodule_label(const Submodule& N, const ModuleSpec& M);

struct EnumerationCaps {
    Int max_module_size = 4096;
    std::size_t max_submodules = 20000;
};

/// Every submodule of M in canonical order (index 0 is (0), the last index is M).
class SubmoduleLattice {
public:
    SubmoduleLattice(ModuleSpec M, std::vector<Submodule> submodules);

    const ModuleSpec& module() const noexcept { return module_; }
    const std::vector<Submodule>& submodules() const noexcept { return subs_; }
    const Submodule& at(std::size_t i) const { return subs_.at(i); }
    std::size_t size() const noexcept { return subs_.size(); }
    std::size_t zero_index() const noexcept { return 0; }
    std::size_t full_index() const noexcept { return subs_.size() - 1; }

    std::optional<std::size_t> find(const Submodule& N) const;
    std::size_t index_of(const Submodule& N) const;  // throws when N is not in the lattice

    struct Hash {
        std::size_t operator()(const std::vector<Code>& v) const noexcept;
    };

private:
    ModuleSpec module_;
    std::vector<Submodule> subs_;
    std::unordered_map<std::vector<Code>, std::size_t, Hash> index_;
};

/// Closure of the cyclic submodules under sums. Throws CapExceeded (carrying the partial count).
SubmoduleLattice enumerate_submodules(const ModuleSpec& M, EnumerationCaps caps = {});

struct StructureReport {
    std::vector<std::size_t> maximal;         // Max(M), lattice indices
    std::size_t jacobson = 0;                 // J(M)
    std::vector<std::size_t> minimal;         // minimal nonzero submodules
    std::vector<Int> zero_divisors;           // Z(M), ring element codes
    std::vector<Ideal> associated_primes;     // Ass(M)
    bool is_local = false;
    bool is_simple = false;
    bool is_prime_module = false;
    bool is_domain_module = false;
    bool m_is_vertex = false;
};

StructureReport structure_report(const SubmoduleLattice& L);

struct IdempotentSplit {
    Submodule first;   // eM
    Submodule second;  // (1 - e)M
    bool is_direct = false;               // eM + (1-e)M = M and eM ∩ (1-e)M = 0
    bool every_submodule_splits = false;  // N = eN ⊕ (1-e)N for every N in the lattice
};

/// Throws Error when e is not idempotent.
IdempotentSplit idempotent_decompose(const SubmoduleLattice& L, const RingElem& e);

}  // namespace annigraph
