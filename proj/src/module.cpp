#include "annigraph/module.hpp"

#include <algorithm>
#include <numeric>

#include "annigraph/errors.hpp"
#include "text_scan.hpp"

namespace annigraph {

namespace {

constexpr Int kMaxModuleCardinality = Int{1} << 31;

RingElem slot_scalar(const RingSpec& R, std::size_t slot, Int value) {
    RingElem r = ring_zero(R);
    r.residues[slot] = value % R.modulus(slot);
    return r;
}

// Incremental R-span: a membership bitmap plus the element list.
class SpanBuilder {
public:
    explicit SpanBuilder(const ModuleSpec& M) : M_(M), member_(static_cast<std::size_t>(M.cardinality()), 0) {
        insert(0);
    }

    // `seed` must already be a submodule.
    SpanBuilder(const ModuleSpec& M, const std::vector<Code>& seed) : SpanBuilder(M) {
        for (Code m : seed) insert(m);
    }

    bool contains(Code m) const { return member_[m] != 0; }

    // Adds the additive cyclic group <x>; the result stays a subgroup.
    void add_cyclic_group(Code x) {
        if (contains(x)) return;
        const std::vector<Code> base = elems_;
        Code multiple = x;
        while (!contains(multiple)) {
            for (Code s : base) insert(M_.add(s, multiple));
            multiple = M_.add(multiple, x);
        }
    }

    // Adds Rg = sum over slots i of <e_i g>.
    void add_generator(Code g) {
        const RingSpec& R = M_.ring();
        for (std::size_t i = 0; i < R.slots(); ++i) add_cyclic_group(M_.scale(slot_scalar(R, i, 1), g));
    }

    std::vector<Code> sorted() const {
        std::vector<Code> out = elems_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void insert(Code m) {
        if (!member_[m]) {
            member_[m] = 1;
            elems_.push_back(m);
        }
    }

    const ModuleSpec& M_;
    std::vector<char> member_;
    std::vector<Code> elems_;
};

// Elements m whose digit in every coordinate of slot i is a multiple of step(slot, modulus).
template <typename StepFn>
std::vector<Code> filter_by_steps(const ModuleSpec& M, StepFn step) {
    const auto& coords = M.coordinates();
    std::vector<Int> steps(coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) steps[c] = step(coords[c].slot, coords[c].modulus);
    std::vector<Code> out;
    for (Int m = 0; m < M.cardinality(); ++m) {
        bool keep = true;
        for (std::size_t c = 0; c < coords.size() && keep; ++c) keep = M.digit(static_cast<Code>(m), c) % steps[c] == 0;
        if (keep) out.push_back(static_cast<Code>(m));
    }
    return out;
}

Ideal colon_from_generators(const ModuleSpec& M, const std::vector<Code>& N_sorted,
                            const std::vector<Code>& generators) {
    const RingSpec& R = M.ring();
    auto in_N = [&](Code m) { return std::binary_search(N_sorted.begin(), N_sorted.end(), m); };
    std::vector<Int> d(R.slots());
    for (std::size_t i = 0; i < R.slots(); ++i) {
        for (Int cand : nt::divisors(R.modulus(i))) {
            RingElem r = slot_scalar(R, i, cand);
            bool ok = std::all_of(generators.begin(), generators.end(), [&](Code g) { return in_N(M.scale(r, g)); });
            if (ok) {
                d[i] = cand;
                break;
            }
        }
    }
    return Ideal(R, std::move(d));
}

std::vector<Code> unit_generators(const ModuleSpec& M) {
    std::vector<Code> gens;
    for (std::size_t c = 0; c < M.coordinates().size(); ++c) gens.push_back(M.unit_vector(c));
    return gens;
}

}  // namespace

ModuleSpec::ModuleSpec(RingSpec ring, std::vector<Ideal> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    if (components_.empty()) throw Error("module needs at least one component");
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (components_[j].moduli() != ring_.moduli()) throw Error("ring mismatch");
        for (std::size_t i = 0; i < ring_.slots(); ++i) {
            Int q = components_[j].divisor(i);
            if (q == 1) continue;
            coords_.push_back({j, i, q});
            strides_.push_back(cardinality_);
            if (cardinality_ > kMaxModuleCardinality / q) throw Error("module too large");
            cardinality_ *= q;
        }
    }
}

ModuleSpec ModuleSpec::parse(const RingSpec& ring, std::string_view text) {
    detail::Scanner scan(text);
    std::vector<Ideal> comps;
    do {
        std::size_t start = scan.pos();
        std::vector<Int> d;
        std::vector<std::size_t> at;
        do {
            at.push_back(scan.pos());
            d.push_back(scan.integer());
        } while (scan.accept(','));
        if (d.size() != ring.slots())
            throw ParseError("component has " + std::to_string(d.size()) + " slots, ring has " +
                                 std::to_string(ring.slots()),
                             start);
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 1 || ring.modulus(i) % d[i] != 0)
                throw ParseError("divisor " + std::to_string(d[i]) + " does not divide " +
                                     std::to_string(ring.modulus(i)),
                                 at[i]);
        }
        comps.emplace_back(ring, std::move(d));
    } while (scan.accept(';'));
    scan.expect_end();
    try {
        return ModuleSpec(ring, std::move(comps));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string ModuleSpec::text() const {
    std::string out;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) out += ';';
        const auto& d = components_[j].divisors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(d[i]);
        }
    }
    return out;
}

std::vector<Int> ModuleSpec::decode(Code m) const {
    std::vector<Int> out(coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c) out[c] = digit(m, c);
    return out;
}

Code ModuleSpec::encode(std::span<const Int> digits) const {
    Int code = 0;
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        Int q = coords_[c].modulus;
        code += ((digits[c] % q + q) % q) * strides_[c];
    }
    return static_cast<Code>(code);
}

std::string ModuleSpec::element_text(Code m) const {
    std::string out = "[";
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        if (c) out += ',';
        out += std::to_string(digit(m, c));
    }
    return out + "]";
}

Code ModuleSpec::add(Code a, Code b) const {
    Int out = 0;
    for (std::size_t c = 0; c < coords_.size(); ++c) out += ((digit(a, c) + digit(b, c)) % coords_[c].modulus) * strides_[c];
    return static_cast<Code>(out);
}

Code ModuleSpec::negate(Code a) const {
    Int out = 0;
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        Int q = coords_[c].modulus;
        out += ((q - digit(a, c)) % q) * strides_[c];
    }
    return static_cast<Code>(out);
}

Code ModuleSpec::scale(const RingElem& r, Code m) const {
    Int out = 0;
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        Int q = coords_[c].modulus;
        out += ((r.residues[coords_[c].slot] % q) * digit(m, c) % q) * strides_[c];
    }
    return static_cast<Code>(out);
}

Ideal ModuleSpec::annihilator() const {
    std::vector<Int> d(ring_.slots(), 1);
    for (const auto& c : coords_) d[c.slot] = nt::lcm(d[c.slot], c.modulus);
    return Ideal(ring_, std::move(d));
}

ModuleSpec ModuleSpec::restrict_slots(std::size_t first, std::size_t count) const {
    if (count == 0 || first + count > ring_.slots()) throw Error("slot range out of bounds");
    std::vector<Int> moduli(ring_.moduli().begin() + first, ring_.moduli().begin() + first + count);
    RingSpec sub(moduli);
    std::vector<Ideal> comps;
    for (const auto& I : components_) {
        std::vector<Int> d(I.divisors().begin() + first, I.divisors().begin() + first + count);
        comps.emplace_back(sub, std::move(d));
    }
    return ModuleSpec(sub, std::move(comps));
}

Submodule::Submodule(const ModuleSpec& M, std::vector<Code> sorted_elements)
    : elements_(std::move(sorted_elements)),
      colon_(colon_from_generators(M, elements_, unit_generators(M))),
      is_full_(static_cast<Int>(elements_.size()) == M.cardinality()) {}

bool Submodule::contains(Code m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

bool Submodule::contains(const Submodule& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

Submodule zero_submodule(const ModuleSpec& M) { return Submodule(M, {0}); }

Submodule full_submodule(const ModuleSpec& M) {
    std::vector<Code> all(static_cast<std::size_t>(M.cardinality()));
    std::iota(all.begin(), all.end(), Code{0});
    return Submodule(M, std::move(all));
}

Submodule span(const ModuleSpec& M, std::span<const Code> generators) {
    SpanBuilder b(M);
    for (Code g : generators) b.add_generator(g);
    return Submodule(M, b.sorted());
}

Submodule cyclic_submodule(const ModuleSpec& M, Code m) { return span(M, std::span<const Code>(&m, 1)); }

Submodule submodule_sum(const ModuleSpec& M, const Submodule& a, const Submodule& b) {
    SpanBuilder builder(M, a.elements());
    for (Code g : canonical_generators(M, b)) builder.add_generator(g);
    return Submodule(M, builder.sorted());
}

Submodule submodule_intersection(const ModuleSpec& M, const Submodule& a, const Submodule& b) {
    std::vector<Code> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return Submodule(M, std::move(out));
}

std::vector<Code> canonical_generators(const ModuleSpec& M, const Submodule& N) {
    SpanBuilder b(M);
    std::vector<Code> gens;
    for (Code m : N.elements()) {
        if (!b.contains(m)) {
            gens.push_back(m);
            b.add_generator(m);
        }
    }
    return gens;
}

Ideal colon_into_module(const Submodule& N, const ModuleSpec& M) {
    return colon_from_generators(M, N.elements(), unit_generators(M));
}

Ideal relative_colon(const ModuleSpec& M, const Submodule& N, const Submodule& A) {
    return colon_from_generators(M, N.elements(), canonical_generators(M, A));
}

Submodule ideal_times(const ModuleSpec& M, const Ideal& I, const Submodule& A) {
    const RingSpec& R = M.ring();
    SpanBuilder b(M);
    for (Code g : canonical_generators(M, A))
        for (std::size_t i = 0; i < R.slots(); ++i) b.add_generator(M.scale(slot_scalar(R, i, I.divisor(i)), g));
    return Submodule(M, b.sorted());
}

Submodule ideal_times_module(const ModuleSpec& M, const Ideal& I) {
    return Submodule(M, filter_by_steps(M, [&](std::size_t slot, Int q) { return std::gcd(I.divisor(slot), q); }));
}

Submodule scalar_image(const ModuleSpec& M, const RingElem& r, const Submodule& A) {
    std::vector<Code> out;
    out.reserve(A.size());
    for (Code a : A.elements()) out.push_back(M.scale(r, a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Submodule(M, std::move(out));
}

Submodule submodule_product(const Submodule& N, const Submodule& K, const ModuleSpec& M) {
    return ideal_times_module(M, ideal_combine(N.colon(), K.colon(), IdealOp::product));
}

bool ideal_product_kills(const Ideal& a, const Ideal& b, const ModuleSpec& M) {
    for (const auto& c : M.coordinates())
        if ((a.divisor(c.slot) * b.divisor(c.slot)) % c.modulus != 0) return false;
    return true;
}

Submodule ann_of_submodule(const Submodule& N, const ModuleSpec& M) {
    const Ideal& a = N.colon();
    return Submodule(M, filter_by_steps(M, [&](std::size_t slot, Int q) { return q / std::gcd(a.divisor(slot), q); }));
}

Ideal element_annihilator(const ModuleSpec& M, Code m) {
    std::vector<Int> d(M.ring().slots(), 1);
    for (std::size_t c = 0; c < M.coordinates().size(); ++c) {
        const auto& coord = M.coordinates()[c];
        Int order = coord.modulus / std::gcd(M.digit(m, c), coord.modulus);
        d[coord.slot] = nt::lcm(d[coord.slot], order);
    }
    return Ideal(M.ring(), std::move(d));
}

Ideal annihilator_ideal(const ModuleSpec& M, const Submodule& K) {
    std::vector<Int> d(M.ring().slots(), 1);
    for (Code g : canonical_generators(M, K)) {
        Ideal a = element_annihilator(M, g);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = nt::lcm(d[i], a.divisor(i));
    }
    return Ideal(M.ring(), std::move(d));
}

bool is_prime_relative(const ModuleSpec& M, const Submodule& P, const Submodule& A) {
    if (P == A) throw Error("prime submodules are proper");
    const Ideal colon = relative_colon(M, P, A);
    bool prime = true;
    // r only matters modulo Ann(M).
    for_each_residue_class(M.annihilator().divisors(), [&](const RingElem& r) {
        if (!prime || colon.contains(r)) return;
        for (Code e : A.elements()) {
            if (!P.contains(e) && P.contains(M.scale(r, e))) {
                prime = false;
                return;
            }
        }
    });
    return prime;
}

bool is_prime_submodule(const Submodule& P, const ModuleSpec& M) {
    return is_prime_relative(M, P, full_submodule(M));
}

std::string submodule_label(const Submodule& N, const ModuleSpec& M) {
    if (ideal_times_module(M, N.colon()) == N) return N.colon().text();
    std::string out = "<";
    auto gens = canonical_generators(M, N);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ',';
        out += M.element_text(gens[i]);
    }
    return out + ">";
}

std::size_t SubmoduleLattice::Hash::operator()(const std::vector<Code>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Code c : v) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

SubmoduleLattice::SubmoduleLattice(ModuleSpec M, std::vector<Submodule> submodules)
    : module_(std::move(M)), subs_(std::move(submodules)) {
    for (std::size_t i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i].elements(), i);
}

std::optional<std::size_t> SubmoduleLattice::find(const Submodule& N) const {
    auto it = index_.find(N.elements());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SubmoduleLattice::index_of(const Submodule& N) const {
    auto i = find(N);
    if (!i) throw Error("submodule not in lattice");
    return *i;
}

SubmoduleLattice enumerate_submodules(const ModuleSpec& M, EnumerationCaps caps) {
    if (M.cardinality() > caps.max_module_size)
        throw CapExceeded("module has " + std::to_string(M.cardinality()) + " elements, cap is " +
                              std::to_string(caps.max_module_size),
                          0);

    // One generator per distinct cyclic submodule Rm.
    std::vector<Code> cyclic_gens;
    {
        std::unordered_map<std::vector<Code>, char, SubmoduleLattice::Hash> seen;
        for (Int m = 1; m < M.cardinality(); ++m) {
            SpanBuilder b(M);
            b.add_generator(static_cast<Code>(m));
            if (seen.emplace(b.sorted(), 1).second) cyclic_gens.push_back(static_cast<Code>(m));
        }
    }

    using Set = std::unordered_map<std::vector<Code>, char, SubmoduleLattice::Hash>;
    Set found;
    std::vector<std::vector<Code>> order;
    found.emplace(std::vector<Code>{0}, 1);
    order.push_back({0});
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::vector<Code> current = order[head];
        std::vector<char> member(static_cast<std::size_t>(M.cardinality()), 0);
        for (Code m : current) member[m] = 1;
        for (Code g : cyclic_gens) {
            if (member[g]) continue;
            SpanBuilder b(M, current);
            b.add_generator(g);
            auto elems = b.sorted();
            if (found.emplace(elems, 1).second) {
                if (found.size() > caps.max_submodules)
                    throw CapExceeded("more than " + std::to_string(caps.max_submodules) + " submodules",
                                      found.size());
                order.push_back(std::move(elems));
            }
        }
    }

    std::vector<Submodule> subs;
    subs.reserve(order.size());
    for (auto& elems : order) subs.emplace_back(M, std::move(elems));
    std::sort(subs.begin(), subs.end());
    return SubmoduleLattice(M, std::move(subs));
}

StructureReport structure_report(const SubmoduleLattice& L) {
    const ModuleSpec& M = L.module();
    const Int order = M.cardinality();
    StructureReport s;

    for (std::size_t i = 0; i < L.size(); ++i) {
        const auto& N = L.at(i);
        Int n = static_cast<Int>(N.size());
        if (N.is_proper() && nt::is_prime(order / n)) s.maximal.push_back(i);
        if (!N.is_zero() && nt::is_prime(n)) s.minimal.push_back(i);
    }

    Submodule J = full_submodule(M);
    for (std::size_t i : s.maximal) J = submodule_intersection(M, J, L.at(i));
    s.jacobson = L.index_of(J);

    const RingSpec& R = M.ring();
    for_each_ring_element(R, [&](const RingElem& r) {
        bool injective = true;
        for (const auto& c : M.coordinates()) injective = injective && std::gcd(r.residues[c.slot], c.modulus) == 1;
        if (!injective) s.zero_divisors.push_back(ring_encode(R, r));
    });

    for (Int m = 1; m < order; ++m) {
        Ideal a = element_annihilator(M, static_cast<Code>(m));
        if (is_prime_ideal(a)) s.associated_primes.push_back(a);
    }
    std::sort(s.associated_primes.begin(), s.associated_primes.end());
    s.associated_primes.erase(std::unique(s.associated_primes.begin(), s.associated_primes.end()),
                              s.associated_primes.end());

    s.is_local = s.maximal.size() == 1;
    s.is_simple = nt::is_prime(order);
    s.is_prime_module = order > 1 && is_prime_submodule(L.at(L.zero_index()), M);
    s.is_domain_module = s.zero_divisors == std::vector<Int>{0};

    const Ideal ann = M.annihilator();
    for (const auto& N : L.submodules())
        if (!N.is_zero() && N.is_proper() && N.colon() == ann) s.m_is_vertex = true;
    return s;
}

IdempotentSplit idempotent_decompose(const SubmoduleLattice& L, const RingElem& e) {
    const ModuleSpec& M = L.module();
    const RingSpec& R = M.ring();
    if (ring_mul(R, e, e) != e) throw Error("element " + ring_elem_text(e) + " is not idempotent");
    const RingElem f = ring_sub(R, ring_one(R), e);
    const Submodule full = full_submodule(M);
    IdempotentSplit out{scalar_image(M, e, full), scalar_image(M, f, full)};
    out.is_direct = submodule_sum(M, out.first, out.second) == full &&
                    submodule_intersection(M, out.first, out.second).is_zero();
    out.every_submodule_splits = std::all_of(L.submodules().begin(), L.submodules().end(), [&](const Submodule& N) {
        return submodule_sum(M, scalar_image(M, e, N), scalar_image(M, f, N)) == N;
    });
    return out;
}

}  // namespace annigraph
