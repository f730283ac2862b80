#include "annigraph/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "annigraph/errors.hpp"
#include "text_scan.hpp"

namespace annigraph {

namespace nt {

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int radical(Int n) {
    Int r = 1;
    for (Int p : prime_factors(n)) r *= p;
    return r;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(Int n) { return radical(n) == n; }

int prime_length(Int n) {
    int len = 0;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            ++len;
        }
    }
    return n > 1 ? len + 1 : len;
}

Int lcm(Int a, Int b) { return std::lcm(a, b); }

}  // namespace nt

namespace {

constexpr Int kMaxRingCardinality = Int{1} << 31;
constexpr Int kMaxScanCardinality = Int{1} << 22;

Int norm_gcd(Int r, Int n) { return std::gcd(r % n, n); }  // gcd(0, n) == n

}  // namespace

RingSpec::RingSpec(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error("ring needs at least one modulus");
    for (Int n : moduli_) {
        if (n < 2) throw Error("ring modulus must be >= 2, got " + std::to_string(n));
        if (cardinality_ > kMaxRingCardinality / n) throw Error("ring too large");
        cardinality_ *= n;
    }
}

RingSpec RingSpec::parse(std::string_view text) {
    detail::Scanner scan(text);
    std::vector<Int> moduli;
    do {
        std::size_t at = scan.pos();
        Int n = scan.integer();
        if (n < 2) throw ParseError("ring modulus must be >= 2", at);
        moduli.push_back(n);
    } while (scan.accept(','));
    scan.expect_end();
    try {
        return RingSpec(std::move(moduli));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string RingSpec::text() const {
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(moduli_[i]);
    }
    return out;
}

RingElem ring_zero(const RingSpec& R) { return {std::vector<Int>(R.slots(), 0)}; }

RingElem ring_one(const RingSpec& R) { return {std::vector<Int>(R.slots(), 1)}; }

RingElem ring_add(const RingSpec& R, const RingElem& a, const RingElem& b) {
    RingElem out = a;
    for (std::size_t i = 0; i < R.slots(); ++i) out.residues[i] = (a.residues[i] + b.residues[i]) % R.modulus(i);
    return out;
}

RingElem ring_sub(const RingSpec& R, const RingElem& a, const RingElem& b) {
    RingElem out = a;
    for (std::size_t i = 0; i < R.slots(); ++i) {
        Int n = R.modulus(i);
        out.residues[i] = ((a.residues[i] - b.residues[i]) % n + n) % n;
    }
    return out;
}

RingElem ring_mul(const RingSpec& R, const RingElem& a, const RingElem& b) {
    RingElem out = a;
    for (std::size_t i = 0; i < R.slots(); ++i) out.residues[i] = (a.residues[i] * b.residues[i]) % R.modulus(i);
    return out;
}

bool ring_is_zero(const RingElem& a) {
    return std::all_of(a.residues.begin(), a.residues.end(), [](Int r) { return r == 0; });
}

Int ring_encode(const RingSpec& R, const RingElem& a) {
    Int code = 0;
    for (std::size_t i = R.slots(); i-- > 0;) code = code * R.modulus(i) + a.residues[i];
    return code;
}

RingElem ring_decode(const RingSpec& R, Int code) {
    RingElem out{std::vector<Int>(R.slots())};
    for (std::size_t i = 0; i < R.slots(); ++i) {
        out.residues[i] = code % R.modulus(i);
        code /= R.modulus(i);
    }
    return out;
}

std::string ring_elem_text(const RingElem& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.residues.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.residues[i]);
    }
    return out + ")";
}

void for_each_residue_class(const std::vector<Int>& divisors,
                            const std::function<void(const RingElem&)>& visit) {
    RingElem r{std::vector<Int>(divisors.size(), 0)};
    while (true) {
        visit(r);
        std::size_t i = 0;
        for (; i < divisors.size(); ++i) {
            if (++r.residues[i] < divisors[i]) break;
            r.residues[i] = 0;
        }
        if (i == divisors.size()) return;
    }
}

void for_each_ring_element(const RingSpec& R, const std::function<void(const RingElem&)>& visit) {
    for_each_residue_class(R.moduli(), visit);
}

Ideal::Ideal(const RingSpec& R, std::vector<Int> divisors) : moduli_(R.moduli()), divisors_(std::move(divisors)) {
    if (divisors_.size() != moduli_.size()) throw Error("ring mismatch");
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (divisors_[i] < 1 || moduli_[i] % divisors_[i] != 0)
            throw Error("ideal divisor " + std::to_string(divisors_[i]) + " does not divide " +
                        std::to_string(moduli_[i]));
    }
}

Ideal Ideal::zero(const RingSpec& R) { return Ideal(R, R.moduli()); }

Ideal Ideal::unit(const RingSpec& R) { return Ideal(R, std::vector<Int>(R.slots(), 1)); }

Ideal Ideal::generated_by(const RingSpec& R, const RingElem& g) {
    std::vector<Int> d(R.slots());
    for (std::size_t i = 0; i < R.slots(); ++i) d[i] = norm_gcd(g.residues[i], R.modulus(i));
    return Ideal(R, std::move(d));
}

Ideal Ideal::parse(const RingSpec& R, std::string_view text) {
    detail::Scanner scan(text);
    scan.expect('(');
    std::vector<Int> d;
    std::vector<std::size_t> at;
    do {
        at.push_back(scan.pos());
        d.push_back(scan.integer());
    } while (scan.accept(','));
    scan.expect(')');
    scan.expect_end();
    if (d.size() != R.slots()) throw ParseError("ideal has " + std::to_string(d.size()) + " slots, ring has " +
                                                    std::to_string(R.slots()),
                                                0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1 || R.modulus(i) % d[i] != 0)
            throw ParseError("divisor " + std::to_string(d[i]) + " does not divide " + std::to_string(R.modulus(i)),
                             at[i]);
    }
    return Ideal(R, std::move(d));
}

bool Ideal::is_zero() const { return divisors_ == moduli_; }

bool Ideal::is_unit() const {
    return std::all_of(divisors_.begin(), divisors_.end(), [](Int d) { return d == 1; });
}

bool Ideal::contains(const RingElem& r) const {
    for (std::size_t i = 0; i < divisors_.size(); ++i)
        if (r.residues.at(i) % divisors_[i] != 0) return false;
    return true;
}

bool Ideal::subset_of(const Ideal& other) const {
    if (moduli_ != other.moduli_) throw Error("ring mismatch");
    for (std::size_t i = 0; i < divisors_.size(); ++i)
        if (divisors_[i] % other.divisors_[i] != 0) return false;
    return true;
}

Int Ideal::cardinality() const {
    Int c = 1;
    for (std::size_t i = 0; i < divisors_.size(); ++i) c *= moduli_[i] / divisors_[i];
    return c;
}

std::string Ideal::text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(divisors_[i]);
    }
    return out + ")";
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp mode) {
    if (a.moduli() != b.moduli()) throw Error("ring mismatch");
    RingSpec R(a.moduli());
    std::vector<Int> d(R.slots());
    for (std::size_t i = 0; i < d.size(); ++i) {
        Int x = a.divisor(i), y = b.divisor(i), n = R.modulus(i);
        switch (mode) {
            case IdealOp::sum: d[i] = std::gcd(x, y); break;
            case IdealOp::product: d[i] = std::gcd(x * y, n); break;
            case IdealOp::intersection: d[i] = std::min(nt::lcm(x, y), n); break;
        }
    }
    return Ideal(R, std::move(d));
}

bool is_prime_ideal(const Ideal& I) {
    int prime_slots = 0;
    for (Int d : I.divisors()) {
        if (d == 1) continue;
        if (!nt::is_prime(d)) return false;
        ++prime_slots;
    }
    return prime_slots == 1;
}

bool is_nil_ideal(const Ideal& I) {
    for (std::size_t i = 0; i < I.divisors().size(); ++i)
        if (I.divisor(i) % nt::radical(I.moduli()[i]) != 0) return false;
    return true;
}

std::vector<Ideal> minimal_primes(const RingSpec& R) {
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < R.slots(); ++i) {
        for (Int p : nt::prime_factors(R.modulus(i))) {
            std::vector<Int> d(R.slots(), 1);
            d[i] = p;
            out.emplace_back(R, std::move(d));
        }
    }
    return out;
}

RingSummary ring_summary(const RingSpec& R) {
    if (R.cardinality() > kMaxScanCardinality) throw CapExceeded("ring too large for element scan", 0);
    std::vector<Int> rad(R.slots());
    bool reduced = true;
    for (std::size_t i = 0; i < R.slots(); ++i) {
        rad[i] = nt::radical(R.modulus(i));
        reduced = reduced && rad[i] == R.modulus(i);
    }
    RingSummary s{reduced, Ideal(R, rad), {}, {}};
    for_each_ring_element(R, [&](const RingElem& r) {
        bool unit = true;
        for (std::size_t i = 0; i < R.slots(); ++i) unit = unit && norm_gcd(r.residues[i], R.modulus(i)) == 1;
        Int code = ring_encode(R, r);
        if (!unit) s.zero_divisors.push_back(code);
        if (ring_mul(R, r, r) == r) s.idempotents.push_back(code);
    });
    return s;
}

std::vector<RingElem> primitive_idempotents(const RingSpec& R) {
    std::vector<RingElem> out;
    for (std::size_t i = 0; i < R.slots(); ++i) {
        Int n = R.modulus(i);
        for (Int p : nt::prime_factors(n)) {
            Int q = 1;
            while ((n / q) % p == 0) q *= p;
            // e ≡ 1 (mod q), e ≡ 0 (mod n/q)
            Int cofactor = n / q;
            Int e = 0;
            for (Int k = 0; k < q; ++k) {
                if ((k * cofactor) % q == 1 % q) {
                    e = (k * cofactor) % n;
                    break;
                }
            }
            RingElem r = ring_zero(R);
            r.residues[i] = (q == n) ? 1 % n : e;
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [&](const RingElem& a, const RingElem& b) {
        return ring_encode(R, a) < ring_encode(R, b);
    });
    return out;
}

}  // namespace annigraph
