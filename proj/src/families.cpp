#include <array>

#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"

namespace annigraph {

namespace {

struct FamilyRow {
    Family family;
    std::string_view name;
    std::string_view description;
};

constexpr std::array<FamilyRow, 4> kFamilies{{
    {Family::local_chain, "local_chain", "Z_{p^e} over itself, e >= 1"},
    {Family::direct_sum_local, "direct_sum_local",
     "Z_n with at least two prime factors, written as the sum of its primary parts"},
    {Family::reduced_cyclic, "reduced_cyclic", "Z_n over itself, n squarefree with at least two primes"},
    {Family::product_mixed, "product_mixed", "Z_a x Z_b over itself, 2 <= a <= b, split into two factors"},
}};

std::string join_moduli(const std::vector<Int>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(parts[i]);
    }
    return out;
}

std::vector<Int> primary_parts(Int n) {
    std::vector<Int> out;
    for (Int p : nt::prime_factors(n)) {
        Int q = 1;
        while (n % (q * p) == 0) q *= p;
        out.push_back(q);
    }
    return out;
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& row : kFamilies)
        if (row.family == f) return row.name;
    return "?";
}

std::string_view family_description(Family f) {
    for (const auto& row : kFamilies)
        if (row.family == f) return row.description;
    return "";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& row : kFamilies)
        if (row.name == name) return row.family;
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (const auto& row : kFamilies) v.push_back(row.family);
        return v;
    }();
    return all;
}

ModuleSpec Instance::module() const { return ModuleSpec::parse(RingSpec::parse(ring_text), module_text); }

std::string Instance::id() const { return "ring=" + ring_text + " module=" + module_text; }

std::vector<Instance> generate_family(Family f, Int budget) {
    if (budget < 4) throw Error("family budget must be at least 4");
    std::vector<Instance> out;
    switch (f) {
        case Family::local_chain:
            for (Int q = 2; q <= budget; ++q)
                if (nt::prime_factors(q).size() == 1) out.push_back({f, std::to_string(q), std::to_string(q), {}});
            break;
        case Family::direct_sum_local:
            for (Int n = 2; n <= budget; ++n)
                if (nt::prime_factors(n).size() >= 2)
                    out.push_back({f, std::to_string(n), join_moduli(primary_parts(n), ';'), {}});
            break;
        case Family::reduced_cyclic:
            for (Int n = 2; n <= budget; ++n)
                if (nt::is_squarefree(n) && nt::prime_factors(n).size() >= 2)
                    out.push_back({f, std::to_string(n), std::to_string(n), {}});
            break;
        case Family::product_mixed:
            for (Int a = 2; a * a <= budget; ++a)
                for (Int b = a; a * b <= budget; ++b) {
                    std::string text = join_moduli({a, b}, ',');
                    out.push_back({f, text, text, std::size_t{1}});
                }
            break;
    }
    return out;
}

}  // namespace annigraph
