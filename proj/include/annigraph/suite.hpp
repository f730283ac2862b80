#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annigraph/invariants.hpp"
#include "annigraph/module.hpp"
#include "json.hpp"

namespace annigraph {

enum class Family { local_chain, direct_sum_local, reduced_cyclic, product_mixed };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();
/// One-line description used by `family list`.
std::string_view family_description(Family f);

inline constexpr Int kDefaultBudget = 36;

struct Instance {
    Family family = Family::local_chain;
    std::string ring_text;
    std::string module_text;
    /// For two-factor products over R_1 x R_2: the number of ring slots belonging to the first factor.
    std::optional<std::size_t> split_slots;

    ModuleSpec module() const;
    /// "ring=<R> module=<M>", the key used by reports and the allowlist.
    std::string id() const;
};

/// Instances of one family with |M| <= budget. Throws Error when budget < 4.
std::vector<Instance> generate_family(Family f, Int budget);

enum class Verdict { pass, fail, not_applicable, discrepancy };
std::string_view verdict_name(Verdict v);

struct ClaimInfo {
    std::string id;    // e.g. "C-2.6"
    std::string name;  // short descriptive name
    /// Strict claims are textbook facts; a failure is a FAIL rather than a DISCREPANCY.
    bool strict = false;
};

/// Every checked claim in report order.
const std::vector<ClaimInfo>& claim_catalog();
/// Claims listed in the coverage matrix without a checker, with the reason.
const std::vector<std::pair<std::string, std::string>>& out_of_scope_claims();

struct CheckResult {
    std::string claim_id;
    std::string instance;
    Family family = Family::local_chain;
    bool hypotheses_met = false;
    std::string hypotheses;  // why the hypotheses hold or fail
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::not_applicable;
    std::vector<std::string> failed_parts;
    bool known = false;  // DISCREPANCY matched by the allowlist
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
};

struct SkippedCheck {
    std::string claim_id;  // empty when the whole instance was skipped
    std::string instance;
    std::string reason;
};

struct AllowEntry {
    std::string claim;
    std::string instance;
    std::vector<std::string> parts;
    std::string reason;
};

/// Parses `[{"claim", "instance", "parts": [..], "reason"}, ...]`.
std::vector<AllowEntry> parse_allowlist(const std::string& json_text);
/// The allowlist shipped with the library.
const std::vector<AllowEntry>& default_allowlist();

struct SuiteConfig {
    std::vector<Family> families = all_families();
    Int budget = kDefaultBudget;
    std::vector<std::string> claims;  // empty means all
    std::size_t exact_cap = kDefaultExactCap;
    EnumerationCaps caps;
    std::vector<AllowEntry> allowlist = default_allowlist();
    std::size_t threads = 0;  // 0: hardware concurrency
};

struct SuiteResult {
    SuiteConfig config;
    std::vector<Instance> instances;
    nlohmann::ordered_json instance_facts = nlohmann::ordered_json::array();
    std::vector<CheckResult> results;
    std::vector<SkippedCheck> skipped;

    std::size_t count(Verdict v) const;
    std::size_t unknown_discrepancies() const;
    /// True when there is no FAIL and every DISCREPANCY is on the allowlist.
    bool green() const;
};

/// Checks for one instance; results follow claim_catalog order.
std::vector<CheckResult> check_instance(const Instance& inst, const std::vector<std::string>& claims,
                                        const SuiteConfig& config, std::vector<SkippedCheck>& skipped,
                                        nlohmann::ordered_json* facts = nullptr);

/// Instances run concurrently; the result order is deterministic (family, instance, claim).
SuiteResult run_suite(const SuiteConfig& config);

enum class ReportFormat { json, markdown };
std::string report(const SuiteResult& result, ReportFormat format);

}  // namespace annigraph
