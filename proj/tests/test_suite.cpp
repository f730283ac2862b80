#include <algorithm>
#include <set>

#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"
#include "doctest.h"

using namespace annigraph;

namespace {

std::set<std::string> rings(Family f, Int budget) {
    std::set<std::string> out;
    for (const auto& i : generate_family(f, budget)) out.insert(i.ring_text + "|" + i.module_text);
    return out;
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& claim) {
    for (const auto& r : rs)
        if (r.claim_id == claim) return r;
    FAIL("no result for " << claim);
    throw;
}

std::vector<CheckResult> check(const char* ring, const char* module, Family f, const std::string& claim,
                               std::optional<std::size_t> split = std::nullopt) {
    Instance inst{f, ring, module, split};
    std::vector<SkippedCheck> skipped;
    auto out = check_instance(inst, {claim}, SuiteConfig{}, skipped);
    CHECK(skipped.empty());
    return out;
}

}  // namespace

TEST_SUITE("suite") {

TEST_CASE("generate_family examples") {
    auto local = rings(Family::local_chain, 32);
    for (const char* s : {"4|4", "8|8", "9|9", "16|16", "25|25", "27|27"}) CHECK(local.count(s) == 1);
    auto reduced = rings(Family::reduced_cyclic, 36);
    for (const char* s : {"6|6", "10|10", "15|15", "30|30"}) CHECK(reduced.count(s) == 1);
    auto sums = rings(Family::direct_sum_local, 36);
    for (const char* s : {"12|4;3", "18|2;9", "36|4;9"}) CHECK(sums.count(s) == 1);
    for (const auto& i : generate_family(Family::product_mixed, 36)) {
        CHECK(i.split_slots == 1u);
        CHECK(i.module().cardinality() <= 36);
    }
    CHECK_THROWS_AS(generate_family(Family::local_chain, 3), Error);
    CHECK(generate_family(Family::reduced_cyclic, 5).empty());
}

TEST_CASE("instance ids") {
    Instance i{Family::direct_sum_local, "12", "4;3", std::nullopt};
    CHECK(i.id() == "ring=12 module=4;3");
}

TEST_CASE("check examples") {
    auto a = find(check("12", "4;3", Family::direct_sum_local, "C-2.6"), "C-2.6");
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.hypotheses_met);

    auto b = find(check("30", "30", Family::reduced_cyclic, "C-3.3"), "C-3.3");
    CHECK(b.verdict == Verdict::pass);

    auto c = find(check("8", "8", Family::local_chain, "C-2.2"), "C-2.2");
    CHECK(c.verdict == Verdict::discrepancy);
    CHECK(c.known);
    CHECK(c.evidence.contains("distance"));

    auto d = find(check("6", "2;2;3", Family::direct_sum_local, "C-2.6"), "C-2.6");
    CHECK(d.verdict == Verdict::not_applicable);
    CHECK_FALSE(d.hypotheses_met);

    auto e = find(check("6", "6", Family::reduced_cyclic, "C-2.6"), "C-2.6");
    CHECK(e.verdict == Verdict::not_applicable);
}

TEST_CASE("verdict invariants over the default corpus") {
    SuiteConfig config;
    config.budget = 24;
    auto r = run_suite(config);
    for (const auto& c : r.results) {
        CHECK((c.verdict == Verdict::not_applicable) == !c.hypotheses_met);
        if (c.verdict == Verdict::pass) CHECK(c.failed_parts.empty());
        if (c.verdict == Verdict::discrepancy || c.verdict == Verdict::fail) CHECK_FALSE(c.failed_parts.empty());
    }
    CHECK(r.green());
}

TEST_CASE("report covers every claim and is deterministic") {
    SuiteConfig config;
    config.threads = 4;
    auto a = report(run_suite(config), ReportFormat::json);
    config.threads = 1;
    auto b = report(run_suite(config), ReportFormat::json);
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["coverage"].size() == claim_catalog().size());
    CHECK(j["summary"]["FAIL"] == 0);
    CHECK(j["out_of_scope"].size() == out_of_scope_claims().size());
}

TEST_CASE("empty results make a valid report") {
    SuiteConfig config;
    config.families.clear();
    auto r = run_suite(config);
    CHECK(r.results.empty());
    CHECK(r.green());
    auto j = nlohmann::json::parse(report(r, ReportFormat::json));
    CHECK(j["results"].empty());
    CHECK(report(r, ReportFormat::markdown).find("# Claim verification report") == 0);
}

TEST_CASE("an empty allowlist turns the known discrepancies red") {
    SuiteConfig config;
    config.families = {Family::local_chain};
    config.claims = {"C-2.2"};
    config.allowlist.clear();
    auto r = run_suite(config);
    CHECK(r.count(Verdict::discrepancy) > 0);
    CHECK(r.unknown_discrepancies() == r.count(Verdict::discrepancy));
    CHECK_FALSE(r.green());
}

TEST_CASE("a FAIL is never green") {
    SuiteResult r;
    CheckResult c;
    c.verdict = Verdict::fail;
    c.failed_parts = {"x"};
    r.results.push_back(c);
    CHECK_FALSE(r.green());
}

TEST_CASE("allowlist parsing") {
    auto list = parse_allowlist(R"([{"claim":"C-2.2","instance":"ring=8 module=8","parts":["center"],"reason":"r"}])");
    REQUIRE(list.size() == 1);
    CHECK(list[0].parts == std::vector<std::string>{"center"});
    CHECK_THROWS_AS(parse_allowlist("{"), Error);
    CHECK_THROWS_AS(parse_allowlist("{}"), Error);
    CHECK_THROWS_AS(parse_allowlist(R"([{"claim":"C-2.2"}])"), Error);
    CHECK_FALSE(default_allowlist().empty());
}

TEST_CASE("unknown claims are rejected") {
    SuiteConfig config;
    config.claims = {"C-9.9"};
    CHECK_THROWS_AS(run_suite(config), Error);
}

TEST_CASE("caps route instances to the skipped list") {
    SuiteConfig config;
    config.families = {Family::direct_sum_local};
    config.caps.max_submodules = 5;
    auto r = run_suite(config);
    CHECK_FALSE(r.skipped.empty());
    for (const auto& s : r.skipped) CHECK_FALSE(s.reason.empty());
}

}
