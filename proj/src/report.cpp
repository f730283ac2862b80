#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "annigraph/errors.hpp"
#include "annigraph/suite.hpp"

namespace annigraph {

namespace {

using nlohmann::ordered_json;

constexpr const char* kDefaultAllowlist =
#include "known_discrepancies.inc"
    ;

constexpr Verdict kVerdicts[] = {Verdict::pass, Verdict::fail, Verdict::discrepancy, Verdict::not_applicable};

ordered_json result_json(const CheckResult& r) {
    ordered_json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["family"] = family_name(r.family);
    j["hypotheses_met"] = r.hypotheses_met;
    j["hypotheses"] = r.hypotheses;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::discrepancy) j["known"] = r.known;
    j["failed_parts"] = r.failed_parts;
    j["evidence"] = r.evidence;
    return j;
}

std::string claim_name(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return c.name;
    return "";
}

// verdict counts per (claim, family)
using Matrix = std::map<std::string, std::map<Family, std::map<Verdict, std::size_t>>>;

Matrix coverage(const SuiteResult& s) {
    Matrix m;
    for (const auto& r : s.results) ++m[r.claim_id][r.family][r.verdict];
    return m;
}

std::vector<std::string> claims_in_scope(const SuiteConfig& config) {
    std::vector<std::string> out;
    for (const auto& c : claim_catalog())
        if (config.claims.empty() || std::find(config.claims.begin(), config.claims.end(), c.id) != config.claims.end())
            out.push_back(c.id);
    return out;
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::vector<AllowEntry> parse_allowlist(const std::string& json_text) {
    std::vector<AllowEntry> out;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("allowlist is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error("allowlist must be a JSON array");
    for (const auto& e : j) {
        try {
            AllowEntry a;
            a.claim = e.at("claim").get<std::string>();
            a.instance = e.at("instance").get<std::string>();
            a.parts = e.at("parts").get<std::vector<std::string>>();
            a.reason = e.value("reason", "");
            out.push_back(std::move(a));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(std::string("malformed allowlist entry: ") + ex.what());
        }
    }
    return out;
}

const std::vector<AllowEntry>& default_allowlist() {
    static const std::vector<AllowEntry> list = parse_allowlist(kDefaultAllowlist);
    return list;
}

std::size_t SuiteResult::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.verdict == v; }));
}

std::size_t SuiteResult::unknown_discrepancies() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) {
        return r.verdict == Verdict::discrepancy && !r.known;
    }));
}

bool SuiteResult::green() const { return count(Verdict::fail) == 0 && unknown_discrepancies() == 0; }

SuiteResult run_suite(const SuiteConfig& config) {
    for (const auto& id : config.claims) {
        bool known = std::any_of(claim_catalog().begin(), claim_catalog().end(),
                                 [&](const ClaimInfo& c) { return c.id == id; });
        if (!known) throw Error("unknown claim id '" + id + "'");
    }
    SuiteResult out;
    out.config = config;
    for (Family f : config.families)
        for (auto& inst : generate_family(f, config.budget)) out.instances.push_back(std::move(inst));

    const std::size_t count = out.instances.size();
    std::vector<std::vector<CheckResult>> results(count);
    std::vector<std::vector<SkippedCheck>> skipped(count);
    std::vector<ordered_json> facts(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            results[i] = check_instance(out.instances[i], config.claims, config, skipped[i], &facts[i]);
    };
    std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < count; ++i) {
        for (auto& r : results[i]) out.results.push_back(std::move(r));
        for (auto& s : skipped[i]) out.skipped.push_back(std::move(s));
        if (!facts[i].is_null()) out.instance_facts.push_back(std::move(facts[i]));
    }
    return out;
}

std::string report(const SuiteResult& s, ReportFormat format) {
    const auto matrix = coverage(s);
    const auto claims = claims_in_scope(s.config);

    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema"] = "annigraph-suite/1";
        ordered_json fams = ordered_json::array();
        for (Family f : s.config.families) fams.push_back(family_name(f));
        j["config"] = {{"families", fams},
                       {"budget", s.config.budget},
                       {"claims", claims},
                       {"exact_cap", s.config.exact_cap},
                       {"max_module_size", s.config.caps.max_module_size},
                       {"max_submodules", s.config.caps.max_submodules}};
        ordered_json summary;
        for (Verdict v : kVerdicts) summary[std::string(verdict_name(v))] = s.count(v);
        summary["known_discrepancies"] = s.count(Verdict::discrepancy) - s.unknown_discrepancies();
        summary["unknown_discrepancies"] = s.unknown_discrepancies();
        summary["skipped"] = s.skipped.size();
        summary["green"] = s.green();
        j["summary"] = summary;

        ordered_json cov = ordered_json::array();
        for (const auto& id : claims) {
            ordered_json row;
            row["claim_id"] = id;
            row["name"] = claim_name(id);
            ordered_json per = ordered_json::object();
            for (Family f : s.config.families) {
                ordered_json cell;
                auto it = matrix.find(id);
                for (Verdict v : kVerdicts) {
                    std::size_t n = 0;
                    if (it != matrix.end())
                        if (auto ft = it->second.find(f); ft != it->second.end())
                            if (auto vt = ft->second.find(v); vt != ft->second.end()) n = vt->second;
                    cell[std::string(verdict_name(v))] = n;
                }
                per[std::string(family_name(f))] = cell;
            }
            row["families"] = per;
            cov.push_back(row);
        }
        j["coverage"] = cov;
        ordered_json oos = ordered_json::array();
        for (const auto& [id, why] : out_of_scope_claims()) oos.push_back({{"claim_id", id}, {"reason", why}});
        j["out_of_scope"] = oos;
        j["instances"] = s.instance_facts;
        ordered_json sk = ordered_json::array();
        for (const auto& k : s.skipped)
            sk.push_back({{"claim_id", k.claim_id.empty() ? ordered_json(nullptr) : ordered_json(k.claim_id)},
                          {"instance", k.instance},
                          {"reason", k.reason}});
        j["skipped"] = sk;
        ordered_json res = ordered_json::array();
        for (const auto& r : s.results) res.push_back(result_json(r));
        j["results"] = res;
        return j.dump(2) + "\n";
    }

    std::ostringstream md;
    md << "# Claim verification report\n\n";
    md << "Budget " << s.config.budget << ", exact cap " << s.config.exact_cap << ", " << s.instances.size()
       << " instances.\n\n";
    md << "| verdict | count |\n|---|---|\n";
    for (Verdict v : kVerdicts) md << "| " << verdict_name(v) << " | " << s.count(v) << " |\n";
    md << "| unknown DISCREPANCY | " << s.unknown_discrepancies() << " |\n";
    md << "| skipped | " << s.skipped.size() << " |\n\n";

    md << "## Coverage\n\nCells are PASS/FAIL/DISCREPANCY/NOT_APPLICABLE counts.\n\n| claim | name |";
    for (Family f : s.config.families) md << ' ' << family_name(f) << " |";
    md << "\n|---|---|";
    for (std::size_t i = 0; i < s.config.families.size(); ++i) md << "---|";
    md << "\n";
    for (const auto& id : claims) {
        md << "| " << id << " | " << claim_name(id) << " |";
        for (Family f : s.config.families) {
            md << ' ';
            auto it = matrix.find(id);
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t n = 0;
                if (it != matrix.end())
                    if (auto ft = it->second.find(f); ft != it->second.end())
                        if (auto vt = ft->second.find(kVerdicts[k]); vt != ft->second.end()) n = vt->second;
                md << (k ? "/" : "") << n;
            }
            md << " |";
        }
        md << "\n";
    }
    for (const auto& [id, why] : out_of_scope_claims()) md << "| " << id << " | out of scope: " << why << " |\n";

    auto findings = [&](Verdict v, const char* title) {
        bool any = false;
        for (const auto& r : s.results) {
            if (r.verdict != v) continue;
            if (!any) md << "\n## " << title << "\n";
            any = true;
            md << "\n### " << r.claim_id << " on `" << r.instance << "`";
            if (v == Verdict::discrepancy) md << (r.known ? " (known)" : " (unknown)");
            md << "\n\n- hypotheses: " << md_escape(r.hypotheses) << "\n- expected: " << md_escape(r.expected)
               << "\n- computed: " << md_escape(r.computed) << "\n- failed parts:";
            for (const auto& p : r.failed_parts) md << ' ' << p;
            md << "\n\n```json\n" << r.evidence.dump(2) << "\n```\n";
        }
    };
    findings(Verdict::fail, "Failures");
    findings(Verdict::discrepancy, "Discrepancies");

    if (!s.skipped.empty()) {
        md << "\n## Skipped\n\n";
        for (const auto& k : s.skipped)
            md << "- " << (k.claim_id.empty() ? "all claims" : k.claim_id) << " on `" << k.instance
               << "`: " << md_escape(k.reason) << "\n";
    }
    return md.str();
}

}  // namespace annigraph
