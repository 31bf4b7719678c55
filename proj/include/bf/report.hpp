#pragma once

// JSON reports and the batch driver behind `bf verify`.
//
// Report schema:
//   {version, config, claims: [{claim_id, status, summary, details, box_used, timing_ms}],
//    summary: {pass, fail, inconclusive}, wall_time_ms}
// Integers that may exceed 64 bits are decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "bf/probe.hpp"

namespace bf {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunSummary {
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;

    bool operator==(const RunSummary&) const = default;
};

struct RunReport {
    std::string version = kToolVersion;
    nlohmann::json config = nlohmann::json::object();
    std::vector<ClaimReport> claims;
    RunSummary summary;
    double wall_time_ms = 0;

    void tally();
    // 0 all pass, 1 any fail, 2 inconclusive only.
    int exit_code() const;
};

nlohmann::json to_json(const Box& b);
Box box_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const MembershipVerdict& v);
nlohmann::json to_json(const SampleResult& s);
nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const ProbeConfig& c);

ClaimReport claim_from_json(const nlohmann::json& j);
RunReport run_report_from_json(const nlohmann::json& j);

// Drops wall-clock fields so two runs can be compared.
nlohmann::json strip_timing(nlohmann::json j);

std::string render_text(const RunReport& r);

// Claim names accepted by run_claims.
const std::vector<std::string>& claim_names();

// Runs the named claims ("all" expands to every claim). Throws DomainError on
// an unknown name.
RunReport run_claims(const std::vector<std::string>& names, const ProbeConfig& cfg, const ProbeContext& ctx = {});

}  // namespace bf
