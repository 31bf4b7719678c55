#include <gtest/gtest.h>

#include "bf/errors.hpp"
#include "bf/report.hpp"

using namespace bf;

namespace {

ClaimReport claim(const std::string& id, ClaimStatus s) {
    ClaimReport r;
    r.claim_id = id;
    r.status = s;
    r.summary = "synthetic";
    r.box_used = Box{2, 3, 6};
    r.timing_ms = 12.5;
    r.details.push_back({"[a,b]", "(1,2)", "Member", "", Box{1, 1, 4}});
    r.details.push_back({"M1^1 - I", "", "NonMember", "AugmentationValue(1)", std::nullopt});
    return r;
}

RunReport report_of(std::vector<ClaimReport> claims) {
    RunReport r;
    r.claims = std::move(claims);
    r.tally();
    return r;
}

}  // namespace

TEST(ReportJson, ClaimRoundTrip) {
    const ClaimReport c = claim("order", ClaimStatus::Inconclusive);
    const nlohmann::json j = to_json(c);
    EXPECT_EQ(j.at("status"), "Inconclusive");
    EXPECT_EQ(to_json(claim_from_json(nlohmann::json::parse(j.dump()))), j);
}

TEST(ReportJson, RunRoundTrip) {
    RunReport r = report_of({claim("bounds", ClaimStatus::Pass), claim("exponent", ClaimStatus::Fail)});
    r.config = to_json(ProbeConfig{});
    r.wall_time_ms = 99;
    const nlohmann::json j = to_json(r);
    EXPECT_EQ(to_json(run_report_from_json(nlohmann::json::parse(j.dump()))), j);
    EXPECT_TRUE(j.at("config").at("seed").is_string());
}

TEST(ReportJson, CertificatesUseDecimalStrings) {
    Certificate c;
    c.value = Integer("123456789012345678901234567890");
    c.modulus = 0;
    const nlohmann::json j = to_json(c);
    EXPECT_EQ(j.at("value"), "123456789012345678901234567890");
    EXPECT_EQ(j.at("kind"), "AugmentationValue");

    Certificate r;
    r.kind = Certificate::Kind::RootOfUnity;
    r.q = 3;
    r.a = 1;
    r.image = CycInt::zeta_pow(3, 1);
    r.t_power = -2;
    const nlohmann::json jr = to_json(r);
    EXPECT_EQ(jr.at("image"), nlohmann::json::array({"0", "1"}));
    EXPECT_EQ(jr.at("t_power"), -2);
}

TEST(RunReport, TallyAndExitCodes) {
    EXPECT_EQ(report_of({claim("a", ClaimStatus::Pass)}).exit_code(), 0);
    EXPECT_EQ(report_of({}).exit_code(), 0);
    const RunReport inc = report_of({claim("a", ClaimStatus::Pass), claim("b", ClaimStatus::Inconclusive)});
    EXPECT_EQ(inc.summary, (RunSummary{1, 0, 1}));
    EXPECT_EQ(inc.exit_code(), 2);
    const RunReport fail = report_of({claim("a", ClaimStatus::Inconclusive), claim("b", ClaimStatus::Fail)});
    EXPECT_EQ(fail.summary, (RunSummary{0, 1, 1}));
    EXPECT_EQ(fail.exit_code(), 1);
}

TEST(RunClaims, NamesAndExpansion) {
    EXPECT_THROW(run_claims({"nonsense"}, ProbeConfig{}), DomainError);
    const RunReport r = run_claims({"bounds", "prop1", "t-commute"}, ProbeConfig{});
    ASSERT_EQ(r.claims.size(), 3u);
    EXPECT_EQ(r.summary, (RunSummary{3, 0, 0}));
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_EQ(r.config.at("claims"), nlohmann::json::array({"bounds", "prop1", "t-commute"}));
    EXPECT_EQ(claim_names().size(), 9u);
}

TEST(RunClaims, DeterministicJsonUnderSeed) {
    ProbeConfig cfg;
    cfg.seed = 7;
    const std::vector<std::string> names{"metabelian", "order", "exponent", "square"};
    const nlohmann::json a = strip_timing(to_json(run_claims(names, cfg)));
    const nlohmann::json b = strip_timing(to_json(run_claims(names, cfg)));
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_FALSE(a.contains("wall_time_ms"));
    EXPECT_FALSE(a.at("claims").at(0).contains("timing_ms"));
}

TEST(RenderText, OneLinePerClaimAndSummary) {
    const std::string text = render_text(report_of({claim("bounds", ClaimStatus::Pass), claim("exponent", ClaimStatus::Fail)}));
    EXPECT_NE(text.find("Pass  bounds  synthetic"), std::string::npos);
    EXPECT_NE(text.find("Fail  exponent"), std::string::npos);
    EXPECT_NE(text.find("pass 1, fail 1, inconclusive 0"), std::string::npos);
}
