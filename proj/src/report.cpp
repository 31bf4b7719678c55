#include "bf/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace bf {

using nlohmann::json;

void RunReport::tally() {
    summary = {};
    for (const ClaimReport& c : claims) {
        switch (c.status) {
            case ClaimStatus::Pass: ++summary.pass; break;
            case ClaimStatus::Fail: ++summary.fail; break;
            case ClaimStatus::Inconclusive: ++summary.inconclusive; break;
        }
    }
}

int RunReport::exit_code() const {
    if (summary.fail > 0) return 1;
    if (summary.inconclusive > 0) return 2;
    return 0;
}

json to_json(const Box& b) { return {{"d_unit", b.d_unit}, {"d_shift", b.d_shift}, {"window", b.window}}; }

Box box_from_json(const json& j) {
    return Box{j.at("d_unit").get<int>(), j.at("d_shift").get<int>(), j.at("window").get<int>()};
}

json to_json(const Certificate& c) {
    json j;
    if (c.kind == Certificate::Kind::AugmentationValue) {
        j["kind"] = "AugmentationValue";
        j["value"] = to_decimal(c.value);
        j["modulus"] = to_decimal(c.modulus);
    } else {
        j["kind"] = "RootOfUnity";
        j["q"] = c.q;
        j["a"] = c.a;
        j["b"] = c.b;
        json coeffs = json::array();
        if (c.image) {
            for (const Integer& v : c.image->coeffs()) coeffs.push_back(to_decimal(v));
        }
        j["image"] = std::move(coeffs);
    }
    if (c.t_power) j["t_power"] = *c.t_power;
    j["text"] = c.str();
    return j;
}

json to_json(const MembershipVerdict& v) {
    json j;
    j["status"] = to_string(v.status());
    j["box"] = to_json(v.box());
    if (v.status() == Verdict::Member) {
        json w = json::array();
        for (const WitnessTerm& t : v.witness()) {
            w.push_back({{"generator", t.generator}, {"shift", t.shift.str()}, {"coeff", to_decimal(t.coeff)}});
        }
        j["witness"] = std::move(w);
    }
    if (v.certificate()) j["certificate"] = to_json(*v.certificate());
    if (!v.reason().empty()) j["reason"] = v.reason();
    return j;
}

json to_json(const SampleResult& s) {
    json j{{"subject", s.subject}, {"verdict", s.verdict}};
    if (!s.entry.empty()) j["entry"] = s.entry;
    if (!s.note.empty()) j["note"] = s.note;
    if (s.box) j["box"] = to_json(*s.box);
    return j;
}

json to_json(const ClaimReport& r) {
    json details = json::array();
    for (const SampleResult& s : r.details) details.push_back(to_json(s));
    return {{"claim_id", r.claim_id}, {"status", to_string(r.status)}, {"summary", r.summary},
            {"details", std::move(details)}, {"box_used", to_json(r.box_used)}, {"timing_ms", r.timing_ms}};
}

json to_json(const ProbeConfig& c) {
    return {{"q", c.q},
            {"box", to_json(c.box)},
            {"auto_grow", c.auto_grow},
            {"seed", std::to_string(c.seed)},
            {"samples", c.sample_count},
            {"n_max", c.n_max},
            {"word_len", c.word_len},
            {"commutator_len", c.commutator_len},
            {"depth_base_len", c.depth_base_len},
            {"max_eval_len", c.max_eval_len}};
}

json to_json(const RunReport& r) {
    json claims = json::array();
    for (const ClaimReport& c : r.claims) claims.push_back(to_json(c));
    return {{"version", r.version},
            {"config", r.config},
            {"claims", std::move(claims)},
            {"summary", {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"inconclusive", r.summary.inconclusive}}},
            {"wall_time_ms", r.wall_time_ms}};
}

namespace {

ClaimStatus status_from(const std::string& s) {
    if (s == "Pass") return ClaimStatus::Pass;
    if (s == "Fail") return ClaimStatus::Fail;
    if (s == "Inconclusive") return ClaimStatus::Inconclusive;
    throw ParseError("unknown claim status: " + s);
}

}  // namespace

ClaimReport claim_from_json(const json& j) {
    ClaimReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.status = status_from(j.at("status").get<std::string>());
    r.summary = j.value("summary", "");
    for (const json& d : j.at("details")) {
        SampleResult s;
        s.subject = d.at("subject").get<std::string>();
        s.verdict = d.at("verdict").get<std::string>();
        s.entry = d.value("entry", "");
        s.note = d.value("note", "");
        if (d.contains("box")) s.box = box_from_json(d.at("box"));
        r.details.push_back(std::move(s));
    }
    r.box_used = box_from_json(j.at("box_used"));
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

RunReport run_report_from_json(const json& j) {
    RunReport r;
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    for (const json& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
    const json& s = j.at("summary");
    r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("inconclusive").get<int>()};
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

json strip_timing(json j) {
    j.erase("wall_time_ms");
    if (j.contains("claims")) {
        for (json& c : j["claims"]) c.erase("timing_ms");
    }
    return j;
}

std::string render_text(const RunReport& r) {
    std::ostringstream out;
    for (const ClaimReport& c : r.claims) {
        out << to_string(c.status) << "  " << c.claim_id << "  " << c.summary << "  [" << c.box_used.str() << "]\n";
        for (const SampleResult& s : c.details) {
            if (c.status == ClaimStatus::Pass && s.verdict == "Member") continue;
            out << "    " << s.verdict << "  " << s.subject;
            if (!s.entry.empty()) out << " " << s.entry;
            if (!s.note.empty()) out << "  " << s.note;
            out << "\n";
        }
    }
    out << "pass " << r.summary.pass << ", fail " << r.summary.fail << ", inconclusive " << r.summary.inconclusive
        << "\n";
    return out.str();
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names{"bounds",   "prop1",  "t-commute", "metabelian", "order",
                                                "exponent", "square", "theorem-b", "derived-depth"};
    return names;
}

RunReport run_claims(const std::vector<std::string>& names_in, const ProbeConfig& cfg, const ProbeContext& ctx) {
    cfg.validate();
    std::vector<std::string> names;
    for (const std::string& n : names_in) {
        if (n == "all") {
            names.insert(names.end(), claim_names().begin(), claim_names().end());
        } else if (std::find(claim_names().begin(), claim_names().end(), n) == claim_names().end()) {
            throw DomainError("unknown claim: " + n);
        } else {
            names.push_back(n);
        }
    }
    if (names.empty()) names = claim_names();

    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.config = to_json(cfg);
    std::vector<std::string> done;
    for (const std::string& n : names) {
        if (std::find(done.begin(), done.end(), n) != done.end()) continue;
        done.push_back(n);
        if (n == "bounds") report.claims.push_back(bounds_check(cfg));
        if (n == "prop1") report.claims.push_back(prop1_entry_check());
        if (n == "t-commute") report.claims.push_back(t_commute_check());
        if (n == "metabelian") report.claims.push_back(metabelian_check(cfg));
        if (n == "order") report.claims.push_back(generator_order_check(cfg, ctx));
        if (n == "exponent") report.claims.push_back(exponent_commutator_check(cfg, ctx, {parse_word("[a,b]", 2)}));
        if (n == "square") report.claims.push_back(square_check(cfg, ctx));
        if (n == "theorem-b") report.claims.push_back(theorem_b_probe(cfg, ctx).overall);
        if (n == "derived-depth") report.claims.push_back(derived_depth_probe(cfg, ctx).overall);
    }
    report.config["claims"] = done;
    report.tally();
    report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace bf
