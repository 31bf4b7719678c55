#include "bf/probe.hpp"

#include <chrono>

namespace bf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string entry_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

// Accumulates verdicts into a report.
struct Tally {
    ClaimReport report;
    bool fail = false;
    bool unknown = false;
    int members = 0;
    int nonmembers = 0;
    int unknowns = 0;

    void widen(const Box& b) {
        if (b.window > report.box_used.window ||
            (b.window == report.box_used.window && b.contains(report.box_used))) {
            report.box_used = b;
        }
    }

    // A NonMember here refutes the claim.
    void expect_member(const std::string& subject, const std::string& entry, const MembershipVerdict& v) {
        SampleResult s{subject, entry, to_string(v.status()), {}, v.box()};
        switch (v.status()) {
            case Verdict::Member:
                ++members;
                s.note = std::to_string(v.witness().size()) + " witness terms";
                break;
            case Verdict::NonMember:
                ++nonmembers;
                fail = true;
                s.note = v.certificate()->str();
                break;
            case Verdict::Unknown:
                ++unknowns;
                unknown = true;
                s.note = v.reason();
                break;
        }
        widen(v.box());
        report.details.push_back(std::move(s));
    }

    void finish(Clock::time_point t0) {
        report.status = fold_status(fail, unknown);
        report.timing_ms = ms_since(t0);
    }
};

LaurentPoly cyc_x(int q) {
    const Ring ring(2);
    ExpVec e;
    e[0] = 1;
    return cyc_element(q, UnitMonomial(ring, 1, e));
}

}  // namespace

void ProbeConfig::validate() const {
    PrimePower::of(q);
    if (sample_count < 1) throw DomainError("sample count must be at least 1");
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    if (word_len < 1) throw DomainError("word length must be at least 1");
    if (commutator_len < 1 || depth_base_len < 1) throw DomainError("base word lengths must be at least 1");
    if (max_eval_len < 1) throw DomainError("evaluation length budget must be positive");
    if (box.d_unit < 0 || box.d_shift < 0 || box.window < 1) throw DomainError("box bounds must be nonnegative");
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "Pass";
        case ClaimStatus::Fail: return "Fail";
        case ClaimStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

ClaimStatus fold_status(bool any_fail, bool any_unknown) {
    if (any_fail) return ClaimStatus::Fail;
    if (any_unknown) return ClaimStatus::Inconclusive;
    return ClaimStatus::Pass;
}

BoundsResult class_bound(long long q) {
    const PrimePower pp = PrimePower::of(q);
    BoundsResult r;
    r.q = pp.q;
    r.p = pp.p;
    r.e = pp.e;
    r.rhs = pp.e * pp.phi() + 1;
    r.n = 0;
    while ((1LL << r.n) < r.rhs) ++r.n;
    return r;
}

MembershipVerdict ProbeContext::member(const LaurentPoly& p, const IdealSpec& spec, const ProbeConfig& cfg) const {
    MembershipVerdict v = eng().member(p, spec, cfg.box, cfg.auto_grow);
    if (sink) sink(p, spec, v);
    return v;
}

ClaimReport bounds_check(const ProbeConfig& cfg) {
    const auto t0 = Clock::now();
    ClaimReport r;
    r.claim_id = "bounds";
    r.box_used = cfg.box;
    const BoundsResult b = class_bound(cfg.q);
    const bool ok = (1LL << b.n) >= b.rhs && (b.n == 0 || (1LL << (b.n - 1)) < b.rhs);
    r.details.push_back({"q=" + std::to_string(b.q), {}, ok ? "Holds" : "Violated",
                         "p=" + std::to_string(b.p) + " e=" + std::to_string(b.e) + " rhs=" + std::to_string(b.rhs) +
                             " n=" + std::to_string(b.n),
                         std::nullopt});
    r.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    r.summary = "class bound n=" + std::to_string(b.n) + " for rhs=" + std::to_string(b.rhs);
    r.timing_ms = ms_since(t0);
    return r;
}

ClaimReport metabelian_check(const ProbeConfig& cfg) {
    cfg.validate();
    const auto t0 = Clock::now();
    ClaimReport r;
    r.claim_id = "metabelian";
    r.box_used = cfg.box;
    const GeneratorSet fr(GenSet::FR, 2);
    WordSampler sampler(cfg.seed);
    int bad = 0;
    for (int i = 0; i < cfg.sample_count; ++i) {
        std::vector<Word> w;
        for (int j = 0; j < 4; ++j) w.push_back(sampler.random_word(static_cast<std::size_t>(cfg.word_len), 2));
        const Word c = word_commutator(word_commutator(w[0], w[1]), word_commutator(w[2], w[3]));
        const bool is_i = eval_word(c, fr).is_identity();
        if (!is_i) ++bad;
        r.details.push_back({"[[" + w[0].str() + "," + w[1].str() + "],[" + w[2].str() + "," + w[3].str() + "]]", {},
                             is_i ? "Identity" : "NotIdentity", "over F(R)", std::nullopt});
    }
    // Over {M1, M2 T} the group is free, so the identity must fail somewhere.
    const GeneratorSet frt(GenSet::FRt, 2);
    const Word a = Word::letter(1), b = Word::letter(2);
    const Word control = word_commutator(word_commutator(a, b), word_commutator(a * b, b * a));
    const bool control_trivial = eval_word(control, frt).is_identity();
    r.details.push_back({"[[a,b],[ab,ba]]", {}, control_trivial ? "Identity" : "NotIdentity",
                         "negative control over F(R[t,t^-1])", std::nullopt});
    r.status = (bad == 0 && !control_trivial) ? ClaimStatus::Pass : ClaimStatus::Fail;
    r.summary = std::to_string(cfg.sample_count - bad) + "/" + std::to_string(cfg.sample_count) +
                " double commutators exactly I; control " + (control_trivial ? "unexpectedly I" : "differs from I");
    r.timing_ms = ms_since(t0);
    return r;
}

ClaimReport t_commute_check(const std::vector<int>& ks) {
    const auto t0 = Clock::now();
    ClaimReport r;
    r.claim_id = "t-commute";
    bool ok = true;
    for (int k : ks) {
        const bool c = check_T_commute(k);
        ok = ok && c;
        r.details.push_back({"k=" + std::to_string(k), {}, c ? "Commute" : "DoNotCommute", {}, std::nullopt});
    }
    r.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    r.summary = ok ? "T_i pairwise commute" : "some T_i fail to commute";
    r.timing_ms = ms_since(t0);
    return r;
}

MatR m1_power_closed_form(int j) {
    if (j < 0) throw DomainError("closed form needs j >= 0");
    const Ring ring(2);
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    LaurentPoly geo(ring);
    for (int i = 0; i < j; ++i) geo += LaurentPoly::variable(ring, 0, i);
    MatR m(ring);
    m(0, 0) = one;
    m(0, 1) = (one - LaurentPoly::variable(ring, 1)) * geo;
    m(1, 1) = LaurentPoly::variable(ring, 0, j);
    return m;
}

ClaimReport generator_order_check(const ProbeConfig& cfg, const ProbeContext& ctx) {
    cfg.validate();
    const auto t0 = Clock::now();
    Tally t;
    t.report.claim_id = "order";
    t.report.box_used = cfg.box;
    const Ring ring(2);
    const IdealSpec jq = IdealSpec::jq(cfg.q);
    const MatR m1 = generator_M(1, 2);
    const MatR id = MatR::identity(ring);

    MatR power = id;
    for (int j = 1; j <= cfg.q; ++j) {
        power = power * m1;
        if (!(power == m1_power_closed_form(j))) {
            t.fail = true;
            t.report.details.push_back({"M1^" + std::to_string(j), {}, "Differs", "closed form mismatch", std::nullopt});
        }
    }

    const MatR d = power - id;
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    const LaurentPoly cq = cyc_x(cfg.q);
    const LaurentPoly hand01 = (one - LaurentPoly::variable(ring, 1)) * cq;
    const LaurentPoly hand11 = -((one - LaurentPoly::variable(ring, 0)) * cq);
    if (!(d(0, 1) == hand01) || !(d(1, 1) == hand11) || !d(0, 0).is_zero() || !d(1, 0).is_zero()) {
        t.fail = true;
        t.report.details.push_back({"M1^q - I", {}, "Differs", "hand witnesses do not match", std::nullopt});
    }
    const std::string name = "M1^" + std::to_string(cfg.q) + " - I";
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) t.expect_member(name, entry_label(i, j), ctx.member(d(i, j), jq, cfg));
    }

    // Lower bound on the order: each proper power must be certified nontrivial.
    power = id;
    for (int j = 1; j < cfg.q; ++j) {
        power = power * m1;
        const MatR dj = power - id;
        const std::string label = "M1^" + std::to_string(j) + " - I";
        bool certified = false;
        bool all_member = true;
        std::string note;
        for (int a = 0; a < 2 && !certified; ++a) {
            for (int b = 0; b < 2 && !certified; ++b) {
                if (dj(a, b).is_zero()) continue;
                MembershipVerdict v = ctx.member(dj(a, b), jq, cfg);
                if (v.status() == Verdict::NonMember) {
                    certified = true;
                    note = entry_label(a, b) + " " + v.certificate()->str();
                } else if (v.status() == Verdict::Unknown) {
                    all_member = false;
                }
            }
        }
        if (certified) {
            t.report.details.push_back({label, {}, "NonMember", note, std::nullopt});
        } else if (all_member) {
            t.fail = true;
            t.report.details.push_back({label, {}, "Member", "every entry lies in J(q); order below q", std::nullopt});
        } else {
            t.unknown = true;
            t.report.details.push_back({label, {}, "Unknown", "no certificate fired", std::nullopt});
        }
    }
    t.finish(t0);
    t.report.summary = "M1 has order " + std::string(t.report.status == ClaimStatus::Pass ? "exactly " : "? ") +
                       std::to_string(cfg.q) + " in F(S)";
    return t.report;
}

ClaimReport exponent_commutator_check(const ProbeConfig& cfg, const ProbeContext& ctx, const std::vector<Word>& extra) {
    cfg.validate();
    const auto t0 = Clock::now();
    Tally t;
    t.report.claim_id = "exponent";
    t.report.box_used = cfg.box;
    const GeneratorSet gens(GenSet::FRt, 2);
    const IdealSpec jq = IdealSpec::jq(cfg.q, true);
    std::vector<Word> words = extra;
    for (Word& w : derived_sample(1, static_cast<std::size_t>(cfg.sample_count), cfg.seed,
                                  static_cast<std::size_t>(cfg.commutator_len), 2)) {
        words.push_back(std::move(w));
    }
    const MatR id = MatR::identity(gens.ring());
    for (const Word& w : words) {
        const MatR d = eval_word(w, gens).pow(static_cast<unsigned>(cfg.q)) - id;
        const std::string subject = "(" + (w.empty() ? std::string("1") : w.str()) + ")^" + std::to_string(cfg.q);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) t.expect_member(subject, entry_label(i, j), ctx.member(d(i, j), jq, cfg));
        }
    }
    t.finish(t0);
    const int total = t.members + t.nonmembers + t.unknowns;
    t.report.summary = std::to_string(words.size()) + " commutators, " + std::to_string(t.members) + "/" +
                       std::to_string(total) + " entries Member, unknown rate " + std::to_string(t.unknowns) + "/" +
                       std::to_string(total);
    return t.report;
}

ClaimReport square_check(const ProbeConfig& cfg, const ProbeContext& ctx) {
    cfg.validate();
    const auto t0 = Clock::now();
    Tally t;
    t.report.claim_id = "square";
    t.report.box_used = cfg.box;
    const GeneratorSet frt(GenSet::FRt, 2);
    const GeneratorSet fr(GenSet::FR, 2);
    const IdealSpec jq = IdealSpec::jq(cfg.q);
    WordSampler sampler(cfg.seed);
    int literal = 0;
    for (int n = 0; n < cfg.sample_count; ++n) {
        const Word w = sampler.random_word(static_cast<std::size_t>(cfg.word_len), 2);
        const MatR down_across = mat_set_t_one(eval_word(w, frt));
        const MatR across_down = eval_word(w, fr);
        const MatR diff = down_across - across_down;
        bool zero = true;
        for (const auto& e : diff.entries()) zero = zero && e.is_zero();
        if (zero) {
            ++literal;
            t.report.details.push_back({w.str(), {}, "Equal", "paths coincide exactly", std::nullopt});
            continue;
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) t.expect_member(w.str(), entry_label(i, j), ctx.member(diff(i, j), jq, cfg));
        }
    }
    t.finish(t0);
    t.report.summary = std::to_string(literal) + "/" + std::to_string(cfg.sample_count) +
                       " words with literally equal paths, the rest checked entrywise";
    return t.report;
}

ClaimReport prop1_entry_check() {
    const auto t0 = Clock::now();
    ClaimReport r;
    r.claim_id = "prop1";
    const Ring ring(2);
    const MatR m1 = generator_M(1, 2);
    const MatR m2 = generator_M(2, 2);
    bool ok = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto tr = m1(i, j).degree_range(ring.t_slot());
            const bool free = !m1(i, j).has_t() && tr.first == 0 && tr.second == 0;
            ok = ok && free;
            r.details.push_back({"M1", entry_label(i, j), free ? "t-degree 0" : "has t", m1(i, j).str(), std::nullopt});
        }
    }
    const LaurentPoly x = LaurentPoly::variable(ring, 0);
    const LaurentPoly y = LaurentPoly::variable(ring, 1);
    auto recover = [&](const std::string& what, const LaurentPoly& got, const LaurentPoly& want) {
        const bool hit = got == want;
        ok = ok && hit;
        r.details.push_back({what, {}, hit ? "Recovered" : "Missing", got.str(), std::nullopt});
    };
    recover("x from M1 (2,2)", m1(1, 1), x);
    recover("y from M2 (1,1)", m2(0, 0), y);
    recover("y from 1 - (1 - y) in M1", m1(0, 0) - m1(0, 1), y);
    const auto ux = m1(1, 1).as_unit();
    const auto uy = m2(0, 0).as_unit();
    recover("x^-1 by unit inversion", ux ? ux->inverse().to_poly() : LaurentPoly(ring), LaurentPoly::variable(ring, 0, -1));
    recover("y^-1 by unit inversion", uy ? uy->inverse().to_poly() : LaurentPoly(ring), LaurentPoly::variable(ring, 1, -1));

    const MatR m2t = GeneratorSet(GenSet::FRt, 2).gen(2);
    const bool contrast = m2t.has_t();
    r.details.push_back({"M2 T", {}, contrast ? "has t" : "t-free", m2t.str(), std::nullopt});
    ok = ok && contrast;
    r.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    r.summary = ok ? "M1 is t-free and the generator entries recover x, y and their inverses"
                   : "entry check failed";
    r.timing_ms = ms_since(t0);
    return r;
}

namespace {

struct LevelOutcome {
    ClaimReport report;
    bool all_member = true;
};

void check_trivial(Tally& t, const Word& w, const GeneratorSet& gens, const IdealSpec& spec, const ProbeConfig& cfg,
                   const ProbeContext& ctx) {
    if (w.length() > static_cast<std::size_t>(cfg.max_eval_len)) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                ++t.unknowns;
                t.report.details.push_back({w.str(), entry_label(i, j), "Unknown",
                                            "word longer than the evaluation budget of " +
                                                std::to_string(cfg.max_eval_len) + " letters",
                                            std::nullopt});
            }
        }
        return;
    }
    const MatR d = eval_word(w, gens) - MatR::identity(gens.ring());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            MembershipVerdict v = ctx.member(d(i, j), spec, cfg);
            SampleResult s{w.str(), entry_label(i, j), to_string(v.status()), {}, v.box()};
            if (v.status() == Verdict::Member) {
                ++t.members;
            } else if (v.status() == Verdict::NonMember) {
                ++t.nonmembers;
                s.note = v.certificate()->str();
            } else {
                ++t.unknowns;
                s.note = v.reason();
            }
            t.widen(v.box());
            t.report.details.push_back(std::move(s));
        }
    }
}

}  // namespace

DepthReport derived_depth_probe(const ProbeConfig& cfg, const ProbeContext& ctx) {
    cfg.validate();
    const auto t0 = Clock::now();
    DepthReport out;
    out.bound = class_bound(cfg.q);
    const GeneratorSet gens(GenSet::FRt, 2);
    const IdealSpec spec = IdealSpec::jq(cfg.q, true);
    const auto base = static_cast<std::size_t>(cfg.depth_base_len);
    const auto count = static_cast<std::size_t>(cfg.sample_count);

    for (int n = 1; n <= cfg.n_max && !out.n_star; ++n) {
        const auto tl = Clock::now();
        Tally t;
        t.report.claim_id = "derived-level-" + std::to_string(n);
        t.report.box_used = cfg.box;
        for (const Word& w : derived_sample(n, count, cfg.seed + static_cast<std::uint64_t>(n), base, 2)) {
            check_trivial(t, w, gens, spec, cfg, ctx);
        }
        // A NonMember here only says this level is not yet trivial.
        t.fail = t.nonmembers > 0;
        t.unknown = t.unknowns > 0;
        const bool trivial = t.nonmembers == 0 && t.unknowns == 0;
        t.finish(tl);
        t.report.summary = trivial ? "all samples trivial mod J(q)[t,t^-1]"
                                   : std::to_string(t.nonmembers) + " certified nontrivial entries, " +
                                         std::to_string(t.unknowns) + " unknown";
        if (trivial) out.n_star = n;
        out.per_level.push_back(std::move(t.report));
    }

    ClaimReport& overall = out.overall;
    overall.claim_id = "derived-depth";
    overall.box_used = cfg.box;
    for (const ClaimReport& l : out.per_level) {
        if (l.box_used.window > overall.box_used.window) overall.box_used = l.box_used;
        const char* label = l.status == ClaimStatus::Pass ? "Trivial"
                            : l.status == ClaimStatus::Fail ? "NotTrivial"
                                                            : "Unknown";
        overall.details.push_back({l.claim_id, {}, label, l.summary, l.box_used});
    }

    if (out.n_star) {
        // Level n_star + 1 as commutators of fresh level n_star pairs. The
        // congruence subgroup mod J(q) is normal, so trivial components give a
        // trivial commutator even when the product is too wide to test.
        const int n = *out.n_star;
        const auto tl = Clock::now();
        Tally t;
        t.report.claim_id = "derived-level-" + std::to_string(n + 1);
        t.report.box_used = cfg.box;
        WordSampler sampler(cfg.seed + 1000003ULL * static_cast<std::uint64_t>(n + 1));
        int confirmed = 0;
        for (std::size_t i = 0; i < count; ++i) {
            Word u, v, c;
            for (int attempt = 0; attempt < 1000 && c.empty(); ++attempt) {
                u = sampler.derived_word(n, base, 2);
                v = sampler.derived_word(n, base, 2);
                c = word_commutator(u, v);
            }
            if (c.empty()) throw DomainError("could not sample a nontrivial level " + std::to_string(n + 1) + " word");
            Tally direct;
            direct.report.box_used = cfg.box;
            check_trivial(direct, c, gens, spec, cfg, ctx);
            t.widen(direct.report.box_used);
            if (direct.nonmembers > 0) {
                t.fail = true;
                t.report.details.push_back({c.str(), {}, "NonMember", "level n_star + 1 sample not trivial",
                                            direct.report.box_used});
                continue;
            }
            if (direct.unknowns == 0) {
                ++confirmed;
                t.report.details.push_back({c.str(), {}, "Member", "direct", direct.report.box_used});
                continue;
            }
            Tally parts;
            parts.report.box_used = cfg.box;
            check_trivial(parts, u, gens, spec, cfg, ctx);
            check_trivial(parts, v, gens, spec, cfg, ctx);
            t.widen(parts.report.box_used);
            if (parts.nonmembers == 0 && parts.unknowns == 0) {
                ++confirmed;
                t.report.details.push_back({c.str(), {}, "Member",
                                            "by components: both commutator arguments trivial, direct test exceeded "
                                            "the window",
                                            parts.report.box_used});
            } else {
                t.unknown = true;
                t.report.details.push_back({c.str(), {}, "Unknown", "direct and component tests inconclusive",
                                            parts.report.box_used});
            }
        }
        t.finish(tl);
        t.report.summary = std::to_string(confirmed) + "/" + std::to_string(count) + " samples trivial";
        overall.details.push_back({t.report.claim_id, {}, t.report.status == ClaimStatus::Pass ? "Trivial" : "NotTrivial",
                                   t.report.summary, t.report.box_used});
        out.confirmation = std::move(t.report);
    }

    const std::string bound = "class_bound(" + std::to_string(cfg.q) + ") = " + std::to_string(out.bound.n);
    if (out.n_star) {
        overall.status = out.confirmation ? out.confirmation->status : ClaimStatus::Pass;
        overall.summary = "evidence: n_star = " + std::to_string(*out.n_star) + " (" + bound + ")";
    } else {
        // n_max is only a search cap, so a miss is never a refutation.
        overall.status = ClaimStatus::Inconclusive;
        overall.summary = "no trivial level up to n_max = " + std::to_string(cfg.n_max) + " (" + bound + ")";
    }
    overall.timing_ms = ms_since(t0);
    return out;
}

TheoremBReport theorem_b_probe(const ProbeConfig& cfg, const ProbeContext& ctx) {
    cfg.validate();
    const auto t0 = Clock::now();
    TheoremBReport out;
    out.bound = class_bound(cfg.q);
    out.powers = min_power_in_iq(cfg.q, out.bound.rhs, cfg.box, cfg.auto_grow, ctx.eng());
    ClaimReport& r = out.overall;
    r.claim_id = "theorem-b";
    r.box_used = cfg.box;
    bool ceiling_refuted = false;
    for (const auto& level : out.powers.levels) {
        int mem = 0, non = 0, unk = 0;
        std::string cert;
        for (const auto& [p, v] : level.verdicts) {
            if (ctx.sink) ctx.sink(p, IdealSpec::iq(cfg.q), v);
            if (v.box().window > r.box_used.window) r.box_used = v.box();
            if (v.status() == Verdict::Member) ++mem;
            if (v.status() == Verdict::NonMember) {
                ++non;
                if (cert.empty()) cert = p.str() + ": " + v.certificate()->str();
            }
            if (v.status() == Verdict::Unknown) ++unk;
        }
        if (level.m == out.bound.rhs && non > 0) ceiling_refuted = true;
        std::string note = std::to_string(mem) + " Member, " + std::to_string(non) + " NonMember, " +
                           std::to_string(unk) + " Unknown";
        if (!cert.empty()) note += "; e.g. " + cert;
        r.details.push_back({"Sigma^" + std::to_string(level.m), {}, level.all_member ? "Contained" : "NotContained",
                             note, std::nullopt});
    }
    if (out.powers.m_star && *out.powers.m_star <= out.bound.rhs) {
        r.status = ClaimStatus::Pass;
    } else if (ceiling_refuted) {
        r.status = ClaimStatus::Fail;
    } else {
        r.status = ClaimStatus::Inconclusive;
    }
    r.summary = (out.powers.m_star ? "m_star = " + std::to_string(*out.powers.m_star) : std::string("m_star not found")) +
                ", ceiling " + std::to_string(out.bound.rhs);
    r.timing_ms = ms_since(t0);
    return out;
}

}  // namespace bf
