#include <gtest/gtest.h>

#include "bf/errors.hpp"
#include "bf/probe.hpp"

using namespace bf;

namespace {

ProbeConfig cfg_for(int q) {
    ProbeConfig c;
    c.q = q;
    return c;
}

struct Collected {
    LaurentPoly p;
    IdealSpec spec;
    MembershipVerdict v;
};

ProbeContext collecting(std::vector<Collected>& out) {
    ProbeContext ctx;
    ctx.sink = [&out](const LaurentPoly& p, const IdealSpec& s, const MembershipVerdict& v) { out.push_back({p, s, v}); };
    return ctx;
}

int count_verdict(const ClaimReport& r, const std::string& v) {
    int n = 0;
    for (const auto& d : r.details) n += d.verdict == v;
    return n;
}

}  // namespace

TEST(ClassBound, Table) {
    const std::vector<std::array<int, 5>> rows{
        {2, 2, 1, 2, 1}, {3, 3, 1, 3, 2}, {4, 2, 2, 5, 3}, {5, 5, 1, 5, 3}, {8, 2, 3, 13, 4}, {9, 3, 2, 13, 4}};
    for (const auto& [q, p, e, rhs, n] : rows) {
        const BoundsResult b = class_bound(q);
        EXPECT_EQ(b.p, p) << q;
        EXPECT_EQ(b.e, e) << q;
        EXPECT_EQ(b.rhs, rhs) << q;
        EXPECT_EQ(b.n, n) << q;
    }
    EXPECT_THROW(class_bound(6), NotPrimePower);
    EXPECT_THROW(class_bound(1), NotPrimePower);
}

TEST(ClassBound, TwoSidedInequalityUpTo64) {
    for (int q = 2; q <= 64; ++q) {
        int p = 2;
        while (q % p != 0) ++p;
        int r = q;
        while (r % p == 0) r /= p;
        if (r != 1) {
            EXPECT_THROW(class_bound(q), NotPrimePower) << q;
            continue;
        }
        const BoundsResult b = class_bound(q);
        EXPECT_LT(1LL << (b.n - 1), b.rhs) << q;
        EXPECT_LE(b.rhs, 1LL << b.n) << q;
    }
}

TEST(ProbeConfig, Validation) {
    ProbeConfig c = cfg_for(6);
    EXPECT_THROW(c.validate(), NotPrimePower);
    c = cfg_for(2);
    c.sample_count = 0;
    EXPECT_THROW(c.validate(), DomainError);
    EXPECT_THROW(derived_depth_probe(c), DomainError);
    EXPECT_NO_THROW(cfg_for(3).validate());
}

TEST(BoundsCheck, PassesForPrimePowers) {
    EXPECT_EQ(bounds_check(cfg_for(9)).status, ClaimStatus::Pass);
    EXPECT_THROW(bounds_check(cfg_for(6)), NotPrimePower);
}

TEST(Metabelian, PassWithNegativeControl) {
    ProbeConfig c = cfg_for(2);
    c.sample_count = 50;
    const ClaimReport r = metabelian_check(c);
    EXPECT_EQ(r.status, ClaimStatus::Pass);
    EXPECT_EQ(count_verdict(r, "Identity"), 50);
    EXPECT_EQ(count_verdict(r, "NotIdentity"), 1);
}

TEST(TCommute, Pass) { EXPECT_EQ(t_commute_check().status, ClaimStatus::Pass); }

TEST(Prop1, Pass) {
    const ClaimReport r = prop1_entry_check();
    EXPECT_EQ(r.status, ClaimStatus::Pass);
    EXPECT_EQ(count_verdict(r, "has t"), 1);
}

TEST(GeneratorOrder, ClosedForm) {
    const GeneratorSet fr(GenSet::FR, 2);
    MatR acc = MatR::identity(Ring(2));
    for (int j = 1; j <= 5; ++j) {
        acc = acc * fr.gen(1);
        EXPECT_EQ(m1_power_closed_form(j), acc) << j;
    }
}

TEST(GeneratorOrder, PassForSmallQ) {
    for (int q : {2, 3, 4}) {
        std::vector<Collected> seen;
        const ClaimReport r = generator_order_check(cfg_for(q), collecting(seen));
        EXPECT_EQ(r.status, ClaimStatus::Pass) << q;
        EXPECT_GE(count_verdict(r, "NonMember"), q - 1);
        for (const auto& c : seen) {
            if (c.v.status() == Verdict::NonMember) {
                EXPECT_TRUE(verify_certificate(c.p, c.spec, *c.v.certificate()));
            } else if (c.v.status() == Verdict::Member) {
                EXPECT_EQ(recombine(c.v.witness(), c.p.ring()), c.p);
            }
        }
    }
}

TEST(GeneratorOrder, Q3FirstPowerUsesRootOfUnity) {
    const ClaimReport r = generator_order_check(cfg_for(3));
    bool found = false;
    for (const auto& d : r.details) {
        if (d.subject == "M1^1 - I" && d.verdict == "NonMember") found = d.note.find("RootOfUnity") != std::string::npos;
    }
    EXPECT_TRUE(found);
}

TEST(Exponent, CommutatorAtQ2) {
    std::vector<Collected> seen;
    const ClaimReport r = exponent_commutator_check(cfg_for(2), collecting(seen), {parse_word("[a,b]", 2), Word()});
    EXPECT_EQ(r.status, ClaimStatus::Pass);
    EXPECT_EQ(count_verdict(r, "Unknown"), 0);
    EXPECT_EQ(count_verdict(r, "NonMember"), 0);
    for (const auto& c : seen) {
        ASSERT_EQ(c.v.status(), Verdict::Member);
        EXPECT_EQ(recombine(c.v.witness(), c.p.ring()), c.p);
    }
}

TEST(Exponent, FailAtQ4CarriesCheckableCertificates) {
    ProbeConfig c = cfg_for(4);
    c.sample_count = 3;
    std::vector<Collected> seen;
    const ClaimReport r = exponent_commutator_check(c, collecting(seen), {parse_word("[a,b]", 2)});
    ASSERT_EQ(r.status, ClaimStatus::Fail);
    int certs = 0;
    for (const auto& s : seen) {
        if (s.v.status() != Verdict::NonMember) continue;
        ++certs;
        EXPECT_TRUE(verify_certificate(s.p, s.spec, *s.v.certificate()));
    }
    EXPECT_GT(certs, 0);
}

TEST(Square, PassAtQ2) {
    ProbeConfig c = cfg_for(2);
    c.sample_count = 30;
    const ClaimReport r = square_check(c);
    EXPECT_EQ(r.status, ClaimStatus::Pass);
}

TEST(Square, TFreeWordsCoincideLiterally) {
    const GeneratorSet fr(GenSet::FR, 2), frt(GenSet::FRt, 2);
    for (const char* w : {"a", "b", "[a,b]^2", "abAB"}) {
        const Word word = parse_word(w, 2);
        EXPECT_EQ(mat_set_t_one(eval_word(word, frt)), eval_word(word, fr)) << w;
    }
}

TEST(TheoremB, Values) {
    const TheoremBReport r2 = theorem_b_probe(cfg_for(2));
    EXPECT_EQ(r2.powers.m_star, 1);
    EXPECT_EQ(r2.overall.status, ClaimStatus::Pass);
    const TheoremBReport r3 = theorem_b_probe(cfg_for(3));
    ASSERT_TRUE(r3.powers.m_star);
    EXPECT_LE(*r3.powers.m_star, 3);
    EXPECT_EQ(r3.overall.status, ClaimStatus::Pass);
}

TEST(DerivedDepth, EvidenceAtQ2) {
    ProbeConfig c = cfg_for(2);
    c.sample_count = 10;
    const DepthReport r = derived_depth_probe(c);
    ASSERT_TRUE(r.n_star);
    EXPECT_LE(*r.n_star, 4);
    EXPECT_EQ(r.bound.n, 1);
    EXPECT_EQ(r.overall.status, ClaimStatus::Pass);
    ASSERT_TRUE(r.confirmation);
    EXPECT_EQ(r.confirmation->status, ClaimStatus::Pass);
    // Level one is certified nontrivial.
    EXPECT_EQ(r.per_level.front().status, ClaimStatus::Fail);
}

TEST(Reports, DeterministicUnderSeed) {
    ProbeConfig c = cfg_for(3);
    c.sample_count = 5;
    const ClaimReport a = exponent_commutator_check(c), b = exponent_commutator_check(c);
    ASSERT_EQ(a.details.size(), b.details.size());
    for (std::size_t i = 0; i < a.details.size(); ++i) {
        EXPECT_EQ(a.details[i].subject, b.details[i].subject);
        EXPECT_EQ(a.details[i].verdict, b.details[i].verdict);
        EXPECT_EQ(a.details[i].note, b.details[i].note);
    }
    c.seed = 2;
    const ClaimReport d = exponent_commutator_check(c);
    bool differs = false;
    for (std::size_t i = 0; i < std::min(a.details.size(), d.details.size()); ++i) {
        differs = differs || a.details[i].subject != d.details[i].subject;
    }
    EXPECT_TRUE(differs);
}

TEST(FoldStatus, Rules) {
    EXPECT_EQ(fold_status(false, false), ClaimStatus::Pass);
    EXPECT_EQ(fold_status(false, true), ClaimStatus::Inconclusive);
    EXPECT_EQ(fold_status(true, true), ClaimStatus::Fail);
}
