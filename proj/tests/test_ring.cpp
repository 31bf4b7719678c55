#include <gtest/gtest.h>

#include <random>

#include "bf/ring.hpp"

using namespace bf;

namespace {

const Ring R2(2);

LaurentPoly P(const std::string& s, Ring r = R2) { return LaurentPoly::parse(r, s); }

ExpVec ev(int a, int b, int t = 0) {
    ExpVec e;
    e[0] = a;
    e[1] = b;
    e[2] = t;
    return e;
}

LaurentPoly random_poly(std::mt19937_64& rng, Ring ring, int terms = 4, int deg = 2) {
    std::uniform_int_distribution<int> d(-deg, deg);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<LaurentPoly::Term> ts;
    for (int i = 0; i < terms; ++i) {
        ExpVec e;
        for (int s = 0; s < ring.var_count(); ++s) e[s] = d(rng);
        ts.emplace_back(e, Integer(c(rng)));
    }
    return LaurentPoly::from_terms(ring, std::move(ts));
}

}  // namespace

TEST(PolyAdd, Examples) {
    EXPECT_TRUE(poly_add(P("1-x"), P("x-1")).is_zero());
    EXPECT_EQ(poly_add(P("1+x"), P("1+x")), P("2+2x"));
    EXPECT_EQ(poly_add(P("1-x"), P("1-y")), P("2-x-y"));
}

TEST(PolyMul, Examples) {
    EXPECT_TRUE(poly_mul(P("x"), P("x^-1")).is_one());
    EXPECT_EQ(poly_mul(P("1-x"), P("1+x")), P("1-x^2"));
    EXPECT_EQ(poly_mul(P("1-x"), P("1-y")), P("1-x-y+x*y"));
}

TEST(PolyOps, RingMismatchThrows) {
    const LaurentPoly a = P("1-x");
    const LaurentPoly b = LaurentPoly::parse(Ring(3), "1-z");
    EXPECT_THROW(poly_add(a, b), RingMismatch);
    EXPECT_THROW(poly_mul(a, b), RingMismatch);
}

TEST(Augmentation, Examples) {
    EXPECT_EQ(augmentation_eps(P("1-x")), 0);
    EXPECT_EQ(augmentation_eps(P("1+x+x^2")), 3);
    EXPECT_EQ(augmentation_eps(P("3*x^-1*y - 2")), 1);
}

TEST(SetTOne, Examples) {
    EXPECT_TRUE(set_t_one(P("1-t")).is_zero());
    EXPECT_EQ(set_t_one(P("t^2*x + (1-t^2)*x")), P("x"));
    EXPECT_EQ(set_t_one(P("1-x")), P("1-x"));
}

TEST(CycElement, Examples) {
    EXPECT_EQ(cyc_element(2, UnitMonomial(R2, 1, ev(1, 0))), P("1+x"));
    EXPECT_EQ(cyc_element(2, UnitMonomial::one(R2)), P("2"));
    EXPECT_EQ(cyc_element(3, UnitMonomial(R2, 1, ev(1, -1))), P("1 + x*y^-1 + x^2*y^-2"));
}

TEST(CycElement, Errors) {
    EXPECT_THROW(cyc_element(6, UnitMonomial(R2, 1, ev(1, 0))), NotPrimePower);
    EXPECT_THROW(cyc_element(2, UnitMonomial(R2, -1, ev(1, 0))), DomainError);
}

TEST(Parse, EmitsCanonicalOrder) {
    EXPECT_EQ(P("3*x^-2*y + 1 - t^2").str(), "1 - t^2 + 3*x^-2*y");
    EXPECT_EQ(P("0").str(), "0");
    EXPECT_EQ(P("(1-x)^2").str(), "1 - 2*x + x^2");
    EXPECT_EQ(P("x y").str(), "x*y");
}

TEST(Parse, Errors) {
    EXPECT_THROW(P("1 +"), ParseError);
    EXPECT_THROW(P("z"), ParseError);
    EXPECT_THROW(P("(1+x)^-1"), ParseError);
    EXPECT_THROW(P("(1+x"), ParseError);
}

TEST(Parse, RoundTripRandom) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly p = random_poly(rng, R2, 6, 3);
        EXPECT_EQ(P(p.str()), p) << p.str();
    }
}

TEST(Canonical, NoZeroCoefficients) {
    const LaurentPoly p = LaurentPoly::from_terms(R2, {{ev(1, 0), 2}, {ev(1, 0), -2}, {ev(0, 1), 0}});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
}

TEST(Canonical, GradedLexOrder) {
    const LaurentPoly p = P("x^-1 + t + y + x + 1 + x*y");
    std::vector<std::string> got;
    for (const auto& [e, c] : p.terms()) got.push_back(LaurentPoly::monomial(R2, e).str());
    EXPECT_EQ(got, (std::vector<std::string>{"1", "x", "y", "t", "x^-1", "x*y"}));
}

TEST(Unit, AsUnit) {
    auto u = P("-x^2*y^-1").as_unit();
    ASSERT_TRUE(u);
    EXPECT_EQ(u->sign(), -1);
    EXPECT_FALSE(u->positive());
    EXPECT_FALSE(P("2*x").as_unit());
    EXPECT_FALSE(P("1+x").as_unit());
    EXPECT_EQ((*u * u->inverse()).to_poly(), P("1"));
}

TEST(DivideByOneMinus, ExactAndInexact) {
    auto q = divide_by_one_minus(P("1 - x^3"), 0);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, P("1+x+x^2"));
    auto q2 = divide_by_one_minus(P("(1-y)*(x^-2 + 3*x*y)"), 1);
    ASSERT_TRUE(q2);
    EXPECT_EQ(*q2, P("x^-2 + 3*x*y"));
    EXPECT_FALSE(divide_by_one_minus(P("1 + x"), 0));
}

TEST(TCoefficients, Split) {
    const auto parts = t_coefficients(P("x + t*(1-y) - 2*t^-1"));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts.at(0), P("x"));
    EXPECT_EQ(parts.at(1), P("1-y"));
    EXPECT_EQ(parts.at(-1), P("-2"));
}

// Ring axioms and the augmentation / t -> 1 homomorphisms on random inputs.
TEST(Properties, RingAxiomsRandomized) {
    std::mt19937_64 rng(20240611);
    const Ring ring(2);
    const LaurentPoly zero(ring);
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    int cases = 0;
    for (int i = 0; i < 1200; ++i) {
        const LaurentPoly a = random_poly(rng, ring);
        const LaurentPoly b = random_poly(rng, ring);
        const LaurentPoly c = random_poly(rng, ring);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + zero, a);
        ASSERT_EQ(a * one, a);
        ASSERT_TRUE((a + (-a)).is_zero());
        ASSERT_EQ(a - b, a + (-b));
        ASSERT_EQ(augmentation_eps(a * b), augmentation_eps(a) * augmentation_eps(b));
        ASSERT_EQ(augmentation_eps(a + b), augmentation_eps(a) + augmentation_eps(b));
        ASSERT_EQ(set_t_one(a * b), set_t_one(a) * set_t_one(b));
        ASSERT_EQ(set_t_one(a + b), set_t_one(a) + set_t_one(b));
        ++cases;
    }
    EXPECT_GE(cases, 1000);
}

TEST(Properties, PowMatchesRepeatedProduct) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly a = random_poly(rng, R2, 3, 2);
        LaurentPoly acc = LaurentPoly::constant(R2, 1);
        for (unsigned n = 0; n < 5; ++n) {
            ASSERT_EQ(a.pow(n), acc);
            acc *= a;
        }
    }
}
