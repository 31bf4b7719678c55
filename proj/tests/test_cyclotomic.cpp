#include <gtest/gtest.h>

#include <random>

#include "bf/cyclotomic.hpp"

using namespace bf;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(Ring(2), s); }

}  // namespace

TEST(PhiQ, Examples) {
    EXPECT_EQ(phi_q(2), ints({1, 1}));
    EXPECT_EQ(phi_q(3), ints({1, 1, 1}));
    EXPECT_EQ(phi_q(4), ints({1, 0, 1}));
    EXPECT_EQ(phi_q(9), ints({1, 0, 0, 1, 0, 0, 1}));
    EXPECT_THROW(phi_q(6), NotPrimePower);
}

TEST(CycIntMul, Examples) {
    EXPECT_EQ(cycint_mul(CycInt::zeta_pow(4, 1), CycInt::zeta_pow(4, 2), 4), -CycInt::zeta_pow(4, 1));
    const CycInt b(5, ints({3, -1, 0, 2}));
    EXPECT_EQ(cycint_mul(CycInt::from_integer(5, 1), b, 5), b);
    // zeta^2 = -1 - zeta in Z[zeta_3].
    EXPECT_EQ(cycint_mul(CycInt::zeta_pow(3, 1), CycInt::zeta_pow(3, 1), 3).coeffs(), ints({-1, -1}));
}

TEST(CycIntMul, LengthMismatch) {
    EXPECT_THROW(CycInt(3, ints({1, 2, 3})), DomainError);
    EXPECT_THROW(cycint_mul(CycInt::zeta_pow(3, 1), CycInt::zeta_pow(4, 1), 3), DomainError);
}

TEST(ZetaPow, PeriodicAndInverse) {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        EXPECT_EQ(CycInt::zeta_pow(q, q), CycInt::from_integer(q, 1));
        EXPECT_EQ(CycInt::zeta_pow(q, -1) * CycInt::zeta_pow(q, 1), CycInt::from_integer(q, 1));
        CycInt sum(q);
        for (int i = 0; i < q; ++i) sum = sum + CycInt::zeta_pow(q, i);
        EXPECT_TRUE(sum.is_zero()) << q;
    }
}

TEST(EvalRootOfUnity, Examples) {
    EXPECT_EQ(eval_root_of_unity(P("1-x"), 2, 1, 0), CycInt::from_integer(2, 2));
    EXPECT_TRUE(eval_root_of_unity(P("1+x+x^2"), 3, 1, 0).is_zero());
    EXPECT_EQ(eval_root_of_unity(P("5"), 3, 0, 0), CycInt::from_integer(3, 5));
    EXPECT_THROW(eval_root_of_unity(P("1-t"), 3, 1, 0), DomainError);
}

TEST(EvalRootOfUnity, IsRingHomomorphism) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd = [&] {
        std::vector<LaurentPoly::Term> ts;
        for (int i = 0; i < 4; ++i) {
            ExpVec e;
            e[0] = d(rng);
            e[1] = d(rng);
            ts.emplace_back(e, Integer(d(rng)));
        }
        return LaurentPoly::from_terms(Ring(2), ts);
    };
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly a = rnd(), b = rnd();
        for (int q : {3, 4, 5}) {
            const int ea = static_cast<int>(rng() % q), eb = static_cast<int>(rng() % q);
            ASSERT_EQ(eval_root_of_unity(a * b, q, ea, eb),
                      eval_root_of_unity(a, q, ea, eb) * eval_root_of_unity(b, q, ea, eb));
            ASSERT_EQ(eval_root_of_unity(a + b, q, ea, eb),
                      eval_root_of_unity(a, q, ea, eb) + eval_root_of_unity(b, q, ea, eb));
        }
    }
}
