#include <gtest/gtest.h>

#include <random>

#include "askeyvs/ratfun.hpp"
#include "support.hpp"

using namespace askeyvs;
using P = DenseUniPoly;

namespace {

P s_poly(std::vector<Scalar> c) { return P(std::move(c), 's'); }

/// 1 - s^{2k}
P one_minus_q_pow(int k)
{
    std::vector<Scalar> c(static_cast<std::size_t>(2 * k) + 1, Scalar(0));
    c.front() = 1;
    c.back() = -1;
    return s_poly(c);
}

} // namespace

TEST(RatFun, CancelsCommonFactor)
{
    RatFun f = ratfun_reduce(s_poly({-1, 0, 1}), s_poly({-1, 1}));
    EXPECT_EQ(f, RatFun::from_poly(s_poly({1, 1})));
    EXPECT_EQ(f.den().degree(), 0);
}

TEST(RatFun, QIntegerTwo)
{
    RatFun f = ratfun_reduce(one_minus_q_pow(2), one_minus_q_pow(1));
    EXPECT_EQ(f, RatFun::from_poly(s_poly({1, 0, 1})));
}

TEST(RatFun, ZeroNumerator)
{
    RatFun f = ratfun_reduce(P('s'), s_poly({-1, 1}));
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f, RatFun(0));
}

TEST(RatFun, ZeroDenominator)
{
    try {
        (void)ratfun_reduce(s_poly({1}), P('s'));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroDenominator);
    }
}

TEST(RatFun, QIntegerLimits)
{
    for (int k = 1; k <= 12; ++k) {
        RatFun f = ratfun_reduce(one_minus_q_pow(k), one_minus_q_pow(1));
        EXPECT_EQ(f(Scalar(1)), Scalar(k)) << k;
    }
}

TEST(RatFun, QIntegerApproachesKNearOne)
{
    // Values at s = 1 +- 10^-m approach 3.
    RatFun f = ratfun_reduce(one_minus_q_pow(3), one_minus_q_pow(1));
    Scalar prev_err;
    for (int m = 1; m <= 6; ++m) {
        Scalar eps = Scalar(1) / ipow(Scalar(10), m);
        for (const Scalar& at : {Scalar(1) + eps, Scalar(1) - eps}) {
            Scalar err = f(at) - Scalar(3);
            EXPECT_LT(abs(err.re()), mpq_class(8) * mpq_class(eps.re())) << m;
        }
    }
}

TEST(RatFun, PoleAtPoint)
{
    RatFun f = ratfun_reduce(s_poly({1, 1}), s_poly({-1, 1}));
    try {
        (void)f(Scalar(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PoleAtPoint);
    }
}

TEST(RatFun, Constant)
{
    EXPECT_EQ(RatFun(5)(Scalar(7)), Scalar(5));
    EXPECT_EQ(RatFun(5)(testing_support::S("1/3+i")), Scalar(5));
}

TEST(RatFun, ReduceIdempotentAndValuePreserving)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> common{testing_support::random_rational(rng), 1};
        std::vector<Scalar> nc, dc;
        for (int i = 0; i < 3; ++i) {
            nc.push_back(testing_support::random_gaussian(rng));
            dc.push_back(testing_support::random_gaussian(rng));
        }
        dc.back() = 1;
        P num = s_poly(nc) * s_poly(common), den = s_poly(dc) * s_poly(common);
        RatFun f = ratfun_reduce(num, den);
        EXPECT_EQ(ratfun_reduce(f.num(), f.den()), f);
        for (int i = 0; i < 20; ++i) {
            Scalar at = testing_support::random_gaussian(rng);
            if (den(at).is_zero())
                continue;
            EXPECT_EQ(f(at), num(at) / den(at));
        }
    }
}

TEST(RatFun, FieldOperations)
{
    RatFun s = RatFun::variable('s');
    RatFun f = (s + RatFun(1)) / (s - RatFun(1));
    EXPECT_EQ(f * ((s - RatFun(1)) / (s + RatFun(1))), RatFun(1));
    EXPECT_EQ(f - f, RatFun(0));
    EXPECT_EQ((f + RatFun(1))(Scalar(3)), Scalar(3));
}
