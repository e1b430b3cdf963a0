#include <gtest/gtest.h>

#include <projstab/exactcore/asymptotic.hpp>

#include "support/generators.hpp"

using namespace projstab;

TEST(AsymptoticSign, LeadingCoefficientDecides)
{
    auto const k = var_k();
    auto const big = pow(k, 3) - polynomial(1000000) * k * k;
    auto const res = asymptotic_sign(big);
    EXPECT_EQ(res.value, sign::positive);
    EXPECT_EQ(res.bound, rational(1000001));
}

TEST(AsymptoticSign, BoundIsAThreshold)
{
    auto const k = var_k();
    auto const f = rational(-1, 24) * k * k + k;
    auto const res = asymptotic_sign(f);
    EXPECT_EQ(res.value, sign::negative);
    EXPECT_EQ(res.bound, rational(25));
    EXPECT_LT(f.evaluate(0, 0, rational(25)), rational(0));
    EXPECT_GT(f.evaluate(0, 0, rational(23)), rational(0));
}

TEST(AsymptoticSign, ZeroAndConstants)
{
    EXPECT_EQ(asymptotic_sign(polynomial()).value, sign::zero);
    EXPECT_EQ(asymptotic_sign(polynomial()).bound, rational(0));
    EXPECT_EQ(asymptotic_sign(polynomial(rational(-2, 3))).value, sign::negative);
}

TEST(AsymptoticSign, RejectsOtherVariables)
{
    EXPECT_THROW(asymptotic_sign(var_r() + var_k()), std::invalid_argument);
    EXPECT_THROW(asymptotic_sign(var_i()), std::invalid_argument);
}

TEST(AsymptoticSign, SignHoldsBeyondBound)
{
    projstab::testing::generator gen(99);
    for (int n = 0; n < 100; ++n) {
        auto const f = gen.poly(6, 0, 0, 5, 50);
        auto const res = asymptotic_sign(f);
        auto const expected = f.is_zero() ? 0 : f.coefficient({0, 0, f.degree(variable::k)}).sign();
        EXPECT_EQ(static_cast<int>(res.value), expected);
        for (auto const &step : {rational(0), rational(1, 7), rational(1), rational(13), rational(1000)}) {
            EXPECT_EQ(f.evaluate(0, 0, res.bound + step).sign(), expected) << f;
        }
    }
}
