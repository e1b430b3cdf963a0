#include <gtest/gtest.h>

#include <projstab/exactcore/rational.hpp>

#include "support/generators.hpp"

using projstab::malformed_rational;
using projstab::rational;

TEST(Rational, StoresLowestTerms)
{
    rational const q(6, -4);
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(rational(10, 5).str(), "2");
    EXPECT_EQ(rational().str(), "0");
}

TEST(Rational, ZeroDenominatorThrows)
{
    EXPECT_THROW(rational(1, 0), std::domain_error);
    EXPECT_THROW(rational(1) / rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsSurfaceSyntax)
{
    EXPECT_EQ(rational::parse("-13/24"), rational(-13, 24));
    EXPECT_EQ(rational::parse("+7"), rational(7));
    EXPECT_EQ(rational::parse("4/6").str(), "2/3");
    EXPECT_EQ(rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsMalformedLiterals)
{
    for (auto const *bad : {"6/-2", "6/\xe2\x88\x92" "2", "1/0", "", "/3", "3/", "1.5", "a", "1//2", " 1", "--1"}) {
        EXPECT_THROW(rational::parse(bad), malformed_rational) << bad;
    }
}

TEST(Rational, FloorCeilAndOrder)
{
    EXPECT_EQ(rational(-7, 2).floor(), -4);
    EXPECT_EQ(rational(-7, 2).ceil(), -3);
    EXPECT_EQ(rational(7, 2).floor(), 3);
    EXPECT_EQ(rational(4).ceil(), 4);
    EXPECT_LT(rational(-1, 3), rational(-1, 4));
    EXPECT_EQ(rational(-2, 5).sign(), -1);
}

TEST(Rational, FieldAxiomsOnRandomValues)
{
    projstab::testing::generator gen(11);
    for (int n = 0; n < 200; ++n) {
        auto const a = gen.rat(1000), b = gen.rat(1000), c = gen.rat(1000);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        EXPECT_EQ(rational::parse(a.str()), a);
    }
}
