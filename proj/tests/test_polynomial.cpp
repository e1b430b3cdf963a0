#include <gtest/gtest.h>

#include <projstab/exactcore/polynomial.hpp>

#include "support/generators.hpp"

using namespace projstab;

TEST(Polynomial, CanonicalPrinting)
{
    auto const k = var_k();
    auto const p = rational(-1, 24) * k * k + k - polynomial(2);
    EXPECT_EQ(p.str(), "-1/24*k^2 + k - 2");
    EXPECT_EQ(polynomial().str(), "0");
    EXPECT_EQ((var_i() * var_r() + pow(var_r(), 3)).str(), "r^3 + i*r");
}

TEST(Polynomial, CancellationLeavesNoZeroTerms)
{
    auto const p = var_i() * var_k() - var_k() * var_i();
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p, polynomial());
    EXPECT_TRUE(p.terms().empty());
}

TEST(Polynomial, CoefficientExtraction)
{
    auto const p = pow(var_r(), 3) * var_k() * 5 + var_r() * var_r() * 2 - polynomial(1);
    EXPECT_EQ(p.coefficient({0, 3, 1}), rational(5));
    EXPECT_EQ(p.coefficient_of(variable::r, 3), 5 * var_k());
    EXPECT_EQ(p.coefficient_of(variable::r, 0), polynomial(-1));
    EXPECT_EQ(p.degree(variable::r), 3u);
    EXPECT_EQ(p.total_degree(), 4u);
    EXPECT_FALSE(p.involves(variable::i));
}

TEST(Polynomial, SubstituteMatchesEvaluation)
{
    auto const p = var_i() * var_i() * var_r() - 3 * var_k();
    auto const q = p.substitute(variable::i, var_r() + polynomial(1));
    EXPECT_EQ(q.evaluate(rational(0), rational(2), rational(5)), rational(9 * 2 - 15));
}

TEST(Polynomial, RingAxiomsOnRandomValues)
{
    projstab::testing::generator gen(23);
    for (int n = 0; n < 100; ++n) {
        auto const a = gen.poly(5, 3, 3, 3, 20), b = gen.poly(5, 3, 3, 3, 20), c = gen.poly(5, 3, 3, 3, 20);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, polynomial());
        auto const x = gen.rat(10), y = gen.rat(10), z = gen.rat(10);
        EXPECT_EQ((a * b).evaluate(x, y, z), a.evaluate(x, y, z) * b.evaluate(x, y, z));
        EXPECT_EQ((a + c).evaluate(x, y, z), a.evaluate(x, y, z) + c.evaluate(x, y, z));
    }
}
