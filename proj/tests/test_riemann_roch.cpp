#include <gtest/gtest.h>

#include <projstab/chern/riemann_roch.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace projstab;

namespace
{

ns_class cls(long x, long y)
{
    return ns_class{rational(x), rational(y)};
}

} // namespace

TEST(EulerChar, StructureSheafOnRuledSurface)
{
    auto const geom = surface_geometry::ruled(3);
    auto const o = sheaf_data::structure_sheaf(geom);
    auto const k = var_k();
    EXPECT_EQ(euler_char(o, geom, twist{k, cls(1, 3)}), 3 * k * k + k - polynomial(2));
    EXPECT_EQ(euler_char(o, geom), rational(-2));
}

TEST(EulerChar, AgreesWithLineBundleForm)
{
    projstab::testing::generator gen(31);
    for (int n = 0; n < 100; ++n) {
        auto const geom = gen.surface(20);
        auto const d = gen.cls(2, 20);
        auto const l = sheaf_data::line_bundle(d, geom);
        EXPECT_EQ(euler_char(l, geom), euler_char_divisor(d, geom));
        EXPECT_EQ(euler_char(l, geom), projstab::testing::line_chi(d, geom));
    }
}

TEST(EulerChar, SerreDuality)
{
    projstab::testing::generator gen(32);
    for (int n = 0; n < 100; ++n) {
        auto const geom = gen.surface(20);
        auto const e = gen.sheaf(static_cast<int>(gen.integer(1, 4)), geom, 20);
        auto const dual_twisted = tensor_line(dual(e), geom.canonical(), geom);
        EXPECT_EQ(euler_char(e, geom), euler_char(dual_twisted, geom));
    }
}

TEST(EulerChar, AdditiveInExtensions)
{
    projstab::testing::generator gen(33);
    for (int n = 0; n < 100; ++n) {
        auto const geom = gen.surface(20);
        auto const a = gen.sheaf(1 + static_cast<int>(gen.integer(0, 2)), geom, 20);
        auto const b = gen.sheaf(1 + static_cast<int>(gen.integer(0, 2)), geom, 20);
        twist const t{var_k() * var_r(), gen.cls(2, 20)};
        EXPECT_EQ(euler_char(extension_sum(a, b), geom, t), euler_char(a, geom, t) + euler_char(b, geom, t));
    }
}

TEST(EulerChar, TwistPolynomialMatchesTensoring)
{
    projstab::testing::generator gen(34);
    for (int n = 0; n < 50; ++n) {
        auto const geom = gen.surface(20);
        auto const e = gen.sheaf(2, geom, 20);
        auto const omega = gen.cls(2, 20);
        auto const chi = euler_char(e, geom, twist{var_k(), omega});
        for (long t = -3; t <= 3; ++t) {
            EXPECT_EQ(chi.evaluate(0, 0, rational(t)), euler_char(tensor_line(e, rational(t) * omega, geom), geom));
        }
    }
}

TEST(EulerChar, DualOfFamilyQuotientIsNegative)
{
    for (int g = 2; g <= 4; ++g) {
        for (int m = 0; m <= 2; ++m) {
            auto const geom = surface_geometry::ruled(g);
            auto const f1_dual = dual(sheaf_data::line_bundle(cls(-1, m + 1), geom));
            auto const chi = euler_char(f1_dual, geom);
            EXPECT_EQ(chi, euler_char_divisor(f1_dual.c1(), geom));
            EXPECT_EQ(chi, rational(-2 * (m + 1) + 2 * (1 - g)));
            EXPECT_LT(chi, rational(0));
        }
    }
}
