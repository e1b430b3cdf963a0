#ifndef PROJSTAB_FUTAKI_EXPANSION_HPP
#define PROJSTAB_FUTAKI_EXPANSION_HPP

#include <projstab/chern/riemann_roch.hpp>
#include <projstab/chern/sym_power.hpp>
#include <projstab/futaki/test_config.hpp>

namespace projstab
{

inline twist kr_twist(ns_class const &omega)
{
    return twist{var_k() * var_r(), omega};
}

// p(r) = chi(P(E), L_k^r) = chi(B, S^r E (x) L^{kr}), a cubic in r.
inline polynomial hilbert_poly(test_config const &tc)
{
    auto const sym = sym_power_rank2(tc.e(), tc.geom());
    return euler_char(sym.character(tc.e()), tc.geom(), kr_twist(tc.omega()));
}

// Summand of w(r) before summing over the weight index i:
// i * chi(F^i (x) G^{r-i} (x) L^{kr}).
inline polynomial weight_summand(test_config const &tc)
{
    auto const i = var_i();
    auto const r = var_r();
    auto const c1 = i * lift(tc.f().c1()) + (r - i) * lift(tc.g().c1());
    auto const ch2 = intersect(c1, c1, tc.geom()) / rational(2);
    chern_character<polynomial> const line{polynomial(1), c1, ch2};
    return i * euler_char(line, tc.geom(), kr_twist(tc.omega()));
}

// w(r): total weight of the C* action on the central fibre sections, a
// quartic in r.
inline polynomial weight_poly(test_config const &tc)
{
    return sum_over_i(weight_summand(tc));
}

} // namespace projstab

#endif
