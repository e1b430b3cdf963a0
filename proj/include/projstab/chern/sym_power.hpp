#ifndef PROJSTAB_CHERN_SYM_POWER_HPP
#define PROJSTAB_CHERN_SYM_POWER_HPP

#include <stdexcept>

#include <projstab/chern/sheaf.hpp>
#include <projstab/exactcore/faulhaber.hpp>

namespace projstab
{

// Chern character of S^r E for a rank 2 bundle E, as polynomials in r:
// rank = r + 1, c1 = c1_factor * c1(E), ch2 = ch2_poly.
struct sym_power_chern {
    polynomial rank_poly;
    polynomial c1_factor;
    polynomial ch2_poly;

    chern_character<polynomial> character(sheaf_data const &e) const
    {
        return {rank_poly, c1_factor * lift(e.c1()), ch2_poly};
    }
};

// Splitting principle: if E has Chern roots a, b then S^r E has roots
// x_i = i a + (r - i) b for i = 0..r, and
//   ch2(S^r E) = sum_i x_i^2 / 2 = (sum_i i^2) ch2(E) + (sum_i i (r - i)) c2(E)
// using a^2 + b^2 = 2 ch2(E) and ab = c2(E).
inline sym_power_chern sym_power_rank2(sheaf_data const &e, surface_geometry const &geom)
{
    if (e.rank() != 2) {
        throw ::std::invalid_argument("sym_power_rank2: rank must be 2, got " + ::std::to_string(e.rank()));
    }
    auto const i = var_i();
    auto const r = var_r();
    auto const square_sum = sum_over_i(i * i);
    auto const mixed_sum = sum_over_i(i * (r - i));
    return {r + polynomial(1), sum_over_i(i), square_sum * e.ch2() + mixed_sum * e.c2(geom)};
}

} // namespace projstab

#endif
