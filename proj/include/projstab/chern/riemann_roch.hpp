#ifndef PROJSTAB_CHERN_RIEMANN_ROCH_HPP
#define PROJSTAB_CHERN_RIEMANN_ROCH_HPP

#include <utility>

#include <projstab/chern/sheaf.hpp>

namespace projstab
{

// A twist by L^t with c1(L) = omega and t a polynomial scale (k, k*r, ...).
struct twist {
    polynomial scale;
    ns_class omega;

    symbolic_class cls() const
    {
        return scale * lift(omega);
    }
};

// Riemann-Roch on a surface, chi(E (x) L^t) = int ch(E) e^{t omega} Td(B):
//   rank (t omega)^2 / 2 + (t omega).(c1 + rank c1(B)/2)
//     + ch2 + c1.c1(B)/2 + rank todd2.
// `twist_class` is t omega already expanded into the coefficient ring.
template <typename T>
T euler_characteristic(chern_character<T> const &e, surface_geometry const &geom, basic_ns_class<T> const &twist_class)
{
    basic_ns_class<T> c1B;
    if constexpr (::std::is_same_v<T, polynomial>) {
        c1B = lift(geom.c1B());
    } else {
        c1B = geom.c1B();
    }
    T const half(rational(1, 2));
    T out = e.rank * intersect(twist_class, twist_class, geom) * half;
    out += intersect(twist_class, e.c1 + e.rank * half * c1B, geom);
    out += e.ch2 + intersect(e.c1, c1B, geom) * half + e.rank * T(geom.todd2());
    return out;
}

inline polynomial euler_char(sheaf_data const &e, surface_geometry const &geom, twist const &t)
{
    return euler_characteristic(e.symbolic_character(), geom, t.cls());
}

inline polynomial euler_char(chern_character<polynomial> const &e, surface_geometry const &geom, twist const &t)
{
    return euler_characteristic(e, geom, t.cls());
}

// Untwisted chi(E).
inline rational euler_char(sheaf_data const &e, surface_geometry const &geom)
{
    return euler_characteristic(e.character(), geom, ns_class::zero(geom.ns_rank()));
}

// The line bundle form chi(O(D)) = chi(O_B) + D.(D - K_B)/2, independent of
// the general Chern character route.
inline rational euler_char_divisor(ns_class const &divisor, surface_geometry const &geom)
{
    return geom.todd2() + intersect(divisor, divisor - geom.canonical(), geom) / rational(2);
}

} // namespace projstab

#endif
