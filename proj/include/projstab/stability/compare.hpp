#ifndef PROJSTAB_STABILITY_COMPARE_HPP
#define PROJSTAB_STABILITY_COMPARE_HPP

#include <string>

#include <projstab/chern/riemann_roch.hpp>

namespace projstab
{

// How a candidate subsheaf F compares with E.
enum class relation { sub_strictly_smaller, equal, sub_strictly_larger };

// Where a Gieseker comparison was decided.
enum class compare_level { leading_k2, linear_k, constant_term, identical };

inline ::std::string to_string(relation r)
{
    switch (r) {
        case relation::sub_strictly_smaller:
            return "SubStrictlySmaller";
        case relation::equal:
            return "Equal";
        case relation::sub_strictly_larger:
            return "SubStrictlyLarger";
    }
    return "?";
}

inline ::std::string to_string(compare_level l)
{
    switch (l) {
        case compare_level::leading_k2:
            return "LeadingK2";
        case compare_level::linear_k:
            return "LinearK";
        case compare_level::constant_term:
            return "ConstantTerm";
        case compare_level::identical:
            return "Identical";
    }
    return "?";
}

// margin > 0 means the sub side is smaller.
inline relation relation_from_margin(rational const &margin)
{
    if (margin.sign() > 0) {
        return relation::sub_strictly_smaller;
    }
    if (margin.sign() < 0) {
        return relation::sub_strictly_larger;
    }
    return relation::equal;
}

struct compare_verdict {
    relation rel = relation::equal;
    // First nonzero coefficient of chi(E(k))/rk E - chi(F(k))/rk F, from k^2 down.
    rational margin;
    compare_level level = compare_level::identical;
};

inline relation mumford_compare(sheaf_data const &sub, sheaf_data const &e, surface_geometry const &geom,
                                ns_class const &omega)
{
    return relation_from_margin(slope(e, geom, omega) - slope(sub, geom, omega));
}

// chi(E (x) L^k) / rk(E) as a polynomial in k.
inline polynomial normalized_hilbert(sheaf_data const &e, surface_geometry const &geom, ns_class const &omega)
{
    return euler_char(e, geom, twist{var_k(), omega}) / rational(e.rank());
}

// Lexicographic comparison of normalised Hilbert polynomials, which is the
// k >> 0 comparison.
inline compare_verdict gieseker_compare(sheaf_data const &sub, sheaf_data const &e, surface_geometry const &geom,
                                        ns_class const &omega)
{
    auto const diff = normalized_hilbert(e, geom, omega) - normalized_hilbert(sub, geom, omega);
    constexpr compare_level levels[] = {compare_level::leading_k2, compare_level::linear_k,
                                        compare_level::constant_term};
    for (unsigned j = 0; j < 3; ++j) {
        auto const c = diff.coefficient({0, 0, 2 - j});
        if (!c.is_zero()) {
            return {relation_from_margin(c), c, levels[j]};
        }
    }
    return {};
}

} // namespace projstab

#endif
