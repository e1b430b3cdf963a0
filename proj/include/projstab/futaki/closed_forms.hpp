#ifndef PROJSTAB_FUTAKI_CLOSED_FORMS_HPP
#define PROJSTAB_FUTAKI_CLOSED_FORMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <projstab/futaki/test_config.hpp>

namespace projstab
{

class profile_error : public ::std::invalid_argument
{
public:
    using ::std::invalid_argument::invalid_argument;
};

// Intersection numbers on a base of dimension b >= 2 that determine the
// two leading Futaki coefficients. The omega powers are integrated:
//   volume   = omega^b
//   deg_e    = c1(E).omega^{b-1}
//   deg_f    = c1(F).omega^{b-1}
//   deg_b    = c1(B).omega^{b-1}
//   c1_cross = (c1(E)/2 - c1(F)).c1(B).omega^{b-2}
//   ch2_diff = (ch2(E)/2 - ch2(F)).omega^{b-2}
struct intersection_profile {
    unsigned dimension = 2;
    ::std::optional<rational> volume;
    ::std::optional<rational> deg_e;
    ::std::optional<rational> deg_f;
    ::std::optional<rational> deg_b;
    ::std::optional<rational> c1_cross;
    ::std::optional<rational> ch2_diff;
};

inline intersection_profile profile_of(test_config const &tc)
{
    auto const &geom = tc.geom();
    auto const &omega = tc.omega();
    auto const x = rational(1, 2) * tc.e().c1() - tc.f().c1();
    intersection_profile p;
    p.dimension = 2;
    p.volume = intersect(omega, omega, geom);
    p.deg_e = intersect(tc.e().c1(), omega, geom);
    p.deg_f = intersect(tc.f().c1(), omega, geom);
    p.deg_b = intersect(geom.c1B(), omega, geom);
    p.c1_cross = intersect(x, geom.c1B(), geom);
    p.ch2_diff = tc.e().ch2() / rational(2) - tc.f().ch2();
    return p;
}

struct leading_coefficients {
    rational c1;
    rational c2;
};

struct lower_coefficients {
    rational c3;
    rational c4;
};

namespace detail
{

inline rational factorial(unsigned n)
{
    rational out(1);
    for (unsigned j = 2; j <= n; ++j) {
        out *= rational(j);
    }
    return out;
}

inline rational const &require(::std::optional<rational> const &entry, char const *name)
{
    if (!entry) {
        throw profile_error(::std::string("intersection profile is missing '") + name + "'");
    }
    return *entry;
}

} // namespace detail

// The published closed forms, evaluated exactly as printed (rank E = 2,
// rank F = 1):
//   C1 = omega^b / (6 b! (b-1)!) (mu(E) - mu(F))
//   C2 = omega^b / (12 b! (b-2)!) (c1(E)/2 - c1(F)).c1(B).omega^{b-2}
//      + omega^b / (3 b! (b-2)!) (ch2(E)/2 - ch2(F)).omega^{b-2}
//      + 1 / (12 (b-1)!^2) (2 c1(E).omega^{b-1} - c1(B).omega^{b-1}) (mu(E) - mu(F))
// These are cross-checks; futaki_invariant's expansion is authoritative.
inline leading_coefficients closed_form_c1_c2(intersection_profile const &p)
{
    if (p.dimension < 2) {
        throw profile_error("intersection profile needs base dimension b >= 2");
    }
    auto const b = p.dimension;
    auto const &vol = detail::require(p.volume, "volume");
    auto const &deg_e = detail::require(p.deg_e, "deg_e");
    auto const &deg_f = detail::require(p.deg_f, "deg_f");
    auto const &deg_b = detail::require(p.deg_b, "deg_b");
    auto const &cross = detail::require(p.c1_cross, "c1_cross");
    auto const &ch2_diff = detail::require(p.ch2_diff, "ch2_diff");

    auto const fb = detail::factorial(b), fb1 = detail::factorial(b - 1), fb2 = detail::factorial(b - 2);
    auto const slope_gap = deg_e / rational(2) - deg_f;

    leading_coefficients out;
    out.c1 = vol / (rational(6) * fb * fb1) * slope_gap;
    out.c2 = vol / (rational(12) * fb * fb2) * cross + vol / (rational(3) * fb * fb2) * ch2_diff
             + (rational(2) * deg_e - deg_b) * slope_gap / (rational(12) * fb1 * fb1);
    return out;
}

inline leading_coefficients closed_form_c1_c2(test_config const &tc)
{
    return closed_form_c1_c2(profile_of(tc));
}

// The published surface formulas, with Y = ch2(E)/2 - ch2(F):
//   48 C3 = (8 deg E - 4 omega.c1(B)) Y + 2 c1(E)^2 (deg E/2 - deg F)
//         + 2 deg F c1(E).c1(B) - 2 deg E c1(B).c1(F)
//   144 C4 = c1(E)^2 [(c1(E)/2 - c1(F)).c1(B) + 6 Y] - 4 c1(E).c1(B) Y
//          + 2 (c1(E).c1(B) ch2(F) - c1(F).c1(B) ch2(E))
inline lower_coefficients closed_form_c3_c4(test_config const &tc)
{
    auto const &geom = tc.geom();
    auto const &omega = tc.omega();
    auto const &c1e = tc.e().c1();
    auto const &c1f = tc.f().c1();
    auto const &c1b = geom.c1B();
    auto const ch2e = tc.e().ch2();
    auto const ch2f = tc.f().ch2();

    auto const deg_e = intersect(c1e, omega, geom);
    auto const deg_f = intersect(c1f, omega, geom);
    auto const e_sq = intersect(c1e, c1e, geom);
    auto const e_b = intersect(c1e, c1b, geom);
    auto const f_b = intersect(c1f, c1b, geom);
    auto const y = ch2e / rational(2) - ch2f;
    auto const x_b = intersect(rational(1, 2) * c1e - c1f, c1b, geom);

    auto const c3_48 = (rational(8) * deg_e - rational(4) * intersect(omega, c1b, geom)) * y
                       + rational(2) * e_sq * (deg_e / rational(2) - deg_f) + rational(2) * deg_f * e_b
                       - rational(2) * deg_e * f_b;
    auto const c4_144 = e_sq * (x_b + rational(6) * y) - rational(4) * e_b * y
                        + rational(2) * (e_b * ch2f - f_b * ch2e);
    return {c3_48 / rational(48), c4_144 / rational(144)};
}

} // namespace projstab

#endif
