#ifndef PROJSTAB_CLI_RULED_EXAMPLE_HPP
#define PROJSTAB_CLI_RULED_EXAMPLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <projstab/futaki/test_config.hpp>
#include <projstab/stability/ruled_scan.hpp>

namespace projstab::cli
{

// A Gieseker stable, strictly Mumford semistable rank 2 bundle on a ruled
// surface B = P(V) over a genus g curve, polarised by b + (m+1) f:
//   0 -> O_B -> E1 -> F1 -> 0,   c1(F1) = -b + (m+1) f
//   0 -> F2 -> E -> F1 (x) F2 -> 0,   c1(F2) = -b + (g-3-m) f
// The test configuration degenerates E along F2, whose slope equals mu(E).
struct ruled_example {
    int genus;
    int m;
    int deg_v;
    surface_geometry geom;
    ns_class omega;
    sheaf_data f1;
    sheaf_data e1;
    sheaf_data f2;
    sheaf_data e;
    test_config tc;
    // Candidate line subsheaves O(D) of E: either O(D) -> F2, or
    // F1 (x) F2 (x) O(-D) is effective, in which case D != c1(F1 (x) F2).
    ::std::vector<scan_case> cases;
};

inline ruled_example make_ruled_example(int genus, int m, int deg_v = 0)
{
    if (genus < 2) {
        throw ::std::invalid_argument("ruled example needs genus >= 2, got " + ::std::to_string(genus));
    }
    if (m < 0) {
        throw ::std::invalid_argument("ruled example needs m >= 0, got " + ::std::to_string(m));
    }
    auto geom = surface_geometry::ruled(genus, deg_v);
    ns_class const omega{rational(1), rational(m + 1)};
    ns_class const f1_class{rational(-1), rational(m + 1)};
    ns_class const f2_class{rational(-1), rational(genus - 3 - m)};

    auto const f1 = sheaf_data::line_bundle(f1_class, geom);
    auto const e1 = extension_sum(sheaf_data::structure_sheaf(geom), f1);
    auto const f2 = sheaf_data::line_bundle(f2_class, geom);
    auto const e = extension_sum(f2, tensor_line(f1, f2_class, geom));
    test_config tc(e, f2, geom, omega, nonproduct::yes);

    ::std::vector<scan_case> cases{{-1, genus - 3 - m, false}, {-2, genus - 2, true}};
    return {genus, m, deg_v, geom, omega, f1, e1, f2, e, tc, cases};
}

} // namespace projstab::cli

#endif
