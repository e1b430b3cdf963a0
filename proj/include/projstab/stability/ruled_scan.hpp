#ifndef PROJSTAB_STABILITY_RULED_SCAN_HPP
#define PROJSTAB_STABILITY_RULED_SCAN_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <projstab/stability/compare.hpp>

namespace projstab
{

// Candidate line subsheaves O(D), D = x b + y f, confined to x <= bound_x,
// y <= bound_y. With exclude_corner the corner (bound_x, bound_y) itself is
// not a candidate ("at least one inequality strict").
//
// Only line classes are scanned: a rank 1 torsion free subsheaf is
// O(D) (x) I_Z with c1 = D and c2 = length(Z) >= 0, and the ideal part only
// lowers its Hilbert polynomial.
struct scan_case {
    long bound_x = 0;
    long bound_y = 0;
    bool exclude_corner = false;

    friend bool operator==(scan_case const &, scan_case const &) = default;
};

struct lattice_point {
    long x = 0;
    long y = 0;

    friend bool operator==(lattice_point const &, lattice_point const &) = default;
};

struct candidate_check {
    lattice_point point;
    rational slope;
    compare_verdict verdict;
};

struct scan_case_result {
    scan_case bounds;
    // omega pairs positively with both basis classes, so mu(O(D)) is
    // maximised at the region's corner(s).
    bool corner_dominant = false;
    // The slope maximisers: the corner, or the two near-corner points.
    ::std::vector<candidate_check> corners;
    ::std::size_t points_checked = 0;
    ::std::vector<candidate_check> destabilizers;
    bool pass = false;
};

struct scan_report {
    rational slope_e;
    long window = 0;
    ::std::vector<scan_case_result> cases;
    bool pass = false;
};

inline ns_class ruled_class(long x, long y)
{
    return ns_class{rational(x), rational(y)};
}

inline scan_report ruled_scan(sheaf_data const &e, ::std::vector<scan_case> const &cases,
                              surface_geometry const &geom, ns_class const &omega, long window = 10)
{
    if (!geom.is_ruled_shape()) {
        throw ::std::invalid_argument("ruled_scan: geometry is not a ruled surface (need rho = 2, f^2 = 0, b.f = 1)");
    }
    if (cases.empty()) {
        throw ::std::invalid_argument("ruled_scan: empty case list");
    }
    if (window < 0) {
        throw ::std::invalid_argument("ruled_scan: window must be nonnegative");
    }

    auto const check = [&](long x, long y) {
        auto const line = sheaf_data::line_bundle(ruled_class(x, y), geom);
        return candidate_check{{x, y}, slope(line, geom, omega), gieseker_compare(line, e, geom, omega)};
    };

    auto const pair_b = intersect(omega, geom.basis_vector(0), geom);
    auto const pair_f = intersect(omega, geom.basis_vector(1), geom);

    scan_report report;
    report.slope_e = slope(e, geom, omega);
    report.window = window;
    report.pass = true;
    for (auto const &c : cases) {
        scan_case_result res;
        res.bounds = c;
        res.corner_dominant = pair_b.sign() > 0 && pair_f.sign() > 0;

        if (c.exclude_corner) {
            res.corners.push_back(check(c.bound_x - 1, c.bound_y));
            res.corners.push_back(check(c.bound_x, c.bound_y - 1));
        } else {
            res.corners.push_back(check(c.bound_x, c.bound_y));
        }

        for (long x = c.bound_x - window; x <= c.bound_x; ++x) {
            for (long y = c.bound_y - window; y <= c.bound_y; ++y) {
                if (c.exclude_corner && x == c.bound_x && y == c.bound_y) {
                    continue;
                }
                ++res.points_checked;
                auto cand = check(x, y);
                if (cand.verdict.rel != relation::sub_strictly_smaller) {
                    res.destabilizers.push_back(::std::move(cand));
                }
            }
        }

        bool corners_ok = true;
        for (auto const &corner : res.corners) {
            corners_ok = corners_ok && corner.verdict.rel == relation::sub_strictly_smaller;
        }
        res.pass = res.corner_dominant && corners_ok && res.destabilizers.empty();
        report.pass = report.pass && res.pass;
        report.cases.push_back(::std::move(res));
    }
    return report;
}

} // namespace projstab

#endif
