#ifndef PROJSTAB_CLI_SWEEP_HPP
#define PROJSTAB_CLI_SWEEP_HPP

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <utility>
#include <vector>

#include <projstab/cli/ruled_example.hpp>
#include <projstab/futaki/futaki.hpp>
#include <projstab/stability/compare.hpp>

namespace projstab::cli
{

struct sweep_row {
    int genus = 0;
    int m = 0;
    rational q;
    ::std::array<rational, 4> c;
    // From the full Futaki polynomial.
    verdict futaki = verdict::inconclusive;
    // From the equal-slope criterion (sign of Q).
    verdict criterion = verdict::inconclusive;
    // Constant-term Gieseker margin of F2 against E.
    rational gieseker_margin;
    // Q < 0: a Gieseker stable bundle whose P(E) is K-unstable.
    bool flagged = false;

    friend bool operator==(sweep_row const &, sweep_row const &) = default;
};

inline sweep_row sweep_one(int genus, int m)
{
    auto const ex = make_ruled_example(genus, m);
    auto const rep = futaki_invariant(ex.tc);
    auto const crit = equal_slope_criterion(ex.tc);
    sweep_row row;
    row.genus = genus;
    row.m = m;
    row.q = crit.q;
    row.c = rep.c;
    row.futaki = rep.result;
    row.criterion = crit.result;
    row.gieseker_margin = gieseker_compare(ex.f2, ex.e, ex.geom, ex.omega).margin;
    row.flagged = crit.q.sign() < 0;
    return row;
}

// Rows are independent and computed concurrently; the output is ordered by
// (g, m) whatever the input order.
inline ::std::vector<sweep_row> sweep_points(::std::vector<::std::pair<int, int>> const &points)
{
    ::std::vector<::std::future<sweep_row>> jobs;
    jobs.reserve(points.size());
    for (auto const &[g, m] : points) {
        jobs.push_back(::std::async(::std::launch::async, sweep_one, g, m));
    }
    ::std::vector<sweep_row> rows;
    rows.reserve(jobs.size());
    for (auto &j : jobs) {
        rows.push_back(j.get());
    }
    ::std::sort(rows.begin(), rows.end(),
                [](sweep_row const &a, sweep_row const &b) { return ::std::pair(a.genus, a.m) < ::std::pair(b.genus, b.m); });
    return rows;
}

inline ::std::vector<sweep_row> sweep(int g_lo, int g_hi, int m_lo, int m_hi)
{
    if (g_lo > g_hi || m_lo > m_hi) {
        throw ::std::invalid_argument("sweep: empty range");
    }
    if (g_lo < 2) {
        throw ::std::invalid_argument("sweep: genus must be >= 2");
    }
    if (m_lo < 0) {
        throw ::std::invalid_argument("sweep: m must be >= 0");
    }
    ::std::vector<::std::pair<int, int>> points;
    for (int g = g_lo; g <= g_hi; ++g) {
        for (int m = m_lo; m <= m_hi; ++m) {
            points.emplace_back(g, m);
        }
    }
    return sweep_points(points);
}

} // namespace projstab::cli

#endif
