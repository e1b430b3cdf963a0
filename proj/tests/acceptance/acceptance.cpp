// Acceptance run: one line per criterion, exact comparisons, wall-clock bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <projstab/cli/ruled_example.hpp>
#include <projstab/cli/sweep.hpp>
#include <projstab/projstab.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace projstab;
namespace oracle = projstab::testing;

namespace
{

struct outcome {
    bool pass = true;
    std::string detail;
};

struct criterion {
    int id;
    std::string title;
    double seconds;
    std::function<outcome()> body;
};

// 100 random rank 2 test configurations on Picard rank 2 surfaces.
std::vector<test_config> random_configs()
{
    oracle::generator gen(2024);
    std::vector<test_config> out;
    for (int n = 0; n < 100; ++n) {
        out.push_back(gen.config(20));
    }
    return out;
}

outcome sym_power_coefficients()
{
    oracle::generator gen(1);
    int bad = 0;
    for (int n = 0; n < 20; ++n) {
        auto const geom = gen.surface(20);
        auto const e = gen.sheaf(2, geom, 20);
        auto const sym = sym_power_rank2(e, geom);
        auto const c1_sq = intersect(e.c1(), e.c1(), geom);
        bad += sym.ch2_poly.coefficient({0, 3, 0}) != c1_sq / rational(12) + e.ch2() / rational(6);
        bad += sym.ch2_poly.coefficient({0, 2, 0}) != e.ch2() / rational(2);
        for (long r = 0; r <= 8; ++r) {
            bad += sym.ch2_poly.evaluate(0, rational(r), 0) != oracle::literal_sym_power_ch2(e.ch2(), c1_sq, r);
        }
    }
    return {bad == 0, std::to_string(bad) + " mismatches over 20 instances"};
}

outcome summation_oracle()
{
    int bad = 0;
    for (unsigned p = 0; p <= 6; ++p) {
        auto const s = sum_over_i(pow(var_i(), p) * var_k());
        for (long r = 0; r <= 30; ++r) {
            auto const literal = oracle::literal_power_sum(p, r);
            bad += faulhaber(p).evaluate(0, rational(r), 0) != literal;
            bad += s.evaluate(0, rational(r), rational(3)) != rational(3) * literal;
        }
    }
    auto const ex = cli::make_ruled_example(3, 2);
    auto const w = weight_poly(ex.tc);
    for (long r = 1; r <= 20; ++r) {
        for (auto const &k : {rational(1), rational(7, 3), rational(10)}) {
            bad += w.evaluate(0, rational(r), k) != oracle::literal_weight(ex.tc, r, k);
        }
    }
    return {bad == 0, std::to_string(bad) + " mismatches (p <= 6, r <= 30; w(r) at r = 1..20, k in {1, 7/3, 10})"};
}

outcome quartic_cancellation()
{
    int bad = 0;
    for (auto const &tc : random_configs()) {
        bad += !futaki_invariant(tc).f1.coefficient({0, 0, 4}).is_zero();
    }
    return {bad == 0, std::to_string(bad) + "/100 nonzero k^4 coefficients"};
}

outcome leading_cross_route()
{
    int bad = 0, equal_slopes = 0;
    std::string sample;
    for (auto const &tc : random_configs()) {
        auto const rep = futaki_invariant(tc);
        if (rep.c[0] != rep.closed_forms[0]) {
            ++bad;
            if (sample.empty()) {
                std::ostringstream os;
                os << "; first: expansion " << rep.c[0] << ", closed form " << rep.closed_forms[0];
                sample = os.str();
            }
        }
        equal_slopes += rep.c[0].is_zero();
    }
    return {bad == 0, std::to_string(bad) + "/100 mismatches (" + std::to_string(equal_slopes)
                          + " with equal slopes)" + sample};
}

outcome family_regression()
{
    auto const ex = cli::make_ruled_example(3, 2);
    std::vector<std::string> failed;
    auto const check = [&](bool ok, std::string const &what) {
        if (!ok) {
            failed.push_back(what);
        }
    };
    check(slope(ex.f2, ex.geom, ex.omega) == rational(-5), "mu(F2)");
    check(slope(ex.e, ex.geom, ex.omega) == rational(-5), "mu(E)");
    auto const margin = gieseker_compare(ex.f2, ex.e, ex.geom, ex.omega);
    check(margin.margin == rational(1, 2) && margin.level == compare_level::constant_term, "margin");
    auto const crit = equal_slope_criterion(ex.tc);
    check(crit.q == rational(-3), "Q");
    auto const rep = futaki_invariant(ex.tc);
    check(rep.result == verdict::k_unstable, "verdict");
    check(rep.f1.evaluate(0, 0, rep.k_threshold + rational(1)).sign() < 0, "k_threshold");
    check(rep.c[0] == rational(0), "C1");
    check(rep.c[1] == rational(-3, 4), "C2");
    check(rep.c[1].sign() == crit.q.sign(), "sign(C2) = sign(Q)");

    std::ostringstream os;
    os << "F1 = " << rep.f1 << ", Q = " << crit.q << ", k > " << rep.k_threshold;
    for (auto const &f : failed) {
        os << "; failed " << f;
    }
    return {failed.empty(), os.str()};
}

outcome vanishing_instances()
{
    oracle::generator gen(6);
    int bad = 0;
    for (int n = 0; n < 20; ++n) {
        auto const geom = gen.surface(20);
        auto const f = sheaf_data::line_bundle(gen.cls(2, 20), geom);
        test_config const tc(extension_sum(f, f), f, geom, gen.positive_class(geom, 20));
        bad += !futaki_invariant(tc).f1.is_zero();
    }
    surface_geometry const abelian({"b", "f"}, {{rational(0), rational(1)}, {rational(1), rational(0)}},
                                   ns_class{rational(0), rational(0)}, rational(0));
    auto const f = sheaf_data::line_bundle(ns_class{rational(1), rational(-1)}, abelian);
    auto const g = sheaf_data::line_bundle(ns_class{rational(-1), rational(1)}, abelian);
    test_config const tc(extension_sum(f, g), f, abelian, ns_class{rational(1), rational(1)});
    auto const rep = futaki_invariant(tc);
    bool const abelian_ok = rep.f1.is_zero() && rep.closed_forms[2].is_zero() && rep.closed_forms[3].is_zero();
    return {bad == 0 && abelian_ok,
            std::to_string(bad) + "/20 split instances nonzero; abelian-like F1 = " + rep.f1.str()};
}

outcome dual_audit()
{
    bool ok = true;
    std::ostringstream os;
    for (int g = 2; g <= 4; ++g) {
        for (int m = 0; m <= 2; ++m) {
            auto const ex = cli::make_ruled_example(g, m);
            auto const d = dual(ex.f1);
            auto const chi = euler_char(d, ex.geom);
            auto const line_form = euler_char_divisor(d.c1(), ex.geom);
            auto const printed = rational(-3 * (m + 1) + 2 * (1 - g));
            ok = ok && chi.sign() < 0 && chi == line_form && printed.sign() < 0;
            if (g == 3 && m == 2) {
                os << "(3,2): chi = " << chi << ", printed form gives " << printed;
            }
        }
    }
    os << "; exact value is -2(m+1)+2(1-g), printed -3(m+1)+2(1-g), signs agree";
    return {ok, os.str()};
}

outcome gieseker_semantics()
{
    oracle::generator gen(8);
    int bad = 0;
    for (int n = 0; n < 100; ++n) {
        auto const geom = gen.surface(20);
        auto const omega = gen.positive_class(geom, 20);
        auto const sub = gen.sheaf(1, geom, 20);
        auto const e = gen.sheaf(2, geom, 20);
        auto const v = gieseker_compare(sub, e, geom, omega);
        auto const diff = normalized_hilbert(e, geom, omega) - normalized_hilbert(sub, geom, omega);
        auto const k = rational(asymptotic_sign(diff).bound.ceil() + 1);
        bad += relation_from_margin(diff.evaluate(0, 0, k)) != v.rel;
    }
    return {bad == 0, std::to_string(bad) + "/100 disagreements"};
}

outcome ruled_scan_family()
{
    auto const ex = cli::make_ruled_example(3, 2);
    auto const rep = ruled_scan(ex.e, ex.cases, ex.geom, ex.omega, 10);
    std::ostringstream os;
    for (auto const &c : rep.cases) {
        os << "x <= " << c.bounds.bound_x << ", y <= " << c.bounds.bound_y << ": " << (c.pass ? "pass" : "fail") << " ("
           << c.points_checked << " classes) ";
    }
    return {rep.pass && rep.cases.size() == 2, os.str()};
}

outcome sweep_family()
{
    auto const rows = cli::sweep(2, 6, 0, 6);
    int bad = 0, flagged = 0;
    for (auto const &r : rows) {
        bool const expect = r.genus + r.m > 2;
        bad += expect && !(r.flagged && r.futaki == verdict::k_unstable && r.criterion == verdict::k_unstable);
        bad += !expect && r.flagged;
        bad += r.gieseker_margin != rational(1, 2);
        flagged += r.flagged;
    }
    return {bad == 0 && rows.size() == 35,
            std::to_string(rows.size()) + " rows, " + std::to_string(flagged) + " flagged, " + std::to_string(bad)
                + " violations"};
}

} // namespace

int main()
{
    std::vector<criterion> const criteria{
        {1, "symmetric-power ch2 coefficients", 1, sym_power_coefficients},
        {2, "Faulhaber and weight sums vs literal summation", 5, summation_oracle},
        {3, "k^4 cancellation in b0 a1 - b1 a0", 10, quartic_cancellation},
        {4, "closed-form C1 vs expansion k^3 coefficient", 10, leading_cross_route},
        {5, "ruled family regression at (g, m) = (3, 2)", 1, family_regression},
        {6, "vanishing instances", 1, vanishing_instances},
        {7, "chi(F1^*) audit", 1, dual_audit},
        {8, "Gieseker lexicographic vs large-k evaluation", 5, gieseker_semantics},
        {9, "ruled destabilizer scan", 5, ruled_scan_family},
        {10, "family sweep g in 2..6, m in 0..6", 10, sweep_family},
    };

    int failures = 0;
    for (auto const &c : criteria) {
        auto const start = std::chrono::steady_clock::now();
        outcome res;
        try {
            res = c.body();
        } catch (std::exception const &e) {
            res = {false, std::string("exception: ") + e.what()};
        }
        double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool const in_time = elapsed < c.seconds;
        bool const pass = res.pass && in_time;
        failures += !pass;

        std::ostringstream timing;
        timing.precision(3);
        timing << std::fixed << elapsed << " s, bound " << c.seconds << " s";
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " | " << res.detail
                  << " | " << timing.str() << (in_time ? "" : " (too slow)") << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
