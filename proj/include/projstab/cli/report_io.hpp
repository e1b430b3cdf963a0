#ifndef PROJSTAB_CLI_REPORT_IO_HPP
#define PROJSTAB_CLI_REPORT_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include <projstab/cli/reference_checks.hpp>
#include <projstab/cli/ruled_example.hpp>
#include <projstab/cli/sweep.hpp>
#include <projstab/futaki/futaki.hpp>
#include <projstab/stability/compare.hpp>
#include <projstab/stability/ruled_scan.hpp>

// JSON and text renderings of the reports. Rationals are always JSON
// strings ("p" or "p/q"); polynomials use their canonical text form.

namespace projstab::cli
{

using json = ::nlohmann::ordered_json;

inline json to_json(ns_class const &c)
{
    json out = json::array();
    for (auto const &x : c.coords()) {
        out.push_back(x.str());
    }
    return out;
}

inline json to_json(sheaf_data const &s, surface_geometry const &geom)
{
    return {{"rank", s.rank()}, {"c1", to_json(s.c1())}, {"ch2", s.ch2().str()}, {"c2", s.c2(geom).str()}};
}

inline json to_json(compare_verdict const &v)
{
    return {{"relation", to_string(v.rel)}, {"margin", v.margin.str()}, {"level", to_string(v.level)}};
}

inline json to_json(futaki_report const &r)
{
    json out;
    out["p"] = r.p_poly.str();
    out["w"] = r.w_poly.str();
    out["a0"] = r.a0.str();
    out["a1"] = r.a1.str();
    out["b0"] = r.b0.str();
    out["b1"] = r.b1.str();
    out["F1"] = r.f1.str();
    json c = json::object(), closed = json::object();
    for (unsigned j = 0; j < 4; ++j) {
        auto const name = "C" + ::std::to_string(j + 1);
        c[name] = r.c[j].str();
        closed[name] = r.closed_forms[j].str();
    }
    out["C"] = c;
    out["closed_forms"] = closed;
    out["leading_sign"] = to_string(r.leading.value);
    out["verdict"] = to_string(r.result);
    out["k_threshold"] = r.k_threshold.str();
    json d = json::array();
    for (auto const &x : r.discrepancies) {
        d.push_back({{"coefficient", x.coefficient}, {"expansion", x.expansion.str()}, {"closed_form", x.closed_form.str()}});
    }
    out["discrepancies"] = d;
    return out;
}

inline json to_json(equal_slope_result const &q)
{
    return {{"Q", q.q.str()},
            {"verdict", to_string(q.result)},
            {"C2_expansion", q.c2_expansion.str()},
            {"sign_consistent", q.sign_consistent}};
}

inline json to_json(candidate_check const &c)
{
    return {{"x", c.point.x}, {"y", c.point.y}, {"slope", c.slope.str()}, {"gieseker", to_json(c.verdict)}};
}

inline json to_json(scan_report const &s)
{
    json cases = json::array();
    for (auto const &c : s.cases) {
        json corners = json::array(), bad = json::array();
        for (auto const &x : c.corners) {
            corners.push_back(to_json(x));
        }
        for (auto const &x : c.destabilizers) {
            bad.push_back(to_json(x));
        }
        cases.push_back({{"bound_x", c.bounds.bound_x},
                         {"bound_y", c.bounds.bound_y},
                         {"strict", c.bounds.exclude_corner},
                         {"corner_dominant", c.corner_dominant},
                         {"corners", corners},
                         {"points_checked", c.points_checked},
                         {"destabilizers", bad},
                         {"pass", c.pass}});
    }
    return {{"slope_E", s.slope_e.str()}, {"window", s.window}, {"cases", cases}, {"pass", s.pass}};
}

inline json to_json(sweep_row const &r)
{
    json c = json::object();
    for (unsigned j = 0; j < 4; ++j) {
        c["C" + ::std::to_string(j + 1)] = r.c[j].str();
    }
    return {{"g", r.genus},
            {"m", r.m},
            {"Q", r.q.str()},
            {"C", c},
            {"verdict", to_string(r.futaki)},
            {"criterion", to_string(r.criterion)},
            {"gieseker_margin", r.gieseker_margin.str()},
            {"flagged", r.flagged}};
}

inline json to_json(check_result const &c)
{
    return {{"id", c.id},
            {"description", c.description},
            {"computed", c.computed},
            {"reference", c.reference},
            {"pass", c.pass},
            {"note", c.note}};
}

inline json to_json(ruled_example const &ex)
{
    return {{"g", ex.genus},
            {"m", ex.m},
            {"degV", ex.deg_v},
            {"omega", to_json(ex.omega)},
            {"c1B", to_json(ex.geom.c1B())},
            {"todd2", ex.geom.todd2().str()},
            {"F1", to_json(ex.f1, ex.geom)},
            {"E1", to_json(ex.e1, ex.geom)},
            {"F2", to_json(ex.f2, ex.geom)},
            {"E", to_json(ex.e, ex.geom)},
            {"slope_E", slope(ex.e, ex.geom, ex.omega).str()},
            {"slope_F2", slope(ex.f2, ex.geom, ex.omega).str()}};
}

inline void print_report(::std::ostream &os, futaki_report const &r)
{
    os << "p(r)  = " << r.p_poly << "\n";
    os << "w(r)  = " << r.w_poly << "\n";
    os << "a0    = " << r.a0 << "\n";
    os << "a1    = " << r.a1 << "\n";
    os << "b0    = " << r.b0 << "\n";
    os << "b1    = " << r.b1 << "\n";
    os << "F1(k) = " << r.f1 << "\n";
    for (unsigned j = 0; j < 4; ++j) {
        os << "C" << j + 1 << " = " << r.c[j] << "   (closed form " << r.closed_forms[j] << ")\n";
    }
    for (auto const &d : r.discrepancies) {
        os << "discrepancy " << d.coefficient << ": expansion " << d.expansion << ", closed form " << d.closed_form
           << "\n";
    }
    os << "verdict: " << to_string(r.result);
    if (r.result == verdict::k_unstable) {
        os << " (F1(k) < 0 for all k > " << r.k_threshold << ")";
    }
    os << "\n";
}

inline void print_scan(::std::ostream &os, scan_report const &s)
{
    os << "mu(E) = " << s.slope_e << ", window " << s.window << "\n";
    for (auto const &c : s.cases) {
        os << "case x <= " << c.bounds.bound_x << ", y <= " << c.bounds.bound_y
           << (c.bounds.exclude_corner ? " (corner excluded)" : "") << ": "
           << (c.pass ? "pass" : "FAIL") << "\n";
        os << "  corner dominance: " << (c.corner_dominant ? "yes" : "no") << "\n";
        for (auto const &k : c.corners) {
            os << "  corner (" << k.point.x << ", " << k.point.y << "): mu = " << k.slope << ", "
               << to_string(k.verdict.rel) << " margin " << k.verdict.margin << " at " << to_string(k.verdict.level)
               << "\n";
        }
        os << "  checked " << c.points_checked << " classes, " << c.destabilizers.size() << " destabilizers\n";
        for (auto const &k : c.destabilizers) {
            os << "    destabilizer (" << k.point.x << ", " << k.point.y << "): " << to_string(k.verdict.rel)
               << " margin " << k.verdict.margin << "\n";
        }
    }
    os << (s.pass ? "scan: pass" : "scan: FAIL") << "\n";
}

inline void print_sweep(::std::ostream &os, ::std::vector<sweep_row> const &rows)
{
    os << "g\tm\tQ\tC1\tC2\tC3\tC4\tverdict\tcriterion\tmargin\n";
    for (auto const &r : rows) {
        os << r.genus << "\t" << r.m << "\t" << r.q;
        for (auto const &c : r.c) {
            os << "\t" << c;
        }
        os << "\t" << to_string(r.futaki) << "\t" << to_string(r.criterion) << "\t" << r.gieseker_margin
           << (r.flagged ? "\tunstable-example" : "") << "\n";
    }
}

inline void print_checks(::std::ostream &os, ::std::vector<check_result> const &checks)
{
    for (auto const &c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.description << "\n";
        os << "       computed " << c.computed << " | reference " << c.reference << "\n";
        if (!c.note.empty()) {
            os << "       note: " << c.note << "\n";
        }
    }
}

} // namespace projstab::cli

#endif
