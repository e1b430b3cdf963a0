#ifndef PROJSTAB_FUTAKI_FUTAKI_HPP
#define PROJSTAB_FUTAKI_FUTAKI_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <projstab/exactcore/asymptotic.hpp>
#include <projstab/futaki/closed_forms.hpp>
#include <projstab/futaki/expansion.hpp>

namespace projstab
{

enum class verdict { k_unstable, not_k_polystable, inconclusive };

inline ::std::string to_string(verdict v)
{
    switch (v) {
        case verdict::k_unstable:
            return "KUnstable";
        case verdict::not_k_polystable:
            return "NotKPolystable";
        case verdict::inconclusive:
            return "Inconclusive";
    }
    return "?";
}

struct discrepancy {
    ::std::string coefficient;
    rational expansion;
    rational closed_form;
};

struct futaki_report {
    polynomial p_poly;
    polynomial w_poly;
    polynomial a0, a1, b0, b1;
    // F1 = b0 a1 - b1 a0, a polynomial in k.
    polynomial f1;
    // Coefficients of k^3, k^2, k, 1 in F1.
    ::std::array<rational, 4> c;
    ::std::array<rational, 4> closed_forms;
    asymptotic_result leading;
    verdict result = verdict::inconclusive;
    // F1(k) < 0 for all k > k_threshold when result is KUnstable.
    rational k_threshold;
    ::std::vector<discrepancy> discrepancies;
};

inline verdict decide(asymptotic_result const &leading, nonproduct np)
{
    if (leading.value == sign::negative) {
        return verdict::k_unstable;
    }
    if (leading.value == sign::zero && np == nonproduct::yes) {
        return verdict::not_k_polystable;
    }
    return verdict::inconclusive;
}

inline futaki_report futaki_invariant(test_config const &tc)
{
    futaki_report rep;
    rep.p_poly = hilbert_poly(tc);
    rep.w_poly = weight_poly(tc);
    rep.a0 = rep.p_poly.coefficient_of(variable::r, 3);
    rep.a1 = rep.p_poly.coefficient_of(variable::r, 2);
    rep.b0 = rep.w_poly.coefficient_of(variable::r, 4);
    rep.b1 = rep.w_poly.coefficient_of(variable::r, 3);
    rep.f1 = rep.b0 * rep.a1 - rep.b1 * rep.a0;

    for (unsigned j = 0; j < 4; ++j) {
        rep.c[j] = rep.f1.coefficient({0, 0, 3 - j});
    }

    auto const lead = closed_form_c1_c2(tc);
    auto const lower = closed_form_c3_c4(tc);
    rep.closed_forms = {lead.c1, lead.c2, lower.c3, lower.c4};
    for (unsigned j = 0; j < 4; ++j) {
        if (rep.c[j] != rep.closed_forms[j]) {
            rep.discrepancies.push_back({"C" + ::std::to_string(j + 1), rep.c[j], rep.closed_forms[j]});
        }
    }
    if (rep.f1.degree(variable::k) > 3) {
        rep.discrepancies.push_back({"k^4", rep.f1.coefficient({0, 0, 4}), rational(0)});
    }

    rep.leading = asymptotic_sign(rep.f1);
    rep.k_threshold = rep.leading.bound;
    rep.result = decide(rep.leading, tc.is_nonproduct());
    return rep;
}

class criterion_inapplicable : public ::std::domain_error
{
public:
    using ::std::domain_error::domain_error;
};

struct equal_slope_result {
    // Q = 4 (ch2(E)/2 - ch2(F)) + c1(B).(c1(E)/2 - c1(F)).
    rational q;
    verdict result = verdict::inconclusive;
    // k^2 coefficient of F1 from the expansion.
    rational c2_expansion;
    // sign(Q) == sign(C2) whenever C2 != 0.
    bool sign_consistent = true;
};

// When mu(F) = mu(E) the k^3 term of F1 vanishes and the sign of the k^2
// term is the sign of Q; Q < 0 certifies K-instability.
inline equal_slope_result equal_slope_criterion(test_config const &tc)
{
    auto const &geom = tc.geom();
    if (slope(tc.f(), geom, tc.omega()) != slope(tc.e(), geom, tc.omega())) {
        throw criterion_inapplicable("equal-slope criterion needs mu(F) = mu(E); the k^3 coefficient governs instead");
    }
    equal_slope_result out;
    out.q = rational(4) * (tc.e().ch2() / rational(2) - tc.f().ch2())
            + intersect(geom.c1B(), rational(1, 2) * tc.e().c1() - tc.f().c1(), geom);
    out.result = out.q.sign() < 0 ? verdict::k_unstable : verdict::inconclusive;

    auto const f1 = futaki_invariant(tc).f1;
    out.c2_expansion = f1.coefficient({0, 0, 2});
    out.sign_consistent = out.c2_expansion.is_zero() || out.c2_expansion.sign() == out.q.sign();
    return out;
}

} // namespace projstab

#endif
