#ifndef PROJSTAB_EXACTCORE_ASYMPTOTIC_HPP
#define PROJSTAB_EXACTCORE_ASYMPTOTIC_HPP

#include <stdexcept>
#include <string>

#include <projstab/exactcore/polynomial.hpp>

namespace projstab
{

enum class sign { negative = -1, zero = 0, positive = 1 };

inline ::std::string to_string(sign s)
{
    switch (s) {
        case sign::negative:
            return "negative";
        case sign::zero:
            return "zero";
        case sign::positive:
            return "positive";
    }
    return "?";
}

inline sign sign_of(rational const &q)
{
    return static_cast<sign>(q.sign());
}

struct asymptotic_result {
    sign value = sign::zero;
    // f(k) has sign `value` for every k > bound.
    rational bound;
};

// Sign of f(k) for k >> 0, with the Cauchy root bound 1 + max |a_j / a_d|
// as an explicit witness.
inline asymptotic_result asymptotic_sign(polynomial const &f)
{
    if (f.involves(variable::i) || f.involves(variable::r)) {
        throw ::std::invalid_argument("asymptotic_sign: polynomial must be univariate in k, got " + f.str());
    }
    if (f.is_zero()) {
        return {};
    }
    auto const d = f.degree(variable::k);
    auto const lead = f.coefficient({0, 0, d});
    rational worst;
    for (auto const &[e, c] : f.terms()) {
        if (e[2] < d) {
            auto const ratio = (c / lead).abs();
            if (ratio > worst) {
                worst = ratio;
            }
        }
    }
    return {sign_of(lead), rational(1) + worst};
}

} // namespace projstab

#endif
