#ifndef PROJSTAB_EXACTCORE_FAULHABER_HPP
#define PROJSTAB_EXACTCORE_FAULHABER_HPP

#include <deque>
#include <mutex>

#include <projstab/exactcore/polynomial.hpp>

namespace projstab
{

namespace detail
{

inline rational binomial(unsigned n, unsigned k)
{
    rational out(1);
    for (unsigned j = 1; j <= k; ++j) {
        out = out * rational(n - k + j) / rational(j);
    }
    return out;
}

} // namespace detail

// Closed form F_p(r) = sum_{i=0}^{r} i^p as a polynomial in r.
//
// Telescoping (i+1)^{p+1} - i^{p+1} over i = 0..r gives
//   (r+1)^{p+1} = sum_{j=0}^{p} binom(p+1, j) F_j(r),
// which determines F_p from F_0..F_{p-1}. Results are cached for the
// lifetime of the process.
inline polynomial const &faulhaber(unsigned p)
{
    static ::std::mutex mutex;
    // deque: growth never invalidates references already handed out.
    static ::std::deque<polynomial> cache;

    ::std::lock_guard lock(mutex);
    auto const r_plus_1 = var_r() + polynomial(1);
    while (cache.size() <= p) {
        auto const q = static_cast<unsigned>(cache.size());
        polynomial rest = pow(r_plus_1, q + 1);
        for (unsigned j = 0; j < q; ++j) {
            rest -= detail::binomial(q + 1, j) * cache[j];
        }
        cache.push_back(rest / rational(q + 1));
    }
    return cache[p];
}

// The polynomial identically equal to sum_{i=0}^{r} q(i, r, k). Each power
// i^p is replaced by faulhaber(p); the r and k parts of a term ride along.
inline polynomial sum_over_i(polynomial const &q)
{
    polynomial out;
    for (auto const &[e, c] : q.terms()) {
        out += polynomial::monomial(c, {0, e[1], e[2]}) * faulhaber(e[0]);
    }
    return out;
}

} // namespace projstab

#endif
