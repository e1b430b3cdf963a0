#ifndef PROJSTAB_EXACTCORE_POLYNOMIAL_HPP
#define PROJSTAB_EXACTCORE_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <projstab/exactcore/rational.hpp>

namespace projstab
{

// The indeterminates, in their fixed storage order: i is the weight index,
// r the power of the polarisation on P(E), k the polarisation scale on the
// base.
enum class variable : ::std::uint8_t { i = 0, r = 1, k = 2 };

inline constexpr ::std::size_t n_variables = 3;

inline constexpr char variable_name(variable v)
{
    constexpr char names[] = {'i', 'r', 'k'};
    return names[static_cast<::std::size_t>(v)];
}

using exponents = ::std::array<unsigned, n_variables>;

namespace detail
{

inline unsigned total_degree(exponents const &e)
{
    return e[0] + e[1] + e[2];
}

// Descending total degree, then descending lexicographic in (i, r, k). This
// is also the print order.
struct monomial_order {
    bool operator()(exponents const &a, exponents const &b) const
    {
        auto const da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

} // namespace detail

// Sparse polynomial over the rationals in the indeterminates (i, r, k).
// Zero coefficients are never stored, so equality is term-map equality.
class polynomial
{
public:
    using term_map = ::std::map<exponents, rational, detail::monomial_order>;

    polynomial() = default;

    polynomial(rational const &c)
    {
        if (!c.is_zero()) {
            terms_.emplace(exponents{}, c);
        }
    }

    template <typename Int, ::std::enable_if_t<::std::is_integral_v<Int>, int> = 0>
    polynomial(Int c) : polynomial(rational(c))
    {
    }

    static polynomial monomial(rational const &c, exponents const &e)
    {
        polynomial out;
        if (!c.is_zero()) {
            out.terms_.emplace(e, c);
        }
        return out;
    }

    static polynomial var(variable v, unsigned power = 1)
    {
        exponents e{};
        e[static_cast<::std::size_t>(v)] = power;
        return monomial(rational(1), e);
    }

    term_map const &terms() const
    {
        return terms_;
    }

    bool is_zero() const
    {
        return terms_.empty();
    }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == exponents{});
    }

    // Constant term.
    rational constant() const
    {
        return coefficient(exponents{});
    }

    rational coefficient(exponents const &e) const
    {
        auto const it = terms_.find(e);
        return it == terms_.end() ? rational{} : it->second;
    }

    unsigned degree(variable v) const
    {
        unsigned d = 0;
        for (auto const &[e, c] : terms_) {
            d = ::std::max(d, e[static_cast<::std::size_t>(v)]);
        }
        return d;
    }

    unsigned total_degree() const
    {
        return terms_.empty() ? 0u : detail::total_degree(terms_.begin()->first);
    }

    bool involves(variable v) const
    {
        return degree(v) > 0;
    }

    // The polynomial multiplying v^power, with v eliminated.
    polynomial coefficient_of(variable v, unsigned power) const
    {
        auto const idx = static_cast<::std::size_t>(v);
        polynomial out;
        for (auto const &[e, c] : terms_) {
            if (e[idx] == power) {
                auto reduced = e;
                reduced[idx] = 0;
                out.terms_.emplace(reduced, c);
            }
        }
        return out;
    }

    // Replaces v by the polynomial value.
    polynomial substitute(variable v, polynomial const &value) const
    {
        auto const idx = static_cast<::std::size_t>(v);
        polynomial out;
        // Powers of value, built lazily.
        ::std::vector<polynomial> powers{polynomial(1)};
        for (auto const &[e, c] : terms_) {
            while (powers.size() <= e[idx]) {
                powers.push_back(powers.back() * value);
            }
            auto reduced = e;
            reduced[idx] = 0;
            out += monomial(c, reduced) * powers[e[idx]];
        }
        return out;
    }

    rational evaluate(rational const &i, rational const &r, rational const &k) const
    {
        rational out;
        for (auto const &[e, c] : terms_) {
            out += c * pow(i, e[0]) * pow(r, e[1]) * pow(k, e[2]);
        }
        return out;
    }

    polynomial operator-() const
    {
        polynomial out(*this);
        for (auto &[e, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    polynomial &operator+=(polynomial const &o)
    {
        for (auto const &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    polynomial &operator-=(polynomial const &o)
    {
        for (auto const &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    polynomial &operator*=(polynomial const &o)
    {
        polynomial out;
        for (auto const &[ea, ca] : terms_) {
            for (auto const &[eb, cb] : o.terms_) {
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
            }
        }
        return *this = ::std::move(out);
    }

    polynomial &operator*=(rational const &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    polynomial &operator/=(rational const &s)
    {
        return *this *= rational(1) / s;
    }

    friend polynomial operator+(polynomial a, polynomial const &b)
    {
        return a += b;
    }
    friend polynomial operator-(polynomial a, polynomial const &b)
    {
        return a -= b;
    }
    friend polynomial operator*(polynomial a, polynomial const &b)
    {
        return a *= b;
    }
    friend polynomial operator*(polynomial a, rational const &s)
    {
        return a *= s;
    }
    friend polynomial operator*(rational const &s, polynomial a)
    {
        return a *= s;
    }
    template <typename Int, ::std::enable_if_t<::std::is_integral_v<Int>, int> = 0>
    friend polynomial operator*(polynomial a, Int s)
    {
        return a *= rational(s);
    }
    template <typename Int, ::std::enable_if_t<::std::is_integral_v<Int>, int> = 0>
    friend polynomial operator*(Int s, polynomial a)
    {
        return a *= rational(s);
    }
    friend polynomial operator/(polynomial a, rational const &s)
    {
        return a /= s;
    }

    friend bool operator==(polynomial const &, polynomial const &) = default;

    // Canonical text form, descending degree: "-1/24*k^2 + k - 2".
    ::std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        ::std::string out;
        bool first = true;
        for (auto const &[e, c] : terms_) {
            auto const mag = c.abs();
            if (first) {
                if (c.sign() < 0) {
                    out += "-";
                }
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;

            ::std::string mono;
            for (::std::size_t v = 0; v < n_variables; ++v) {
                if (e[v] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += variable_name(static_cast<variable>(v));
                if (e[v] > 1) {
                    mono += "^" + ::std::to_string(e[v]);
                }
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == rational(1)) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    friend ::std::ostream &operator<<(::std::ostream &os, polynomial const &p)
    {
        return os << p.str();
    }

private:
    void add_term(exponents const &e, rational const &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    term_map terms_;
};

inline polynomial pow(polynomial const &base, unsigned exponent)
{
    polynomial out(1);
    for (unsigned e = 0; e < exponent; ++e) {
        out *= base;
    }
    return out;
}

// Shorthands for the three indeterminates.
inline polynomial var_i()
{
    return polynomial::var(variable::i);
}
inline polynomial var_r()
{
    return polynomial::var(variable::r);
}
inline polynomial var_k()
{
    return polynomial::var(variable::k);
}

} // namespace projstab

#endif
