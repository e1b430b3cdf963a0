#ifndef PROJSTAB_EXACTCORE_RATIONAL_HPP
#define PROJSTAB_EXACTCORE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace projstab
{

// Thrown when a rational literal does not match "p" or "p/q" with q > 0.
class malformed_rational : public ::std::invalid_argument
{
public:
    explicit malformed_rational(::std::string const &literal)
        : ::std::invalid_argument("malformed rational literal '" + literal + "'"), literal_(literal)
    {
    }

    ::std::string const &literal() const noexcept
    {
        return literal_;
    }

private:
    ::std::string literal_;
};

using integer = ::boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class rational
{
public:
    rational() = default;

    template <typename Int, ::std::enable_if_t<::std::is_integral_v<Int>, int> = 0>
    rational(Int n) : value_(n)
    {
    }

    rational(integer const &n) : value_(n) {}

    rational(integer const &num, integer const &den)
    {
        if (den == 0) {
            throw ::std::domain_error("rational with zero denominator");
        }
        // Boost rejects negative denominators.
        value_ = den < 0 ? ::boost::multiprecision::cpp_rational(-num, -den)
                         : ::boost::multiprecision::cpp_rational(num, den);
    }

    // Accepts an optional leading '-', decimal digits, and optionally '/'
    // followed by a positive digit string.
    static rational parse(::std::string_view text)
    {
        auto const digits = [](::std::string_view s) {
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };

        ::std::string const literal(text);
        auto const slash = text.find('/');
        auto num_part = text.substr(0, slash);
        bool negative = false;
        if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
            negative = num_part.front() == '-';
            num_part.remove_prefix(1);
        }
        if (!digits(num_part)) {
            throw malformed_rational(literal);
        }
        integer num{::std::string(num_part)};
        if (negative) {
            num = -num;
        }
        if (slash == ::std::string_view::npos) {
            return rational(num);
        }
        auto const den_part = text.substr(slash + 1);
        if (!digits(den_part)) {
            throw malformed_rational(literal);
        }
        integer const den{::std::string(den_part)};
        if (den == 0) {
            throw malformed_rational(literal);
        }
        return rational(num, den);
    }

    integer numerator() const
    {
        return ::boost::multiprecision::numerator(value_);
    }

    integer denominator() const
    {
        return ::boost::multiprecision::denominator(value_);
    }

    bool is_zero() const
    {
        return value_.is_zero();
    }

    bool is_integer() const
    {
        return denominator() == 1;
    }

    int sign() const
    {
        return value_.sign();
    }

    rational abs() const
    {
        return sign() < 0 ? -*this : *this;
    }

    integer floor() const
    {
        integer const n = numerator(), d = denominator();
        integer q = n / d;
        if (n < 0 && q * d != n) {
            --q;
        }
        return q;
    }

    integer ceil() const
    {
        return -(-*this).floor();
    }

    ::std::string str() const
    {
        if (is_integer()) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

    rational operator-() const
    {
        rational out;
        out.value_ = -value_;
        return out;
    }

    rational &operator+=(rational const &o)
    {
        value_ += o.value_;
        return *this;
    }
    rational &operator-=(rational const &o)
    {
        value_ -= o.value_;
        return *this;
    }
    rational &operator*=(rational const &o)
    {
        value_ *= o.value_;
        return *this;
    }
    rational &operator/=(rational const &o)
    {
        if (o.is_zero()) {
            throw ::std::domain_error("rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend rational operator+(rational a, rational const &b)
    {
        return a += b;
    }
    friend rational operator-(rational a, rational const &b)
    {
        return a -= b;
    }
    friend rational operator*(rational a, rational const &b)
    {
        return a *= b;
    }
    friend rational operator/(rational a, rational const &b)
    {
        return a /= b;
    }

    friend bool operator==(rational const &a, rational const &b)
    {
        return a.value_ == b.value_;
    }
    friend ::std::strong_ordering operator<=>(rational const &a, rational const &b)
    {
        if (a.value_ < b.value_) {
            return ::std::strong_ordering::less;
        }
        if (b.value_ < a.value_) {
            return ::std::strong_ordering::greater;
        }
        return ::std::strong_ordering::equal;
    }

    friend ::std::ostream &operator<<(::std::ostream &os, rational const &q)
    {
        return os << q.str();
    }

private:
    ::boost::multiprecision::cpp_rational value_;
};

inline rational pow(rational const &base, unsigned exponent)
{
    rational out(1);
    for (unsigned e = 0; e < exponent; ++e) {
        out *= base;
    }
    return out;
}

} // namespace projstab

#endif
