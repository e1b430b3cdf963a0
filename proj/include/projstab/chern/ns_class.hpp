#ifndef PROJSTAB_CHERN_NS_CLASS_HPP
#define PROJSTAB_CHERN_NS_CLASS_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <projstab/exactcore/polynomial.hpp>
#include <projstab/exactcore/rational.hpp>

namespace projstab
{

class dimension_error : public ::std::invalid_argument
{
public:
    using ::std::invalid_argument::invalid_argument;
};

// A class in the Neron-Severi group tensored with the coefficient ring T,
// stored as coordinates in a fixed basis. T is rational for numerical
// classes and polynomial for classes depending on i, r, k.
template <typename T>
class basic_ns_class
{
public:
    basic_ns_class() = default;

    explicit basic_ns_class(::std::vector<T> coords) : coords_(::std::move(coords)) {}

    basic_ns_class(::std::initializer_list<T> coords) : coords_(coords) {}

    static basic_ns_class zero(::std::size_t rank)
    {
        return basic_ns_class(::std::vector<T>(rank));
    }

    ::std::size_t size() const
    {
        return coords_.size();
    }

    T const &operator[](::std::size_t j) const
    {
        return coords_[j];
    }

    ::std::vector<T> const &coords() const
    {
        return coords_;
    }

    bool is_zero() const
    {
        for (auto const &c : coords_) {
            if (!(c == T{})) {
                return false;
            }
        }
        return true;
    }

    basic_ns_class &operator+=(basic_ns_class const &o)
    {
        check_same_size(o);
        for (::std::size_t j = 0; j < coords_.size(); ++j) {
            coords_[j] += o.coords_[j];
        }
        return *this;
    }

    basic_ns_class &operator-=(basic_ns_class const &o)
    {
        check_same_size(o);
        for (::std::size_t j = 0; j < coords_.size(); ++j) {
            coords_[j] -= o.coords_[j];
        }
        return *this;
    }

    basic_ns_class &operator*=(T const &s)
    {
        for (auto &c : coords_) {
            c *= s;
        }
        return *this;
    }

    basic_ns_class operator-() const
    {
        basic_ns_class out(*this);
        for (auto &c : out.coords_) {
            c = -c;
        }
        return out;
    }

    friend basic_ns_class operator+(basic_ns_class a, basic_ns_class const &b)
    {
        return a += b;
    }
    friend basic_ns_class operator-(basic_ns_class a, basic_ns_class const &b)
    {
        return a -= b;
    }
    friend basic_ns_class operator*(T const &s, basic_ns_class a)
    {
        return a *= s;
    }
    friend basic_ns_class operator*(basic_ns_class a, T const &s)
    {
        return a *= s;
    }

    friend bool operator==(basic_ns_class const &, basic_ns_class const &) = default;

    ::std::string str() const
    {
        ::std::string out = "(";
        for (::std::size_t j = 0; j < coords_.size(); ++j) {
            out += (j ? ", " : "") + coords_[j].str();
        }
        return out + ")";
    }

private:
    void check_same_size(basic_ns_class const &o) const
    {
        if (o.size() != size()) {
            throw dimension_error("Neron-Severi classes of different rank: " + ::std::to_string(size()) + " vs "
                                  + ::std::to_string(o.size()));
        }
    }

    ::std::vector<T> coords_;
};

using ns_class = basic_ns_class<rational>;
using symbolic_class = basic_ns_class<polynomial>;

inline symbolic_class lift(ns_class const &c)
{
    ::std::vector<polynomial> coords;
    coords.reserve(c.size());
    for (auto const &x : c.coords()) {
        coords.emplace_back(x);
    }
    return symbolic_class(::std::move(coords));
}

} // namespace projstab

#endif
