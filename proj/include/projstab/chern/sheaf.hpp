#ifndef PROJSTAB_CHERN_SHEAF_HPP
#define PROJSTAB_CHERN_SHEAF_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <projstab/chern/surface.hpp>

namespace projstab
{

// Chern character (rank, c1, integrated ch2) with coefficients in T.
template <typename T>
struct chern_character {
    T rank;
    basic_ns_class<T> c1;
    T ch2;

    friend bool operator==(chern_character const &, chern_character const &) = default;
};

// Numerical Chern data of a coherent sheaf of positive rank on a surface.
class sheaf_data
{
public:
    sheaf_data(int rank, ns_class c1, rational ch2) : rank_(rank), c1_(::std::move(c1)), ch2_(::std::move(ch2))
    {
        if (rank_ <= 0) {
            throw ::std::invalid_argument("sheaf rank must be positive, got " + ::std::to_string(rank_));
        }
    }

    // O(D): rank 1 with ch2 = D^2/2.
    static sheaf_data line_bundle(ns_class const &divisor, surface_geometry const &geom)
    {
        auto const self = intersect(divisor, divisor, geom) / rational(2);
        return sheaf_data(1, divisor, self);
    }

    static sheaf_data structure_sheaf(surface_geometry const &geom)
    {
        return sheaf_data(1, ns_class::zero(geom.ns_rank()), rational(0));
    }

    int rank() const
    {
        return rank_;
    }

    ns_class const &c1() const
    {
        return c1_;
    }

    rational const &ch2() const
    {
        return ch2_;
    }

    // c2 = c1^2/2 - ch2.
    rational c2(surface_geometry const &geom) const
    {
        return intersect(c1_, c1_, geom) / rational(2) - ch2_;
    }

    bool is_line_bundle(surface_geometry const &geom) const
    {
        return rank_ == 1 && c2(geom).is_zero();
    }

    chern_character<rational> character() const
    {
        return {rational(rank_), c1_, ch2_};
    }

    chern_character<polynomial> symbolic_character() const
    {
        return {polynomial(rank_), lift(c1_), polynomial(ch2_)};
    }

    friend bool operator==(sheaf_data const &, sheaf_data const &) = default;

private:
    int rank_;
    ns_class c1_;
    rational ch2_;
};

// E (x) O(D): ch is multiplicative, ch(O(D)) = 1 + D + D^2/2.
inline sheaf_data tensor_line(sheaf_data const &e, ns_class const &divisor, surface_geometry const &geom)
{
    rational const rank(e.rank());
    auto const ch2 = e.ch2() + intersect(e.c1(), divisor, geom) + rank * intersect(divisor, divisor, geom) / rational(2);
    return sheaf_data(e.rank(), e.c1() + rank * divisor, ch2);
}

inline sheaf_data dual(sheaf_data const &e)
{
    return sheaf_data(e.rank(), -e.c1(), e.ch2());
}

// Middle term of 0 -> F -> E -> G -> 0; ch is additive.
inline sheaf_data extension_sum(sheaf_data const &sub, sheaf_data const &quotient)
{
    return sheaf_data(sub.rank() + quotient.rank(), sub.c1() + quotient.c1(), sub.ch2() + quotient.ch2());
}

inline rational degree(sheaf_data const &e, surface_geometry const &geom, ns_class const &omega)
{
    return intersect(e.c1(), omega, geom);
}

// mu(E) = (c1(E).omega) / rank.
inline rational slope(sheaf_data const &e, surface_geometry const &geom, ns_class const &omega)
{
    return degree(e, geom, omega) / rational(e.rank());
}

} // namespace projstab

#endif
