#ifndef PROJSTAB_CHERN_SURFACE_HPP
#define PROJSTAB_CHERN_SURFACE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <projstab/chern/ns_class.hpp>

namespace projstab
{

using intersection_matrix = ::std::vector<::std::vector<rational>>;

class non_symmetric_matrix : public ::std::invalid_argument
{
public:
    using ::std::invalid_argument::invalid_argument;
};

// Numerical data of a polarised surface B: the intersection form on a
// Neron-Severi basis, c1(B) = -K_B, and the integrated Todd class
// todd2 = chi(O_B).
class surface_geometry
{
public:
    surface_geometry(::std::vector<::std::string> basis_labels, intersection_matrix intersection, ns_class c1B,
                     rational todd2, ::std::optional<rational> c2B = ::std::nullopt)
        : labels_(::std::move(basis_labels)), matrix_(::std::move(intersection)), c1B_(::std::move(c1B)),
          todd2_(::std::move(todd2)), c2B_(::std::move(c2B))
    {
        auto const rho = labels_.size();
        if (rho == 0) {
            throw dimension_error("surface geometry needs a nonempty Neron-Severi basis");
        }
        if (matrix_.size() != rho) {
            throw dimension_error("intersection matrix has " + ::std::to_string(matrix_.size()) + " rows, expected "
                                  + ::std::to_string(rho));
        }
        for (auto const &row : matrix_) {
            if (row.size() != rho) {
                throw dimension_error("intersection matrix row has " + ::std::to_string(row.size())
                                      + " entries, expected " + ::std::to_string(rho));
            }
        }
        for (::std::size_t a = 0; a < rho; ++a) {
            for (::std::size_t b = a + 1; b < rho; ++b) {
                if (matrix_[a][b] != matrix_[b][a]) {
                    throw non_symmetric_matrix("intersection matrix is not symmetric at (" + ::std::to_string(a) + ", "
                                               + ::std::to_string(b) + ")");
                }
            }
        }
        if (c1B_.size() != rho) {
            throw dimension_error("c1(B) has " + ::std::to_string(c1B_.size()) + " coordinates, expected "
                                  + ::std::to_string(rho));
        }
    }

    // Ruled surface P(V) over a genus g curve, basis {b, f} with b the class
    // of O(1) and f a fibre: b^2 = deg V, b.f = 1, f^2 = 0,
    // -K = 2b + 2(1-g)f, chi(O) = 1 - g.
    static surface_geometry ruled(int genus, int deg_v = 0)
    {
        if (genus < 0) {
            throw ::std::invalid_argument("ruled surface: genus must be nonnegative");
        }
        return surface_geometry({"b", "f"}, {{rational(deg_v), rational(1)}, {rational(1), rational(0)}},
                                ns_class{rational(2), rational(2 * (1 - genus))}, rational(1 - genus));
    }

    ::std::size_t ns_rank() const
    {
        return labels_.size();
    }

    ::std::vector<::std::string> const &basis_labels() const
    {
        return labels_;
    }

    intersection_matrix const &intersection() const
    {
        return matrix_;
    }

    ns_class const &c1B() const
    {
        return c1B_;
    }

    rational const &todd2() const
    {
        return todd2_;
    }

    ::std::optional<rational> const &c2B() const
    {
        return c2B_;
    }

    ns_class canonical() const
    {
        return -c1B_;
    }

    ns_class basis_vector(::std::size_t j) const
    {
        auto out = ::std::vector<rational>(ns_rank());
        out.at(j) = rational(1);
        return ns_class(::std::move(out));
    }

    // rho = 2 with f^2 = 0 and b.f = 1.
    bool is_ruled_shape() const
    {
        return ns_rank() == 2 && matrix_[1][1].is_zero() && matrix_[0][1] == rational(1);
    }

    // Noether: chi(O) = (c1^2 + c2) / 12. Empty when c2(B) was not supplied.
    ::std::optional<bool> noether_consistent() const;

private:
    ::std::vector<::std::string> labels_;
    intersection_matrix matrix_;
    ns_class c1B_;
    rational todd2_;
    ::std::optional<rational> c2B_;
};

// a^T M b.
template <typename T>
T intersect(basic_ns_class<T> const &a, basic_ns_class<T> const &b, surface_geometry const &geom)
{
    auto const rho = geom.ns_rank();
    if (a.size() != rho || b.size() != rho) {
        throw dimension_error("intersect: classes of rank " + ::std::to_string(a.size()) + " and "
                              + ::std::to_string(b.size()) + " on a surface of Picard rank " + ::std::to_string(rho));
    }
    auto const &m = geom.intersection();
    T out{};
    for (::std::size_t x = 0; x < rho; ++x) {
        for (::std::size_t y = 0; y < rho; ++y) {
            if (!m[x][y].is_zero()) {
                out += a[x] * m[x][y] * b[y];
            }
        }
    }
    return out;
}

inline ::std::optional<bool> surface_geometry::noether_consistent() const
{
    if (!c2B_) {
        return ::std::nullopt;
    }
    return todd2_ * rational(12) == intersect(c1B_, c1B_, *this) + *c2B_;
}

} // namespace projstab

#endif
