#ifndef PROJSTAB_FUTAKI_TEST_CONFIG_HPP
#define PROJSTAB_FUTAKI_TEST_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <projstab/chern/sheaf.hpp>

namespace projstab
{

// Whether the degeneration E ~> F + G is known not to be a product test
// configuration. This is not decidable from Chern data.
enum class nonproduct { yes, no, unknown };

inline ::std::string to_string(nonproduct n)
{
    switch (n) {
        case nonproduct::yes:
            return "yes";
        case nonproduct::no:
            return "no";
        case nonproduct::unknown:
            return "unknown";
    }
    return "?";
}

// The test configuration on P(E) degenerating a rank 2 bundle E to F + G,
// with F a line subbundle and G = E/F a line bundle. The C* action has
// weight 1 on F and weight 0 on G.
class test_config
{
public:
    test_config(sheaf_data e, sheaf_data f, surface_geometry geom, ns_class omega,
                nonproduct np = nonproduct::unknown)
        : e_(::std::move(e)), f_(::std::move(f)), g_(quotient(e_, f_)), geom_(::std::move(geom)),
          omega_(::std::move(omega)), nonproduct_(np)
    {
        if (e_.rank() != 2) {
            throw ::std::invalid_argument("test configuration: E must have rank 2, got " + ::std::to_string(e_.rank()));
        }
        if (omega_.size() != geom_.ns_rank() || e_.c1().size() != geom_.ns_rank()) {
            throw dimension_error("test configuration: classes do not match the Picard rank");
        }
        if (!f_.is_line_bundle(geom_)) {
            throw ::std::invalid_argument("test configuration: F must be a line bundle (rank 1, ch2 = c1^2/2)");
        }
        if (!g_.is_line_bundle(geom_)) {
            throw ::std::invalid_argument("test configuration: E/F must be a line bundle (ch2(E) - ch2(F) = c1(G)^2/2)");
        }
    }

    sheaf_data const &e() const
    {
        return e_;
    }
    sheaf_data const &f() const
    {
        return f_;
    }
    sheaf_data const &g() const
    {
        return g_;
    }
    surface_geometry const &geom() const
    {
        return geom_;
    }
    ns_class const &omega() const
    {
        return omega_;
    }
    nonproduct is_nonproduct() const
    {
        return nonproduct_;
    }

private:
    static sheaf_data quotient(sheaf_data const &e, sheaf_data const &f)
    {
        if (e.rank() <= f.rank()) {
            throw ::std::invalid_argument("test configuration: subsheaf rank must be below rank E");
        }
        return sheaf_data(e.rank() - f.rank(), e.c1() - f.c1(), e.ch2() - f.ch2());
    }

    sheaf_data e_;
    sheaf_data f_;
    sheaf_data g_;
    surface_geometry geom_;
    ns_class omega_;
    nonproduct nonproduct_;
};

} // namespace projstab

#endif
