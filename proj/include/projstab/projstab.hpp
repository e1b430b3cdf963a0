#ifndef PROJSTAB_PROJSTAB_HPP
#define PROJSTAB_PROJSTAB_HPP

#include <projstab/exactcore/asymptotic.hpp>
#include <projstab/exactcore/faulhaber.hpp>
#include <projstab/exactcore/polynomial.hpp>
#include <projstab/exactcore/rational.hpp>

#include <projstab/chern/ns_class.hpp>
#include <projstab/chern/riemann_roch.hpp>
#include <projstab/chern/sheaf.hpp>
#include <projstab/chern/surface.hpp>
#include <projstab/chern/sym_power.hpp>

#include <projstab/stability/compare.hpp>
#include <projstab/stability/ruled_scan.hpp>

#include <projstab/futaki/closed_forms.hpp>
#include <projstab/futaki/expansion.hpp>
#include <projstab/futaki/futaki.hpp>
#include <projstab/futaki/test_config.hpp>

#endif
