#ifndef VFUNC_VFUNCTION_HPP
#define VFUNC_VFUNCTION_HPP

#include <cstdint>
#include <string_view>

#include <boost/rational.hpp>

#include "vfunc/exact_linalg.hpp"
#include "vfunc/extension_algebra.hpp"

namespace vfunc {

using Rational = boost::rational<std::int64_t>;

enum class Route { Formula, Oracle };

std::string_view route_name(Route r) noexcept;

struct VResult {
    /// v_V(L); a rational with denominator dividing p^2, integral in practice.
    Rational value;
    /// s = -v_L(gamma) > 0 for the formula; the measured -v_L(m2) for the oracle.
    std::int64_t s = 0;
    Route route = Route::Formula;
};

/// v_V(g1, g2) = ceil(s / p^2) with f = a^p g1 + g2 and
/// s = -min(v_K(g1), p v_K(f)); f = 0 contributes infinity to the min.
VResult v_formula(const ExtensionPair& pair);

/// Stacked 2p^2 x p^2 matrix of m -> m(sigma-1)^2 and m -> m(tau-1) - a m(sigma-1)
/// in the monomial basis; its kernel is Theta_L tensored with K.
LaurentMatrix theta_conditions_matrix(const PairPtr& pair);

/// O_K-basis {t^e1 m1, t^e2 m2} of Theta_L = {m in O_L : Theta conditions}.
struct ThetaBasis {
    LElement m1;
    LElement m2;
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    /// -v_L(m2); never a multiple of p^2.
    std::int64_t s = 0;
};

/// Solves the Theta conditions by exact kernel computation (constant
/// coordinate first) and scales the second generator into O_L. Throws
/// LatticeAssertionFailed when the kernel is not of the expected shape or
/// -v_L(m2) is divisible by p^2, in which case the lattice does not split.
ThetaBasis theta_lattice(const PairPtr& pair);

/// phi(x1), phi(x2) of the tuning-module element attached to m.
struct XiImage {
    LElement x1;
    LElement x2;
};

bool satisfies_theta_conditions(const LElement& m);

/// phi = m(sigma-1) phi_1 + m phi_2. Throws NotInTheta.
XiImage theta_to_xi(const LElement& m);

/// Checks phi(x_j g) = act(g, phi(x_j)) for g in {sigma, tau}, where
/// x1 sigma = x1, x2 sigma = x1 + x2, x1 tau = x1, x2 tau = a x1 + x2.
bool is_equivariant(const XiImage& xi);

/// (1/p^2) v_L(det(phi_i(x_j))) over the Theta basis. Throws
/// LatticeAssertionFailed if the result is not integral.
VResult v_oracle(const PairPtr& pair);

}  // namespace vfunc

#endif  // VFUNC_VFUNCTION_HPP
