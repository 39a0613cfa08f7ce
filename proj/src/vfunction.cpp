#include "vfunc/vfunction.hpp"

#include "vfunc/error.hpp"

namespace vfunc {

namespace {

const GroupElement kSigma{1, 0};
const GroupElement kTau{0, 1};

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if (num % den != 0 && ((num > 0) == (den > 0))) ++q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

std::string_view route_name(Route r) noexcept { return r == Route::Formula ? "formula" : "oracle"; }

VResult v_formula(const ExtensionPair& pair) {
    const FiniteField& F = pair.F();
    const std::int64_t p = pair.p();
    const LaurentPoly f = pair.g1().scaled(F.frobenius(pair.a())) + pair.g2();
    const Valuation m = min(v_K(pair.g1()), p * v_K(f));
    const std::int64_t s = -m.value();  // finite: g1 != 0
    return VResult{Rational(ceil_div(s, p * p)), s, Route::Formula};
}

LaurentMatrix theta_conditions_matrix(const PairPtr& pair) {
    const auto n = static_cast<std::size_t>(pair->degree());
    const int p = pair->p();
    LaurentMatrix m(pair->field(), 2 * n, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const LElement e = LElement::monomial(pair, i, j);
            const LElement d_sigma = difference(kSigma, e);
            const LElement square = difference(kSigma, d_sigma);
            const LElement twist = difference(kTau, e) - d_sigma.scaled(pair->a());
            const auto col = static_cast<std::size_t>(i * p + j);
            for (std::size_t r = 0; r < n; ++r) {
                m(r, col) = square.coeffs()[r];
                m(n + r, col) = twist.coeffs()[r];
            }
        }
    return m;
}

ThetaBasis theta_lattice(const PairPtr& pair) {
    const std::int64_t order = pair->degree();
    // Natural monomial order already starts with the constant coordinate.
    const auto basis = kernel(theta_conditions_matrix(pair));
    if (basis.size() != 2)
        throw Error(ErrorKind::LatticeAssertionFailed,
                    "Theta conditions have a kernel of dimension " + std::to_string(basis.size()) + ", expected 2");
    LElement m1 = LElement::from_coeffs(pair, basis[0]);
    LElement m2 = LElement::from_coeffs(pair, basis[1]);
    if (m1 != LElement::monomial(pair, 0, 0))
        throw Error(ErrorKind::LatticeAssertionFailed, "first Theta generator is not the constant 1");
    if (!m2.coeff(0, 0).is_zero())
        throw Error(ErrorKind::LatticeAssertionFailed, "second Theta generator has a constant coordinate");

    const Valuation v2 = v_L(m2);
    const std::int64_t s = -v2.value();
    if (floor_mod(s, order) == 0)
        throw Error(ErrorKind::LatticeAssertionFailed,
                    "-v_L(m2) = " + std::to_string(s) + " is divisible by p^2; the Theta lattice does not split");
    return ThetaBasis{std::move(m1), std::move(m2), 0, ceil_div(s, order), s};
}

bool satisfies_theta_conditions(const LElement& m) {
    const LElement d_sigma = difference(kSigma, m);
    if (!difference(kSigma, d_sigma).is_zero()) return false;
    return difference(kTau, m) == d_sigma.scaled(m.pair()->a());
}

XiImage theta_to_xi(const LElement& m) {
    if (!satisfies_theta_conditions(m))
        throw Error(ErrorKind::NotInTheta, "m(sigma-1)^2 != 0 or m(tau-1) != a m(sigma-1)");
    return XiImage{difference(kSigma, m), m};
}

bool is_equivariant(const XiImage& xi) {
    const FqElem a = xi.x1.pair()->a();
    return act(kSigma, xi.x1) == xi.x1 && act(kSigma, xi.x2) == xi.x1 + xi.x2 && act(kTau, xi.x1) == xi.x1 &&
           act(kTau, xi.x2) == xi.x1.scaled(a) + xi.x2;
}

VResult v_oracle(const PairPtr& pair) {
    const ThetaBasis basis = theta_lattice(pair);
    const FieldPtr& field = pair->field();
    const LElement b1 = basis.m1.scaled(LaurentPoly::t_power(field, static_cast<int>(basis.e1)));
    const LElement b2 = basis.m2.scaled(LaurentPoly::t_power(field, static_cast<int>(basis.e2)));
    const XiImage phi1 = theta_to_xi(b1);
    const XiImage phi2 = theta_to_xi(b2);
    // Rows (phi_i(x1), phi_i(x2)).
    const LElement d = phi1.x1 * phi2.x2 - phi1.x2 * phi2.x1;
    const Valuation vd = v_L(d);
    if (vd.is_infinite()) throw Error(ErrorKind::LatticeAssertionFailed, "tuning-module determinant vanishes");
    const Rational value(vd.value(), pair->degree());
    if (value.denominator() != 1)
        throw Error(ErrorKind::LatticeAssertionFailed,
                    "v_L(det) = " + std::to_string(vd.value()) + " is not divisible by p^2");
    return VResult{value, basis.s, Route::Oracle};
}

}  // namespace vfunc
