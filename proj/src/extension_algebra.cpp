#include "vfunc/extension_algebra.hpp"

#include <algorithm>

#include "vfunc/error.hpp"

namespace vfunc {

namespace {

// binom(k, l) mod p for 0 <= l <= k < p.
std::vector<std::vector<int>> binomial_table(int p) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p), 0));
    for (int k = 0; k < p; ++k) {
        c[k][0] = 1;
        for (int l = 1; l <= k; ++l) c[k][l] = (c[k - 1][l - 1] + (l < k ? c[k - 1][l] : 0)) % p;
    }
    return c;
}

int pow_mod(int base, int e, int p) {
    int r = 1;
    for (int k = 0; k < e; ++k) r = (r * base) % p;
    return r;
}

}  // namespace

PairPtr ExtensionPair::validate(FieldPtr field, FqElem a, LaurentPoly g1, LaurentPoly g2) {
    if (!g1.field()->same_as(*field) || !g2.field()->same_as(*field))
        throw Error(ErrorKind::InvalidField, "g1 and g2 must live over the pair's coefficient field");
    if (a.code >= field->order()) throw Error(ErrorKind::InvalidField, "a is not an element of F_q");
    if (!is_in_J(g1)) throw Error(ErrorKind::NotInJ, "g1 has a term t^e with e >= 0 or p | e");
    if (!is_in_J(g2)) throw Error(ErrorKind::NotInJ, "g2 has a term t^e with e >= 0 or p | e");
    if (g1.is_zero()) throw Error(ErrorKind::G1Zero, "g1 must be nonzero");
    for (int s = 0; s < field->p(); ++s)
        if (g2 == g1.scaled(field->from_int(s)))
            throw Error(ErrorKind::G2DependentOnG1, "g2 = " + std::to_string(s) + " * g1 lies in F_p*g1");
    if (field->is_in_prime_field(a)) throw Error(ErrorKind::AInPrimeField, "a = " + field->format(a) + " lies in F_p");
    return PairPtr(new ExtensionPair(std::move(field), a, std::move(g1), std::move(g2)));
}

GroupElement GroupElement::make(int sigma_exp, int tau_exp, int p) {
    auto red = [p](int v) { return ((v % p) + p) % p; };
    return GroupElement{red(sigma_exp), red(tau_exp)};
}

std::vector<GroupElement> group_elements(int p) {
    std::vector<GroupElement> out;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) out.push_back(GroupElement{i, j});
    return out;
}

LElement LElement::zero(PairPtr pair) {
    const auto size = static_cast<std::size_t>(pair->degree());
    std::vector<LaurentPoly> coeffs(size, LaurentPoly(pair->field()));
    return LElement(std::move(pair), std::move(coeffs));
}

LElement LElement::from_K(PairPtr pair, const LaurentPoly& c) {
    LElement x = zero(std::move(pair));
    x.coeffs_[0] = c;
    return x;
}

LElement LElement::monomial(PairPtr pair, int i, int j) {
    LElement x = zero(std::move(pair));
    x.coeffs_[x.index(i, j)] = LaurentPoly::t_power(x.pair_->field(), 0);
    return x;
}

LElement LElement::gamma(PairPtr pair) {
    const FqElem a = pair->a();
    return alpha(pair).scaled(a) + beta(pair);
}

LElement LElement::from_coeffs(PairPtr pair, std::vector<LaurentPoly> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(pair->degree()))
        throw Error(ErrorKind::DimensionMismatch, "L element needs p^2 coefficients");
    return LElement(std::move(pair), std::move(coeffs));
}

bool LElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

bool LElement::is_in_K() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

void LElement::check_same(const LElement& y) const {
    if (pair_ != y.pair_ && !pair_->same_as(*y.pair_))
        throw Error(ErrorKind::MixedExtensions, "operands belong to different extensions");
}

LElement LElement::operator-() const {
    LElement r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LElement& LElement::operator+=(const LElement& y) {
    check_same(y);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += y.coeffs_[k];
    return *this;
}

LElement& LElement::operator-=(const LElement& y) {
    check_same(y);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= y.coeffs_[k];
    return *this;
}

LElement operator*(const LElement& x, const LElement& y) {
    x.check_same(y);
    const int p = x.p();
    const std::size_t wide = static_cast<std::size_t>(2 * p - 1);
    const FieldPtr& field = x.pair_->field();
    std::vector<LaurentPoly> acc(wide * wide, LaurentPoly(field));
    for (int i1 = 0; i1 < p; ++i1)
        for (int j1 = 0; j1 < p; ++j1) {
            const LaurentPoly& a = x.coeff(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < p; ++i2)
                for (int j2 = 0; j2 < p; ++j2) {
                    const LaurentPoly& b = y.coeff(i2, j2);
                    if (b.is_zero()) continue;
                    acc[static_cast<std::size_t>(i1 + i2) * wide + static_cast<std::size_t>(j1 + j2)] += a * b;
                }
        }
    // alpha^k = alpha^(k-p+1) + g1 alpha^(k-p) for k >= p; one downward pass suffices.
    const LaurentPoly& g1 = x.pair_->g1();
    const LaurentPoly& g2 = x.pair_->g2();
    for (std::size_t i = wide; i-- > static_cast<std::size_t>(p);)
        for (std::size_t j = 0; j < wide; ++j) {
            LaurentPoly c = std::move(acc[i * wide + j]);
            acc[i * wide + j] = LaurentPoly(field);
            if (c.is_zero()) continue;
            acc[(i - static_cast<std::size_t>(p) + 1) * wide + j] += c;
            acc[(i - static_cast<std::size_t>(p)) * wide + j] += c * g1;
        }
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i)
        for (std::size_t j = wide; j-- > static_cast<std::size_t>(p);) {
            LaurentPoly c = std::move(acc[i * wide + j]);
            acc[i * wide + j] = LaurentPoly(field);
            if (c.is_zero()) continue;
            acc[i * wide + j - static_cast<std::size_t>(p) + 1] += c;
            acc[i * wide + j - static_cast<std::size_t>(p)] += c * g2;
        }
    LElement r = LElement::zero(x.pair_);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            r.coeffs_[r.index(i, j)] = std::move(acc[static_cast<std::size_t>(i) * wide + static_cast<std::size_t>(j)]);
    return r;
}

LElement LElement::scaled(const LaurentPoly& c) const {
    LElement r(*this);
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

LElement LElement::scaled(FqElem c) const {
    LElement r(*this);
    for (auto& x : r.coeffs_) x = x.scaled(c);
    return r;
}

LElement LElement::pow(unsigned e) const {
    LElement result = monomial(pair_, 0, 0);
    LElement base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

LElement act(const GroupElement& g, const LElement& x) {
    const int p = x.p();
    const FiniteField& F = x.pair()->F();
    const auto binom = binomial_table(p);
    const GroupElement h = GroupElement::make(g.sigma, g.tau, p);
    // (alpha + tau)^k = sum_l binom(k, l) tau^(k-l) alpha^l, likewise beta with sigma.
    auto shift_coeff = [&](int k, int l, int by) { return binom[k][l] * pow_mod(by, k - l, p) % p; };
    std::vector<LaurentPoly> out(static_cast<std::size_t>(p * p), LaurentPoly(x.pair()->field()));
    for (int k = 0; k < p; ++k)
        for (int n = 0; n < p; ++n) {
            const LaurentPoly& c = x.coeff(k, n);
            if (c.is_zero()) continue;
            for (int l = 0; l <= k; ++l) {
                const int ca = shift_coeff(k, l, h.tau);
                if (ca == 0) continue;
                for (int m = 0; m <= n; ++m) {
                    const int cb = shift_coeff(n, m, h.sigma);
                    if (cb == 0) continue;
                    out[static_cast<std::size_t>(l * p + m)] += c.scaled(F.from_int(ca * cb));
                }
            }
        }
    return LElement::from_coeffs(x.pair(), std::move(out));
}

LElement difference(const GroupElement& g, const LElement& x) { return act(g, x) - x; }

LaurentMatrix mult_matrix(const LElement& x) {
    const int p = x.p();
    const auto n = static_cast<std::size_t>(p * p);
    LaurentMatrix m(x.pair()->field(), n, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const LElement column = x * LElement::monomial(x.pair(), i, j);
            const auto c = static_cast<std::size_t>(i * p + j);
            for (std::size_t r = 0; r < n; ++r) m(r, c) = column.coeffs()[r];
        }
    return m;
}

LElement norm_to_fixed_of_sigma(const LElement& x) {
    LElement acc = x;
    for (int i = 1; i < x.p(); ++i) acc = acc * act(GroupElement{i, 0}, x);
    return acc;
}

LaurentPoly norm_L(const LElement& x) {
    const LElement y = norm_to_fixed_of_sigma(x);
    LElement acc = y;
    for (int j = 1; j < x.p(); ++j) acc = acc * act(GroupElement{0, j}, y);
    if (!acc.is_in_K()) throw Error(ErrorKind::DimensionMismatch, "norm product left K; extension data inconsistent");
    return acc.coeff(0, 0);
}

LaurentPoly norm_via_matrix(const LElement& x) { return det(mult_matrix(x)); }

Valuation v_L(const LElement& x) {
    if (x.is_zero()) return Valuation::infinity();
    return v_K(norm_L(x));
}

std::pair<std::vector<LElement>, std::vector<LElement>> binomial_basis(const PairPtr& pair) {
    const int p = pair->p();
    const FiniteField& F = pair->F();
    auto chain = [&](const LElement& var) {
        std::vector<LElement> out{LElement::monomial(pair, 0, 0)};
        for (int i = 1; i < p; ++i) {
            const LElement factor = var - LElement::from_K(pair, LaurentPoly::constant(pair->field(), F.from_int(i - 1)));
            out.push_back((out.back() * factor).scaled(F.inv(F.from_int(i))));
        }
        return out;
    };
    return {chain(LElement::alpha(pair)), chain(LElement::beta(pair))};
}

}  // namespace vfunc
