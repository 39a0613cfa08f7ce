#ifndef VFUNC_EXTENSION_ALGEBRA_HPP
#define VFUNC_EXTENSION_ALGEBRA_HPP

#include <memory>
#include <utility>
#include <vector>

#include "vfunc/exact_linalg.hpp"
#include "vfunc/laurent.hpp"

namespace vfunc {

class ExtensionPair;
using PairPtr = std::shared_ptr<const ExtensionPair>;

/*
 * Parameters (a, g1, g2) of a (Z/p)^2-extension L = K[alpha, beta] with
 * alpha^p - alpha = g1 and beta^p - beta = g2, together with the subgroup
 * of SL_2(F_q) generated by [[1,1],[0,1]] and [[1,a],[0,1]].
 *
 * Only validate() creates instances, so every ExtensionPair satisfies:
 * a outside F_p, g1 and g2 in J, g1 != 0 and g2 not in F_p*g1.
 */
class ExtensionPair {
public:
    static PairPtr validate(FieldPtr field, FqElem a, LaurentPoly g1, LaurentPoly g2);

    const FieldPtr& field() const noexcept { return field_; }
    const FiniteField& F() const noexcept { return *field_; }
    int p() const noexcept { return field_->p(); }
    /// |G| = p^2 = [L : K].
    int degree() const noexcept { return p() * p(); }
    FqElem a() const noexcept { return a_; }
    const LaurentPoly& g1() const noexcept { return g1_; }
    const LaurentPoly& g2() const noexcept { return g2_; }

    bool same_as(const ExtensionPair& other) const noexcept {
        return field_->same_as(*other.field_) && a_ == other.a_ && g1_ == other.g1_ && g2_ == other.g2_;
    }

private:
    ExtensionPair(FieldPtr field, FqElem a, LaurentPoly g1, LaurentPoly g2)
        : field_(std::move(field)), a_(a), g1_(std::move(g1)), g2_(std::move(g2)) {}

    FieldPtr field_;
    FqElem a_;
    LaurentPoly g1_;
    LaurentPoly g2_;
};

/// sigma^i tau^j with exponents reduced mod p. sigma fixes alpha and sends
/// beta to beta + 1; tau sends alpha to alpha + 1 and fixes beta.
struct GroupElement {
    int sigma = 0;
    int tau = 0;

    static GroupElement make(int sigma_exp, int tau_exp, int p);
    GroupElement compose(const GroupElement& other, int p) const { return make(sigma + other.sigma, tau + other.tau, p); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Element of L in the monomial basis alpha^i beta^j (0 <= i, j < p).
/// Coefficient (i, j) is stored at index i*p + j.
class LElement {
public:
    static LElement zero(PairPtr pair);
    static LElement from_K(PairPtr pair, const LaurentPoly& c);
    static LElement monomial(PairPtr pair, int i, int j);
    static LElement alpha(PairPtr pair) { return monomial(std::move(pair), 1, 0); }
    static LElement beta(PairPtr pair) { return monomial(std::move(pair), 0, 1); }
    /// gamma = a*alpha + beta.
    static LElement gamma(PairPtr pair);
    static LElement from_coeffs(PairPtr pair, std::vector<LaurentPoly> coeffs);

    const PairPtr& pair() const noexcept { return pair_; }
    int p() const noexcept { return pair_->p(); }
    const LaurentPoly& coeff(int i, int j) const { return coeffs_[index(i, j)]; }
    const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;
    /// True iff only the constant monomial is nonzero.
    bool is_in_K() const noexcept;

    LElement operator-() const;
    LElement& operator+=(const LElement& y);
    LElement& operator-=(const LElement& y);
    friend LElement operator+(LElement x, const LElement& y) { return x += y; }
    friend LElement operator-(LElement x, const LElement& y) { return x -= y; }
    friend LElement operator*(const LElement& x, const LElement& y);
    LElement scaled(const LaurentPoly& c) const;
    LElement scaled(FqElem c) const;
    LElement pow(unsigned e) const;

    friend bool operator==(const LElement& x, const LElement& y) { return x.coeffs_ == y.coeffs_; }

private:
    LElement(PairPtr pair, std::vector<LaurentPoly> coeffs) : pair_(std::move(pair)), coeffs_(std::move(coeffs)) {}
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * p() + j); }
    void check_same(const LElement& y) const;

    PairPtr pair_;
    std::vector<LaurentPoly> coeffs_;
};

inline LElement mul_L(const LElement& x, const LElement& y) { return x * y; }

/// Image of x under sigma^i tau^j: alpha -> alpha + j, beta -> beta + i.
LElement act(const GroupElement& g, const LElement& x);

/// x(g - 1) := act(g, x) - x.
LElement difference(const GroupElement& g, const LElement& x);

/// All p^2 elements of G, sigma exponent major.
std::vector<GroupElement> group_elements(int p);

/// Matrix of y -> x*y in the monomial basis (column k = image of monomial k).
LaurentMatrix mult_matrix(const LElement& x);

/// N_{L/K}(x) as the product of the p^2 Galois conjugates of x.
LaurentPoly norm_L(const LElement& x);
/// N_{L/K}(x) as det(mult_matrix(x)); the second, independent route.
LaurentPoly norm_via_matrix(const LElement& x);
/// Relative norm N_{L/L^sigma}(x) = prod_i act(sigma^i, x), lying in K[alpha].
LElement norm_to_fixed_of_sigma(const LElement& x);

/// Normalized valuation of the totally ramified L: v_L(t) = p^2.
Valuation v_L(const LElement& x);

/// A_i = binom(alpha, i) and B_j = binom(beta, j) for 0 <= i, j < p.
std::pair<std::vector<LElement>, std::vector<LElement>> binomial_basis(const PairPtr& pair);

}  // namespace vfunc

#endif  // VFUNC_EXTENSION_ALGEBRA_HPP
