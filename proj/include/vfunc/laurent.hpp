#ifndef VFUNC_LAURENT_HPP
#define VFUNC_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vfunc/finite_field.hpp"

namespace vfunc {

/// Value of a discrete valuation: an integer, or +infinity for zero.
class Valuation {
public:
    Valuation() = default;  // infinity
    Valuation(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }
    /// Throws std::bad_optional_access on infinity.
    std::int64_t value() const { return value_.value(); }

    friend Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(*a.value_ + *b.value_);
    }
    /// Multiplication by a positive integer scale (ramification index).
    friend Valuation operator*(std::int64_t k, Valuation a) {
        if (a.is_infinite()) return infinity();
        return Valuation(k * *a.value_);
    }
    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<std::int64_t> value_;
};

inline Valuation min(Valuation a, Valuation b) { return a <= b ? a : b; }

/*
 * Laurent polynomial sum_{e} c_e t^e over F_q: a finitely supported element
 * of K = F_q((t)).
 *
 * Stored densely from the lowest nonzero exponent to the highest, with no
 * zero coefficient at either end; the zero polynomial has empty storage.
 * This keeps equality structural.
 */
class LaurentPoly {
public:
    using Term = std::pair<int, FqElem>;

    explicit LaurentPoly(FieldPtr field) : field_(std::move(field)) {}

    static LaurentPoly zero(FieldPtr field) { return LaurentPoly(std::move(field)); }
    static LaurentPoly constant(FieldPtr field, FqElem c) { return monomial(std::move(field), c, 0); }
    static LaurentPoly monomial(FieldPtr field, FqElem c, int exponent);
    /// t^exponent with coefficient 1.
    static LaurentPoly t_power(FieldPtr field, int exponent);
    static LaurentPoly from_terms(FieldPtr field, const std::vector<Term>& terms);

    const FieldPtr& field() const noexcept { return field_; }
    const FiniteField& F() const noexcept { return *field_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent; meaningless for zero.
    int low() const noexcept { return low_; }
    /// Highest exponent; meaningless for zero.
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    FqElem coeff(int exponent) const noexcept;
    /// Nonzero terms, exponents strictly increasing.
    std::vector<Term> terms() const;
    std::size_t term_count() const noexcept;

    Valuation valuation() const { return is_zero() ? Valuation::infinity() : Valuation(low_); }
    /// Coefficient of the lowest-order term; zero for the zero polynomial.
    FqElem leading_coeff() const noexcept { return is_zero() ? FqElem{} : coeffs_.front(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly scaled(FqElem c) const;
    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned e) const;
    /// Coefficientwise Frobenius with exponents multiplied by p, i.e. f^p.
    LaurentPoly frobenius() const;

    /// Part of f supported on exponents in [from, to].
    LaurentPoly truncated(int from, int to) const;

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.low_ == g.low_ && f.coeffs_ == g.coeffs_;
    }

private:
    void normalize();

    FieldPtr field_;
    int low_ = 0;
    std::vector<FqElem> coeffs_;
};

inline LaurentPoly scalar_mul(FqElem c, const LaurentPoly& f) { return f.scaled(c); }
inline Valuation v_K(const LaurentPoly& f) { return f.valuation(); }
inline LaurentPoly frobenius_series(const LaurentPoly& f) { return f.frobenius(); }

/// x^p - x.
LaurentPoly artin_schreier_map(const LaurentPoly& h);

/// True iff every exponent e satisfies e < 0 and p does not divide e.
bool is_in_J(const LaurentPoly& f);

struct JReduction {
    LaurentPoly rep;
    LaurentPoly witness;
};

/*
 * Reduces g modulo x^p - x into the representative space J.
 *
 * Terms c t^{-jp} are folded to c^{1/p} t^{-j} (most negative exponents first,
 * so folded terms are revisited), the constant term is absorbed through an
 * Artin-Schreier root in F_q, and the positive part is dropped. The result
 * satisfies: g - rep - (witness^p - witness) has strictly positive support.
 *
 * Throws NontrivialUnramifiedPart when the constant term has nonzero trace.
 */
JReduction reduce_to_J(const LaurentPoly& g);

/// Exact quotient f / g in F_q[t, 1/t]. Throws DivisionByZero or NotDivisible.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Quotient and remainder of polynomial division after shifting both
/// operands so their lowest exponent is 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& f, const LaurentPoly& g);

/// Greatest common divisor in F_q[t, 1/t], normalized to a polynomial with
/// constant term 1 (units c*t^k are divided out). gcd(0, 0) = 0.
LaurentPoly unit_normal_gcd(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace vfunc

#endif  // VFUNC_LAURENT_HPP
