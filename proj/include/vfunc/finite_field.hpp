#ifndef VFUNC_FINITE_FIELD_HPP
#define VFUNC_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vfunc {

/// Element of F_q = F_p[w]/(modulus). The code is the base-p integer
/// c0 + c1*p + ... + c(n-1)*p^(n-1) of the coordinate vector in the basis
/// 1, w, ..., w^(n-1); elements of F_p therefore have code < p.
struct FqElem {
    std::uint32_t code = 0;

    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/*
 * Finite field F_{p^n} with full lookup tables.
 *
 * The field is constructed once and shared (immutable) by every value that
 * lives over it. Multiplication goes through discrete log/exp tables of a
 * primitive element; addition, Frobenius and p-th roots are tabulated.
 * Tables are sized q^2 for addition, so q is capped at kMaxOrder.
 */
class FiniteField {
public:
    static constexpr std::uint32_t kMaxOrder = 1024;

    /// Builds F_{p^n}. The modulus is a coefficient list c0..cn (low degree
    /// first, monic). Without one, a shipped default is used for
    /// (2,2), (3,2), (5,2) and otherwise the smallest irreducible monic
    /// polynomial in coefficient order. Throws InvalidField.
    static std::shared_ptr<const FiniteField> create(int p, int n,
                                                     std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    FqElem zero() const noexcept { return FqElem{0}; }
    FqElem one() const noexcept { return FqElem{1}; }
    /// The class of the polynomial variable w (requires n >= 2).
    FqElem generator() const;
    /// Image of an integer in F_p.
    FqElem from_int(long long k) const noexcept;
    FqElem from_coeffs(std::span<const int> coeffs) const;
    std::vector<int> coeffs(FqElem x) const;
    FqElem element(std::uint32_t code) const;

    FqElem add(FqElem x, FqElem y) const noexcept { return FqElem{add_[x.code * q_ + y.code]}; }
    FqElem sub(FqElem x, FqElem y) const noexcept { return add(x, neg(y)); }
    FqElem neg(FqElem x) const noexcept { return FqElem{neg_[x.code]}; }
    FqElem mul(FqElem x, FqElem y) const noexcept {
        if (x.code == 0 || y.code == 0) return FqElem{0};
        return FqElem{exp_[log_[x.code] + log_[y.code]]};
    }
    FqElem inv(FqElem x) const;
    FqElem div(FqElem x, FqElem y) const { return mul(x, inv(y)); }
    FqElem pow(FqElem x, long long e) const;

    FqElem frobenius(FqElem x) const noexcept { return FqElem{frob_[x.code]}; }
    FqElem pth_root(FqElem x) const noexcept { return FqElem{root_[x.code]}; }
    /// Absolute trace to F_p, returned as a residue in [0, p).
    int abs_trace(FqElem x) const noexcept;
    /// Solution of x^p - x = c with the lexicographically smallest
    /// coordinate vector, or nullopt when abs_trace(c) != 0.
    std::optional<FqElem> artin_schreier_solve(FqElem c) const;
    bool is_in_prime_field(FqElem x) const noexcept { return x.code < static_cast<std::uint32_t>(p_); }

    /// "c0,c1,...,c(n-1)"
    std::string format(FqElem x) const;
    FqElem parse(std::string_view text) const;

    bool same_as(const FiniteField& other) const noexcept {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    FiniteField(int p, int n, std::vector<int> modulus);

    int p_;
    int n_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1), doubled to skip the modular reduction
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> frob_;
    std::vector<std::uint32_t> root_;
    std::vector<std::uint32_t> as_root_;  // canonical Artin-Schreier root, or q_ when none
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(int p) noexcept;
/// Brute-force irreducibility of a polynomial over F_p (coefficients low first).
bool is_irreducible_mod_p(std::span<const int> poly, int p);

}  // namespace vfunc

#endif  // VFUNC_FINITE_FIELD_HPP
