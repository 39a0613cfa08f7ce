#include "vfunc/laurent.hpp"

#include <algorithm>
#include <map>

#include "vfunc/error.hpp"

namespace vfunc {

LaurentPoly LaurentPoly::monomial(FieldPtr field, FqElem c, int exponent) {
    LaurentPoly f(std::move(field));
    if (c.code != 0) {
        f.low_ = exponent;
        f.coeffs_.push_back(c);
    }
    return f;
}

LaurentPoly LaurentPoly::t_power(FieldPtr field, int exponent) {
    const FqElem one = field->one();
    return monomial(std::move(field), one, exponent);
}

LaurentPoly LaurentPoly::from_terms(FieldPtr field, const std::vector<Term>& terms) {
    LaurentPoly f(field);
    for (const auto& [e, c] : terms) f += monomial(field, c, e);
    return f;
}

FqElem LaurentPoly::coeff(int exponent) const noexcept {
    if (is_zero() || exponent < low_ || exponent > high()) return FqElem{};
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i].code != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

std::size_t LaurentPoly::term_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](FqElem c) { return c.code != 0; }));
}

void LaurentPoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](FqElem c) { return c.code != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    while (coeffs_.back().code == 0) coeffs_.pop_back();
    const auto skip = first - coeffs_.begin();
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), first);
        low_ += static_cast<int>(skip);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.coeffs_) c = field_->neg(c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    if (g.is_zero()) return *this;
    if (is_zero()) {
        low_ = g.low_;
        coeffs_ = g.coeffs_;
        return *this;
    }
    const int lo = std::min(low_, g.low_);
    const int hi = std::max(high(), g.high());
    if (lo < low_ || hi > high()) {
        std::vector<FqElem> wide(static_cast<std::size_t>(hi - lo + 1));
        std::copy(coeffs_.begin(), coeffs_.end(), wide.begin() + (low_ - lo));
        coeffs_ = std::move(wide);
        low_ = lo;
    }
    const FiniteField& F = *field_;
    const std::size_t offset = static_cast<std::size_t>(g.low_ - low_);
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[offset + i] = F.add(coeffs_[offset + i], g.coeffs_[i]);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) { return *this += -g; }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r(f.field_);
    if (f.is_zero() || g.is_zero()) return r;
    const FiniteField& F = *f.field_;
    r.low_ = f.low_ + g.low_;
    r.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, FqElem{});
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        const FqElem a = f.coeffs_[i];
        if (a.code == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(a, g.coeffs_[j]));
    }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::scaled(FqElem c) const {
    if (c.code == 0) return LaurentPoly(field_);
    LaurentPoly r(*this);
    for (auto& x : r.coeffs_) x = field_->mul(x, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(*this);
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = t_power(field_, 0);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::frobenius() const {
    LaurentPoly r(field_);
    if (is_zero()) return r;
    const int p = field_->p();
    r.low_ = low_ * p;
    r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(p) + 1, FqElem{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i * static_cast<std::size_t>(p)] = field_->frobenius(coeffs_[i]);
    return r;
}

LaurentPoly LaurentPoly::truncated(int from, int to) const {
    LaurentPoly r(field_);
    if (is_zero()) return r;
    const int lo = std::max(from, low_);
    const int hi = std::min(to, high());
    if (lo > hi) return r;
    r.low_ = lo;
    r.coeffs_.assign(coeffs_.begin() + (lo - low_), coeffs_.begin() + (hi - low_ + 1));
    r.normalize();
    return r;
}

LaurentPoly artin_schreier_map(const LaurentPoly& h) { return h.frobenius() - h; }

bool is_in_J(const LaurentPoly& f) {
    const int p = f.F().p();
    for (const auto& [e, c] : f.terms())
        if (e >= 0 || e % p == 0) return false;
    return true;
}

JReduction reduce_to_J(const LaurentPoly& g) {
    const FieldPtr& field = g.field();
    const FiniteField& F = *field;
    const int p = F.p();
    LaurentPoly witness(field);

    // Negative and constant part only; ordered so that folding t^{-jp} -> t^{-j}
    // lands on a key processed later.
    std::map<int, FqElem> work;
    for (const auto& [e, c] : g.terms())
        if (e <= 0) work[e] = c;

    LaurentPoly rep(field);
    while (!work.empty()) {
        auto it = work.begin();
        const auto [e, c] = *it;
        work.erase(it);
        if (c.code == 0) continue;
        if (e == 0) {
            auto root = F.artin_schreier_solve(c);
            if (!root)
                throw Error(ErrorKind::NontrivialUnramifiedPart,
                            "constant term " + F.format(c) + " has nonzero trace; enlarge the coefficient field");
            witness += LaurentPoly::constant(field, *root);
        } else if (e % p == 0) {
            const FqElem root = F.pth_root(c);
            const int folded = e / p;
            witness += LaurentPoly::monomial(field, root, folded);
            auto [slot, inserted] = work.try_emplace(folded, root);
            if (!inserted) slot->second = F.add(slot->second, root);
        } else {
            rep += LaurentPoly::monomial(field, c, e);
        }
    }
    return {std::move(rep), std::move(witness)};
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero Laurent polynomial");
    const FieldPtr& field = f.field();
    const FiniteField& F = *field;
    if (f.is_zero()) return {LaurentPoly(field), LaurentPoly(field)};

    const LaurentPoly divisor = g.shifted(-g.low());
    LaurentPoly rem = f.shifted(-f.low());
    LaurentPoly quot(field);
    const int dg = divisor.high();
    const FqElem lead_inv = F.inv(divisor.coeff(dg));
    while (!rem.is_zero() && rem.high() >= dg) {
        const int shift = rem.high() - dg;
        const FqElem factor = F.mul(rem.coeff(rem.high()), lead_inv);
        const LaurentPoly step = LaurentPoly::monomial(field, factor, shift);
        quot += step;
        rem -= step * divisor;
    }
    return {std::move(quot), std::move(rem)};
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero Laurent polynomial");
    if (f.is_zero()) return LaurentPoly(f.field());
    auto [quot, rem] = poly_divmod(f, g);
    if (!rem.is_zero()) throw Error(ErrorKind::NotDivisible, "inexact Laurent polynomial division");
    return quot.shifted(f.low() - g.low());
}

LaurentPoly unit_normal_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly a = f.is_zero() ? f : f.shifted(-f.low());
    LaurentPoly b = g.is_zero() ? g : g.shifted(-g.low());
    while (!b.is_zero()) {
        LaurentPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.shifted(-r.low());
    }
    if (a.is_zero()) return a;
    a = a.shifted(-a.low());
    return a.scaled(a.F().inv(a.leading_coeff()));
}

}  // namespace vfunc
