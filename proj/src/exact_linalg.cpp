#include "vfunc/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "vfunc/error.hpp"

namespace vfunc {

LaurentMatrix::LaurentMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(field_)) {}

LaurentMatrix LaurentMatrix::identity(FieldPtr field, std::size_t n) {
    LaurentMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::t_power(field, 0);
    return m;
}

LaurentMatrix LaurentMatrix::from_rows(FieldPtr field, const std::vector<LaurentVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    LaurentMatrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void LaurentMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    LaurentMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

LaurentVector LaurentMatrix::apply(const LaurentVector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length");
    LaurentVector out(rows_, LaurentPoly(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

namespace {

std::optional<std::size_t> choose_pivot(const LaurentMatrix& m, std::size_t col, std::size_t from_row) {
    std::optional<std::size_t> best;
    for (std::size_t i = from_row; i < m.rows(); ++i) {
        if (m(i, col).is_zero()) continue;
        if (!best || v_K(m(i, col)) < v_K(m(*best, col))) best = i;
    }
    return best;
}

struct Reduced {
    LaurentMatrix matrix;
    std::vector<std::size_t> pivot_cols;  // pivot of row k is at pivot_cols[k]
    LaurentPoly pivot;                    // common value of all pivot entries
};

// Fraction-free Gauss-Jordan elimination; all pivot entries end up equal to the
// last pivot chosen, and every division is exact.
Reduced fraction_free_rref(LaurentMatrix m) {
    const FieldPtr field = m.field();
    LaurentPoly prev = LaurentPoly::t_power(field, 0);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const auto pr = choose_pivot(m, c, r);
        if (!pr) continue;
        m.swap_rows(r, *pr);
        const LaurentPoly piv = m(r, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const LaurentPoly factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                LaurentPoly num = piv * m(i, j);
                if (!factor.is_zero() && !m(r, j).is_zero()) num -= factor * m(r, j);
                m(i, j) = divide_exact(num, prev);
            }
            m(i, c) = LaurentPoly(field);
        }
        pivot_cols.push_back(c);
        prev = piv;
        ++r;
    }
    return {std::move(m), std::move(pivot_cols), std::move(prev)};
}

LaurentVector primitive_normalized(LaurentVector v, std::size_t pivot) {
    const FieldPtr field = v[pivot].field();
    LaurentPoly g(field);
    for (const auto& x : v)
        if (!x.is_zero()) g = unit_normal_gcd(g, x);
    if (g.is_zero()) return v;
    for (auto& x : v) x = divide_exact(x, g);
    int low = 0;
    bool any = false;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        low = any ? std::min(low, x.low()) : x.low();
        any = true;
    }
    const FqElem scale = field->inv(v[pivot].leading_coeff());
    for (auto& x : v) x = x.shifted(-low).scaled(scale);
    return v;
}

}  // namespace

LaurentPoly det(const LaurentMatrix& input) {
    if (input.rows() != input.cols())
        throw Error(ErrorKind::NonSquare, "determinant of a " + std::to_string(input.rows()) + "x" +
                                              std::to_string(input.cols()) + " matrix");
    const FieldPtr& field = input.field();
    const std::size_t n = input.rows();
    LaurentMatrix m = input;
    LaurentPoly prev = LaurentPoly::t_power(field, 0);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        const auto pr = choose_pivot(m, k, k);
        if (!pr) return LaurentPoly(field);
        if (*pr != k) {
            m.swap_rows(k, *pr);
            negate = !negate;
        }
        const LaurentPoly& piv = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const LaurentPoly factor = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = piv * m(i, j);
                if (!factor.is_zero() && !m(k, j).is_zero()) num -= factor * m(k, j);
                m(i, j) = divide_exact(num, prev);
            }
            m(i, k) = LaurentPoly(field);
        }
        prev = m(k, k);
    }
    if (n == 0) return prev;
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::size_t rank(const LaurentMatrix& m) { return fraction_free_rref(m).pivot_cols.size(); }

std::vector<LaurentVector> kernel(const LaurentMatrix& m, std::span<const std::size_t> order) {
    const FieldPtr& field = m.field();
    const std::size_t n = m.cols();
    std::vector<std::size_t> perm(n);
    if (order.empty()) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
    } else {
        if (order.size() != n) throw Error(ErrorKind::DimensionMismatch, "coordinate order length");
        perm.assign(order.begin(), order.end());
        std::vector<bool> seen(n, false);
        for (std::size_t c : perm) {
            if (c >= n || seen[c]) throw Error(ErrorKind::DimensionMismatch, "coordinate order is not a permutation");
            seen[c] = true;
        }
    }

    LaurentMatrix permuted(field, m.rows(), n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < n; ++k) permuted(i, k) = m(i, perm[k]);

    const Reduced red = fraction_free_rref(permuted);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<LaurentVector> raw;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        LaurentVector v(n, LaurentPoly(field));
        v[f] = red.pivot;
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) v[red.pivot_cols[k]] = -red.matrix(k, f);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return {};

    // Echelonize the kernel basis itself in the requested coordinate order.
    const Reduced basis = fraction_free_rref(LaurentMatrix::from_rows(field, raw));
    std::vector<LaurentVector> out;
    for (std::size_t k = 0; k < basis.pivot_cols.size(); ++k) {
        LaurentVector v(n, LaurentPoly(field));
        for (std::size_t c = 0; c < n; ++c) v[c] = basis.matrix(k, c);
        v = primitive_normalized(std::move(v), basis.pivot_cols[k]);
        LaurentVector original(n, LaurentPoly(field));
        for (std::size_t c = 0; c < n; ++c) original[perm[c]] = std::move(v[c]);
        out.push_back(std::move(original));
    }
    return out;
}

}  // namespace vfunc
