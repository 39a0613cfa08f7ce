#ifndef VFUNC_EXACT_LINALG_HPP
#define VFUNC_EXACT_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "vfunc/laurent.hpp"

namespace vfunc {

using LaurentVector = std::vector<LaurentPoly>;

/// Dense row-major matrix over F_q[t, 1/t].
class LaurentMatrix {
public:
    LaurentMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static LaurentMatrix identity(FieldPtr field, std::size_t n);
    static LaurentMatrix from_rows(FieldPtr field, const std::vector<LaurentVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }

    LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    LaurentVector apply(const LaurentVector& v) const;

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPoly> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination. In every column the
/// pivot is the candidate of minimal v_K, ties to the lowest row. Throws
/// NonSquare.
LaurentPoly det(const LaurentMatrix& m);

std::size_t rank(const LaurentMatrix& m);

/*
 * Basis of the right kernel over Frac(F_q[t, 1/t]).
 *
 * `order` lists the coordinates by priority (empty = natural order). The
 * returned vectors, read in that order, form a reduced echelon basis: each has
 * a pivot coordinate, pivots strictly increase, and every vector vanishes at
 * the other vectors' pivots. Each vector has entries in F_q[t], no common
 * factor (t included), and a pivot whose lowest-order coefficient is 1.
 */
std::vector<LaurentVector> kernel(const LaurentMatrix& m, std::span<const std::size_t> order = {});

}  // namespace vfunc

#endif  // VFUNC_EXACT_LINALG_HPP
