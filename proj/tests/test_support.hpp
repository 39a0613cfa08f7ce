#ifndef VFUNC_TEST_SUPPORT_HPP
#define VFUNC_TEST_SUPPORT_HPP

#include <vector>

#include "vfunc/finite_field.hpp"
#include "vfunc/laurent.hpp"

namespace vfunc::testing {

// Schoolbook multiplication of coordinate vectors reduced by the modulus;
// independent of the log/exp tables used by FiniteField.
inline std::vector<int> naive_mul(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& modulus,
                                  int p) {
    const std::size_t n = x.size();
    std::vector<int> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t k = prod.size(); k-- > n;) {
        const int c = prod[k];
        for (std::size_t i = 0; i <= n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(n);
    return prod;
}

inline FqElem w(const FiniteField& F) { return F.generator(); }

inline LaurentPoly mono(const FieldPtr& field, FqElem c, int e) { return LaurentPoly::monomial(field, c, e); }
inline LaurentPoly tpow(const FieldPtr& field, int e) { return LaurentPoly::t_power(field, e); }

inline std::vector<FieldPtr> small_fields() {
    return {FiniteField::create(2, 2), FiniteField::create(3, 2), FiniteField::create(2, 3), FiniteField::create(5, 2),
            FiniteField::create(2, 4)};
}

}  // namespace vfunc::testing

#endif  // VFUNC_TEST_SUPPORT_HPP
