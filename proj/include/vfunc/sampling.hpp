#ifndef VFUNC_SAMPLING_HPP
#define VFUNC_SAMPLING_HPP

#include <random>

#include "vfunc/extension_algebra.hpp"

namespace vfunc {

// Random generators shared by the property tests, the acceptance suite and
// the CLI sweep. All draws go through std::mt19937_64 so a seed fixes the
// output on a given standard library.

FqElem random_element(const FiniteField& F, std::mt19937_64& rng);
FqElem random_nonzero(const FiniteField& F, std::mt19937_64& rng);
/// Uniform over F_q minus F_p.
FqElem random_outside_prime_field(const FiniteField& F, std::mt19937_64& rng);

/// Each exponent in [low, high] independently present with probability 1/2.
LaurentPoly random_laurent(const FieldPtr& field, int low, int high, std::mt19937_64& rng);

/// Random element of J supported on exponents in [-max_degree, -1].
LaurentPoly random_J(const FieldPtr& field, int max_degree, std::mt19937_64& rng);

/// Random valid (a, g1, g2). About a third of the draws set
/// g2 = -a^p g1 + (small J element) so that a^p g1 + g2 cancels, including f = 0.
PairPtr random_pair(const FieldPtr& field, int max_degree, std::mt19937_64& rng);

LElement random_L_element(const PairPtr& pair, int low, int high, std::mt19937_64& rng);

}  // namespace vfunc

#endif  // VFUNC_SAMPLING_HPP
