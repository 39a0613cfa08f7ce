#include "vfunc/sampling.hpp"

#include "vfunc/error.hpp"

namespace vfunc {

FqElem random_element(const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
    return FqElem{dist(rng)};
}

FqElem random_nonzero(const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(1, F.order() - 1);
    return FqElem{dist(rng)};
}

FqElem random_outside_prime_field(const FiniteField& F, std::mt19937_64& rng) {
    if (F.n() < 2) throw Error(ErrorKind::InvalidField, "F_p has no element outside F_p");
    std::uniform_int_distribution<std::uint32_t> dist(static_cast<std::uint32_t>(F.p()), F.order() - 1);
    return FqElem{dist(rng)};
}

LaurentPoly random_laurent(const FieldPtr& field, int low, int high, std::mt19937_64& rng) {
    std::bernoulli_distribution present(0.5);
    LaurentPoly f(field);
    for (int e = low; e <= high; ++e)
        if (present(rng)) f += LaurentPoly::monomial(field, random_nonzero(*field, rng), e);
    return f;
}

LaurentPoly random_J(const FieldPtr& field, int max_degree, std::mt19937_64& rng) {
    std::bernoulli_distribution present(0.5);
    LaurentPoly f(field);
    for (int e = -max_degree; e <= -1; ++e) {
        if (e % field->p() == 0) continue;
        if (present(rng)) f += LaurentPoly::monomial(field, random_nonzero(*field, rng), e);
    }
    return f;
}

PairPtr random_pair(const FieldPtr& field, int max_degree, std::mt19937_64& rng) {
    const FiniteField& F = *field;
    std::uniform_int_distribution<int> mode(0, 2);
    std::uniform_int_distribution<int> small_degree(1, std::max(1, max_degree / 2));
    for (;;) {
        const FqElem a = random_outside_prime_field(F, rng);
        LaurentPoly g1 = random_J(field, max_degree, rng);
        if (g1.is_zero()) continue;
        LaurentPoly g2(field);
        if (mode(rng) == 0)
            g2 = g1.scaled(F.neg(F.frobenius(a))) + random_J(field, small_degree(rng), rng);
        else
            g2 = random_J(field, max_degree, rng);
        try {
            return ExtensionPair::validate(field, a, std::move(g1), std::move(g2));
        } catch (const Error&) {
            // g2 fell into F_p * g1; draw again.
        }
    }
}

LElement random_L_element(const PairPtr& pair, int low, int high, std::mt19937_64& rng) {
    std::vector<LaurentPoly> coeffs;
    for (int k = 0; k < pair->degree(); ++k) coeffs.push_back(random_laurent(pair->field(), low, high, rng));
    return LElement::from_coeffs(pair, std::move(coeffs));
}

}  // namespace vfunc
