#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "vfunc/error.hpp"
#include "vfunc/extension_algebra.hpp"
#include "vfunc/sampling.hpp"

using namespace vfunc;
using vfunc::testing::mono;
using vfunc::testing::tpow;

namespace {

ErrorKind validation_error(const FieldPtr& F, FqElem a, const LaurentPoly& g1, const LaurentPoly& g2) {
    try {
        ExtensionPair::validate(F, a, g1, g2);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("pair unexpectedly valid");
    return ErrorKind::ParseError;
}

PairPtr family_pair_p2(FqElem c) {
    const auto F4 = FiniteField::create(2, 2);
    return ExtensionPair::validate(F4, F4->generator(), tpow(F4, -3), mono(F4, c, -3) + tpow(F4, -1));
}

LElement K(const PairPtr& pair, const LaurentPoly& c) { return LElement::from_K(pair, c); }

}  // namespace

TEST_CASE("pair validation") {
    const auto F4 = FiniteField::create(2, 2);
    const FqElem w = F4->generator();
    CHECK_NOTHROW(ExtensionPair::validate(F4, w, tpow(F4, -3), mono(F4, w, -3) + tpow(F4, -1)));
    CHECK(validation_error(F4, w, tpow(F4, -3), tpow(F4, -3)) == ErrorKind::G2DependentOnG1);
    CHECK(validation_error(F4, w, tpow(F4, -3), LaurentPoly::zero(F4)) == ErrorKind::G2DependentOnG1);
    CHECK(validation_error(F4, F4->one(), tpow(F4, -3), tpow(F4, -1)) == ErrorKind::AInPrimeField);
    CHECK(validation_error(F4, w, LaurentPoly::zero(F4), tpow(F4, -1)) == ErrorKind::G1Zero);
    CHECK(validation_error(F4, w, tpow(F4, -2), tpow(F4, -1)) == ErrorKind::NotInJ);
    CHECK(validation_error(F4, w, tpow(F4, -1), tpow(F4, 1)) == ErrorKind::NotInJ);
    const auto F9 = FiniteField::create(3, 2);
    const FqElem two = F9->from_int(2);
    CHECK(validation_error(F9, F9->generator(), tpow(F9, -1), mono(F9, two, -1)) == ErrorKind::G2DependentOnG1);
    // -a^p g1 is not an F_p-multiple of g1.
    CHECK_NOTHROW(ExtensionPair::validate(F9, F9->generator(), tpow(F9, -1),
                                          mono(F9, F9->neg(F9->frobenius(F9->generator())), -1)));
}

TEST_CASE("multiplication and the defining relations") {
    for (int p : {2, 3, 5}) {
        const auto F = FiniteField::create(p, 2);
        const auto pair = ExtensionPair::validate(F, F->generator(), tpow(F, -1) + tpow(F, -p - 1), tpow(F, -2 * p + 1));
        const LElement alpha = LElement::alpha(pair), beta = LElement::beta(pair);
        CHECK(alpha.pow(static_cast<unsigned>(p - 1)) * alpha == alpha + K(pair, pair->g1()));
        CHECK(beta.pow(static_cast<unsigned>(p)) - beta == K(pair, pair->g2()));
        CHECK(act(GroupElement{0, 1}, alpha) == alpha + K(pair, tpow(F, 0)));
        CHECK(act(GroupElement{1, 0}, alpha) == alpha);
        CHECK(act(GroupElement{1, 0}, beta) == beta + K(pair, tpow(F, 0)));
        const LElement gamma = LElement::gamma(pair);
        CHECK(act(GroupElement{1, 0}, gamma) == gamma + K(pair, tpow(F, 0)));
        CHECK(act(GroupElement{0, 1}, gamma) == gamma + K(pair, LaurentPoly::constant(F, F->generator())));
    }
}

TEST_CASE("ring and group-action laws on random elements") {
    std::mt19937_64 rng(31);
    for (int p : {2, 3}) {
        const auto F = FiniteField::create(p, 2);
        for (int k = 0; k < 8; ++k) {
            const PairPtr pair = random_pair(F, p * p + 1, rng);
            const LElement x = random_L_element(pair, -3, 2, rng);
            const LElement y = random_L_element(pair, -3, 2, rng);
            const LElement z = random_L_element(pair, -2, 2, rng);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * LElement::monomial(pair, 0, 0) == x);
            for (const auto& g : group_elements(p)) {
                CHECK(act(g, x * y) == act(g, x) * act(g, y));
                CHECK(act(g, act(GroupElement{1, 1}, x)) == act(g.compose(GroupElement{1, 1}, p), x));
            }
            LElement xs = x, xt = x;
            for (int i = 0; i < p; ++i) {
                xs = act(GroupElement{1, 0}, xs);
                xt = act(GroupElement{0, 1}, xt);
            }
            CHECK(xs == x);
            CHECK(xt == x);
            CHECK(act(GroupElement{1, 0}, act(GroupElement{0, 1}, x)) == act(GroupElement{0, 1}, act(GroupElement{1, 0}, x)));
            CHECK(act(GroupElement{1, 1}, K(pair, pair->g1())) == K(pair, pair->g1()));
        }
    }
}

TEST_CASE("norm and valuation") {
    std::mt19937_64 rng(32);
    for (int p : {2, 3, 5}) {
        const auto F = FiniteField::create(p, 2);
        for (int k = 0; k < 4; ++k) {
            const PairPtr pair = random_pair(F, p * p + 1, rng);
            CHECK(v_L(K(pair, tpow(F, 1))) == Valuation(p * p));
            CHECK(v_L(LElement::alpha(pair)) == p * v_K(pair->g1()));
            CHECK(v_L(LElement::beta(pair)) == p * v_K(pair->g2()));
            CHECK(v_L(LElement::zero(pair)).is_infinite());
            const LaurentPoly c = random_laurent(F, -2, 2, rng);
            CHECK(norm_L(K(pair, c)) == c.pow(static_cast<unsigned>(p * p)));
        }
    }
}

TEST_CASE("Galois-product norm equals the multiplication-matrix determinant") {
    std::mt19937_64 rng(33);
    for (int p : {2, 3}) {
        const auto F = FiniteField::create(p, 2);
        for (int k = 0; k < 6; ++k) {
            const PairPtr pair = random_pair(F, p * p + 1, rng);
            const LElement x = random_L_element(pair, -2, 1, rng);
            CHECK(norm_L(x) == norm_via_matrix(x));
        }
    }
    const auto F5 = FiniteField::create(5, 2);
    const PairPtr pair5 = random_pair(F5, 6, rng);
    const LElement g5 = LElement::gamma(pair5);
    CHECK(norm_L(g5) == norm_via_matrix(g5));
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(34);
    for (int p : {2, 3}) {
        const auto F = FiniteField::create(p, 2);
        for (int k = 0; k < 6; ++k) {
            const PairPtr pair = random_pair(F, p * p + 1, rng);
            const LElement x = random_L_element(pair, -2, 1, rng);
            const LElement y = random_L_element(pair, -2, 1, rng);
            CHECK(norm_L(x * y) == norm_L(x) * norm_L(y));
            CHECK(v_L(x * y) == v_L(x) + v_L(y));
        }
    }
}

TEST_CASE("relative norm of gamma") {
    std::mt19937_64 rng(35);
    for (int p : {2, 3, 5}) {
        const auto F = FiniteField::create(p, 2);
        for (int k = 0; k < 5; ++k) {
            const PairPtr pair = random_pair(F, p * p + 1, rng);
            const FqElem ap = F->frobenius(pair->a());
            const LElement gamma = LElement::gamma(pair);
            const LaurentPoly f = pair->g1().scaled(ap) + pair->g2();
            const LElement expected = LElement::alpha(pair).scaled(F->sub(ap, pair->a())) + K(pair, f);
            CHECK(norm_to_fixed_of_sigma(gamma) == expected);
            CHECK(gamma.pow(static_cast<unsigned>(p)) - gamma == expected);
        }
    }
}

TEST_CASE("binomial basis") {
    const auto F3 = FiniteField::create(3, 2);
    const auto pair3 = ExtensionPair::validate(F3, F3->generator(), tpow(F3, -1), tpow(F3, -2));
    const auto [A, B] = binomial_basis(pair3);
    const LElement alpha = LElement::alpha(pair3);
    CHECK(A[0] == LElement::monomial(pair3, 0, 0));
    CHECK(A[1] == alpha);
    CHECK(B[0] == LElement::monomial(pair3, 0, 0));
    CHECK(A[2] == (alpha * alpha - alpha).scaled(F3->from_int(2)));
    CHECK(difference(GroupElement{0, 1}, A[2]) == alpha);

    for (int p : {2, 3, 5}) {
        const auto F = FiniteField::create(p, 2);
        const auto pair = ExtensionPair::validate(F, F->generator(), tpow(F, -1), tpow(F, -p - 1));
        const auto [As, Bs] = binomial_basis(pair);
        for (int i = 1; i < p; ++i) {
            CHECK(difference(GroupElement{0, 1}, As[i]) == As[i - 1]);
            CHECK(difference(GroupElement{1, 0}, Bs[i]) == Bs[i - 1]);
            CHECK(difference(GroupElement{1, 0}, As[i]).is_zero());
        }
        // (A_i B_j) is a K-basis: the change-of-basis matrix is invertible.
        const auto n = static_cast<std::size_t>(p * p);
        LaurentMatrix change(F, n, n);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                const LElement e = As[i] * Bs[j];
                for (std::size_t r = 0; r < n; ++r) change(r, static_cast<std::size_t>(i * p + j)) = e.coeffs()[r];
            }
        CHECK_FALSE(det(change).is_zero());
    }
}

TEST_CASE("mixing elements of different extensions") {
    const auto F4 = FiniteField::create(2, 2);
    const auto p1 = family_pair_p2(F4->generator());
    const auto p2 = family_pair_p2(F4->add(F4->generator(), F4->one()));
    try {
        LElement::alpha(p1) + LElement::alpha(p2);
        FAIL("expected MixedExtensions");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedExtensions);
    }
    CHECK_THROWS_AS(LElement::alpha(p1) * LElement::beta(p2), Error);
    // Structurally equal pairs built separately are interchangeable.
    const auto p1b = family_pair_p2(F4->generator());
    CHECK_NOTHROW(LElement::alpha(p1) * LElement::beta(p1b));
}
