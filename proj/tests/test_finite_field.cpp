#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "vfunc/error.hpp"
#include "vfunc/sampling.hpp"

using namespace vfunc;
using vfunc::testing::naive_mul;

TEST_CASE("F_4 arithmetic") {
    const auto F4 = FiniteField::create(2, 2);
    const FqElem w = F4->generator();
    const FqElem w1 = F4->add(w, F4->one());
    CHECK(F4->modulus() == std::vector<int>{1, 1, 1});
    CHECK(F4->mul(w, w) == w1);
    CHECK(F4->inv(F4->one()) == F4->one());
    CHECK(F4->mul(w, F4->inv(w)) == F4->one());
    CHECK(F4->frobenius(w) == w1);
    CHECK(F4->frobenius(F4->zero()) == F4->zero());
    CHECK(F4->abs_trace(w) == 1);
    CHECK(F4->abs_trace(F4->zero()) == 0);
    CHECK_FALSE(F4->artin_schreier_solve(w).has_value());
    CHECK(F4->artin_schreier_solve(F4->zero()) == F4->zero());
    // w^2 + w = 1; the two roots are w and w+1, w has the smaller coordinates.
    CHECK(F4->artin_schreier_solve(F4->one()) == w);
    CHECK_FALSE(F4->is_in_prime_field(w));
    CHECK(F4->is_in_prime_field(F4->one()));
}

TEST_CASE("F_9 arithmetic") {
    const auto F9 = FiniteField::create(3, 2);
    const FqElem w = F9->generator();
    CHECK(F9->mul(w, w) == F9->from_int(2));
    const FqElem two_w = F9->mul(F9->from_int(2), w);
    // w^3 = -w = 2w, so the cube root of 2w is w.
    CHECK(F9->frobenius(w) == two_w);
    CHECK(F9->pth_root(two_w) == w);
    CHECK(F9->is_in_prime_field(F9->from_int(2)));
}

TEST_CASE("division by zero") {
    const auto F = FiniteField::create(5, 2);
    CHECK_THROWS_AS(F->inv(F->zero()), Error);
    try {
        F->inv(F->zero());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("construction errors and moduli") {
    CHECK_THROWS_AS(FiniteField::create(4, 2), Error);
    CHECK_THROWS_AS(FiniteField::create(2, 2, std::vector<int>{1, 0, 1}), Error);  // x^2+1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(FiniteField::create(2, 11), Error);                           // q above the table cap
    CHECK(FiniteField::create(5, 2)->modulus() == std::vector<int>{3, 0, 1});
    CHECK(FiniteField::create(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    const auto F8 = FiniteField::create(2, 3);
    CHECK(is_irreducible_mod_p(F8->modulus(), 2));
    const auto F9b = FiniteField::create(3, 2, std::vector<int>{2, 1, 1});  // x^2 + x + 2
    CHECK(F9b->order() == 9);
    CHECK(F9b->generator() == F9b->element(3));
}

TEST_CASE("text encoding") {
    const auto F = FiniteField::create(3, 2);
    const FqElem x = F->parse("2,1");
    CHECK(F->coeffs(x) == std::vector<int>{2, 1});
    CHECK(F->format(x) == "2,1");
    CHECK(F->parse(" 1 ") == F->one());
    CHECK_THROWS_AS(F->parse("3,0"), Error);
    CHECK_THROWS_AS(F->parse("1,,0"), Error);
    CHECK_THROWS_AS(F->parse("1,0,0"), Error);
    CHECK_THROWS_AS(F->parse("x"), Error);
}

TEST_CASE("table multiplication matches schoolbook reduction (exhaustive, q <= 25)") {
    for (const auto& F : testing::small_fields()) {
        if (F->order() > 25) continue;
        for (std::uint32_t x = 0; x < F->order(); ++x)
            for (std::uint32_t y = 0; y < F->order(); ++y) {
                const auto expect = naive_mul(F->coeffs(FqElem{x}), F->coeffs(FqElem{y}), F->modulus(), F->p());
                REQUIRE(F->coeffs(F->mul(FqElem{x}, FqElem{y})) == expect);
            }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (const auto& F : testing::small_fields()) {
        for (int k = 0; k < 300; ++k) {
            const FqElem x = random_element(*F, rng), y = random_element(*F, rng), z = random_element(*F, rng);
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
            CHECK(F->add(x, F->neg(x)) == F->zero());
            CHECK(F->sub(F->add(x, y), y) == x);
            if (x.code != 0) CHECK(F->mul(x, F->inv(x)) == F->one());
            CHECK(F->pow(x, F->p()) == F->frobenius(x));
        }
    }
}

TEST_CASE("Frobenius is an automorphism and p-th root inverts it (exhaustive, q <= 25)") {
    for (const auto& F : testing::small_fields()) {
        if (F->order() > 25) continue;
        for (std::uint32_t xc = 0; xc < F->order(); ++xc) {
            const FqElem x{xc};
            REQUIRE(F->pth_root(F->frobenius(x)) == x);
            REQUIRE(F->frobenius(F->pth_root(x)) == x);
            long long root_exp = 1;
            for (int i = 0; i + 1 < F->n(); ++i) root_exp *= F->p();
            REQUIRE(F->pth_root(x) == F->pow(x, root_exp));
            REQUIRE(F->pow(x, F->order()) == x);
            for (std::uint32_t yc = 0; yc < F->order(); ++yc) {
                const FqElem y{yc};
                REQUIRE(F->frobenius(F->add(x, y)) == F->add(F->frobenius(x), F->frobenius(y)));
                REQUIRE(F->frobenius(F->mul(x, y)) == F->mul(F->frobenius(x), F->frobenius(y)));
            }
        }
    }
}

TEST_CASE("Artin-Schreier solvability matches the trace (exhaustive, q <= 25)") {
    for (const auto& F : testing::small_fields()) {
        if (F->order() > 25) continue;
        for (std::uint32_t cc = 0; cc < F->order(); ++cc) {
            const FqElem c{cc};
            std::set<std::uint32_t> roots;
            std::vector<int> smallest;
            for (std::uint32_t x = 0; x < F->order(); ++x)
                if (F->sub(F->frobenius(FqElem{x}), FqElem{x}) == c) {
                    roots.insert(x);
                    const auto coords = F->coeffs(FqElem{x});
                    if (smallest.empty() || coords < smallest) smallest = coords;
                }
            REQUIRE((roots.size() == 0 || roots.size() == static_cast<std::size_t>(F->p())));
            const auto sol = F->artin_schreier_solve(c);
            REQUIRE(sol.has_value() == (F->abs_trace(c) == 0));
            REQUIRE(sol.has_value() == !roots.empty());
            if (sol) REQUIRE(F->coeffs(*sol) == smallest);
        }
    }
}
