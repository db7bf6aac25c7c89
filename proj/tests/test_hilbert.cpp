#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/errors.hpp"
#include "mono/hilbert.hpp"

using namespace mono;

namespace {

Monomial mon(std::vector<int> e) {
    return Monomial(std::vector<Int>(e.begin(), e.end()));
}

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(mon(std::move(g)));
    return MonomialIdeal::make(n, std::move(ms));
}

const MonomialIdeal kExample = ideal(
    3, {{0, 3, 0}, {3, 0, 0}, {0, 2, 2}, {2, 0, 2}, {0, 0, 4}});

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens,
                           int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::vector<Monomial> gens;
    std::size_t g = count(rng);
    while (gens.size() < g) {
        std::vector<Int> e(n);
        bool nz = false;
        for (auto& x : e) {
            x = exp(rng);
            if (x > 0) nz = true;
        }
        if (nz) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

} // namespace

TEST_CASE("k polynomial of simple ideals") {
    CHECK(k_polynomial(ideal(2, {{2, 0}})) == IntPoly({1, 0, -1}));
    CHECK(k_polynomial(ideal(3, {{2, 0, 0}})) == IntPoly({1, 0, -1}));
    CHECK(k_polynomial(ideal(2, {{1, 0}, {0, 1}})) == IntPoly({1, -2, 1}));
    CHECK(k_polynomial(MonomialIdeal::zero(3)) == IntPoly({1}));
    CHECK(k_polynomial(MonomialIdeal::unit(3)).is_zero());
}

TEST_CASE("k polynomial of the worked example factors with Q(1) = 26") {
    IntPoly k = k_polynomial(kExample);
    Int rem;
    IntPoly q = k;
    for (int i = 0; i < 3; ++i) {
        q = divide_one_minus_t(q, rem);
        CHECK(rem == 0);
    }
    CHECK(q.eval(1) == 26);
}

TEST_CASE("hilbert summary basics") {
    auto s = hilbert_summary(ideal(2, {{1, 1}}));
    CHECK(s.dim == 1);
    CHECK(s.q_poly == IntPoly({1, 1}));
    CHECK(s.mult == 2);
    CHECK(s.hilbert_coeffs.front() == 2);

    auto artinian = hilbert_summary(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}));
    CHECK(artinian.dim == 0);
    CHECK(artinian.mult == 16);

    auto ex = hilbert_summary(kExample);
    CHECK(ex.dim == 0);
    CHECK(ex.mult == 26);

    CHECK_THROWS_AS(hilbert_summary(MonomialIdeal::unit(2)), degenerate_input);
}

TEST_CASE("brute-force Hilbert function") {
    CHECK(hilbert_function_bruteforce(ideal(2, {{2, 0}}), 3) == 2);
    CHECK(hilbert_function_bruteforce(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 0) == 1);
    CHECK(hilbert_function_bruteforce(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 5) == 0);

    // Artinian: the counts over all degrees total the multiplicity.
    Int total = 0;
    for (int k = 0; k <= 12; ++k) total += hilbert_function_bruteforce(kExample, k);
    CHECK(total == 26);

    CHECK_THROWS_AS(hilbert_function_bruteforce(ideal(2, {{2, 0}}), 10, 3),
                    resource_limit);
}

TEST_CASE("series coefficients agree with brute force") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        auto I = random_ideal(rng, 4, 5, 3);
        IntPoly k = k_polynomial(I);
        for (int deg = 0; deg <= 10; ++deg)
            CHECK(hilbert_function_from_series(k, 4, deg) ==
                  hilbert_function_bruteforce(I, deg));
    }
}

TEST_CASE("factorization is exact: one more division leaves a remainder") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 40; ++round) {
        auto I = random_ideal(rng, 4, 5, 3);
        auto s = hilbert_summary(I);
        IntPoly back = s.q_poly;
        for (std::size_t i = 0; i < 4 - s.dim; ++i) back = back * one_minus_t_pow(1);
        CHECK(back == s.k_poly);
        Int rem;
        divide_one_minus_t(s.q_poly, rem);
        CHECK(rem != 0);
        CHECK(s.mult > 0);
        CHECK(s.hilbert_coeffs.front() == s.mult);
    }
}

TEST_CASE("inclusion-exclusion on the worked example") {
    auto q1 = ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
    auto q2 = ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 2}});
    CHECK(mult_engine(q1) == 16);
    CHECK(mult_engine(q2) == 18);
    CHECK(mult_engine(sum(q1, q2)) == 8);
    CHECK(mult_engine(intersect(q1, q2)) == 26);
}

TEST_CASE("hilbert polynomial matches the function for large degrees") {
    auto I = ideal(2, {{1, 1}});
    auto p = hilbert_polynomial(hilbert_summary(I));
    CHECK(p.degree() == 0);
    for (int k = 5; k <= 10; ++k)
        CHECK(p.eval(k) == Rational(hilbert_function_bruteforce(I, k)));

    auto s2 = hilbert_summary(ideal(2, {{2, 0}}));
    auto p2 = hilbert_polynomial(s2);
    CHECK(p2.degree() == 0);
    CHECK(p2.eval(7) == 2);

    auto I3 = ideal(3, {{1, 1, 0}});
    auto p3 = hilbert_polynomial(hilbert_summary(I3));
    for (int k = 5; k <= 10; ++k)
        CHECK(p3.eval(k) == Rational(hilbert_function_bruteforce(I3, k)));

    // Zero-dimensional quotients have the zero Hilbert polynomial.
    CHECK(hilbert_polynomial(hilbert_summary(kExample)).is_zero());
}

TEST_CASE("hilbert polynomial agrees with brute force on random ideals") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 25; ++round) {
        auto I = random_ideal(rng, 3, 4, 2);
        auto s = hilbert_summary(I);
        auto p = hilbert_polynomial(s);
        long start = std::max<long>(s.q_poly.degree() + 1, 0);
        for (long k = start; k < start + 5; ++k) {
            Rational expected(hilbert_function_bruteforce(I, k));
            CHECK(p.eval(k) == expected);
        }
    }
}
