#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/errors.hpp"
#include "mono/ideal.hpp"

using namespace mono;

namespace {

Monomial mon(std::vector<int> e) {
    return Monomial(std::vector<Int>(e.begin(), e.end()));
}

MonomialIdeal ideal3(std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(mon(std::move(g)));
    return MonomialIdeal::make(3, std::move(ms));
}

// (x1^2, x2^2, x3^4) and (x1^3, x2^3, x3^2); their intersection is the
// non-irreducible primary ideal used throughout.
const MonomialIdeal kQ1 = ideal3({{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
const MonomialIdeal kQ2 = ideal3({{3, 0, 0}, {0, 3, 0}, {0, 0, 2}});

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

TEST_CASE("minimize drops divisible generators") {
    auto I = MonomialIdeal::make(2, {mon({2, 0}), mon({3, 0}), mon({0, 1})});
    CHECK(I == MonomialIdeal::make(2, {mon({2, 0}), mon({0, 1})}));
    CHECK(I.gens().size() == 2);
}

TEST_CASE("minimize reproduces the worked five-generator set") {
    auto raw = ideal3({{0, 3, 0},
                       {3, 0, 0},
                       {0, 0, 4},
                       {2, 0, 2},
                       {0, 2, 2},
                       {2, 3, 0},
                       {3, 2, 0},
                       {3, 0, 4},
                       {0, 3, 4}});
    auto expected = ideal3({{0, 3, 0}, {3, 0, 0}, {0, 2, 2}, {2, 0, 2}, {0, 0, 4}});
    CHECK(raw == expected);
    CHECK(raw.gens().size() == 5);
}

TEST_CASE("empty generating set is the zero ideal") {
    auto I = MonomialIdeal::make(3, {});
    CHECK(I.is_zero());
    CHECK_FALSE(I.is_unit());
}

TEST_CASE("minimize rejects wrong-length generators") {
    CHECK_THROWS_AS(MonomialIdeal::make(3, {Monomial::one(2)}), malformed_input);
}

TEST_CASE("membership") {
    auto I = MonomialIdeal::make(2, {mon({2, 0})});
    CHECK(contains(I, mon({3, 1})));
    CHECK_FALSE(contains(ideal3({{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}), mon({1, 1, 3})));
    CHECK_FALSE(contains(intersect(kQ1, kQ2), mon({2, 2, 0})));
    CHECK_THROWS_AS(contains(I, Monomial::one(3)), malformed_input);
}

TEST_CASE("intersection matches the worked example") {
    auto I = intersect(kQ1, kQ2);
    CHECK(I == ideal3({{0, 3, 0}, {3, 0, 0}, {0, 2, 2}, {2, 0, 2}, {0, 0, 4}}));

    auto unit = MonomialIdeal::unit(3);
    CHECK(intersect(kQ1, unit) == kQ1);

    auto a = MonomialIdeal::make(2, {mon({1, 0})});
    auto b = MonomialIdeal::make(2, {mon({0, 2})});
    CHECK(intersect(a, b) == MonomialIdeal::make(2, {mon({1, 2})}));
}

TEST_CASE("sum and product") {
    CHECK(sum(kQ1, kQ2) == ideal3({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    auto x = MonomialIdeal::make(2, {mon({1, 0})});
    auto y = MonomialIdeal::make(2, {mon({0, 1})});
    CHECK(product(x, y) == MonomialIdeal::make(2, {mon({1, 1})}));
    CHECK(sum(kQ1, MonomialIdeal::zero(3)) == kQ1);
}

TEST_CASE("powers") {
    auto I = MonomialIdeal::make(2, {mon({1, 0}), mon({0, 1})});
    CHECK(power(I, 2) == MonomialIdeal::make(2, {mon({2, 0}), mon({1, 1}), mon({0, 2})}));
    auto J = MonomialIdeal::make(2, {mon({2, 0}), mon({0, 3})});
    CHECK(power(J, 2) == MonomialIdeal::make(2, {mon({4, 0}), mon({2, 3}), mon({0, 6})}));
    CHECK(power(J, 1) == J);
    CHECK(power(J, 0).is_unit());
}

TEST_CASE("special powers") {
    auto I = MonomialIdeal::make(3, {mon({1, 2, 0}), mon({0, 0, 1})});
    CHECK(special_power(I, 2) == MonomialIdeal::make(3, {mon({2, 4, 0}), mon({0, 0, 2})}));
    CHECK(special_power(I, 1) == I);
    CHECK(special_power(intersect(kQ1, kQ2), 2) ==
          intersect(special_power(kQ1, 2), special_power(kQ2, 2)));
    CHECK_THROWS_AS(special_power(I, 0), malformed_input);
}

TEST_CASE("colon by a monomial") {
    auto I = MonomialIdeal::make(2, {mon({2, 0}), mon({0, 3})});
    CHECK(colon_by_monomial(power(I, 2), mon({0, 3})) == I);
    CHECK(colon_by_monomial(MonomialIdeal::make(2, {mon({1, 1})}), mon({0, 1})) ==
          MonomialIdeal::make(2, {mon({1, 0})}));
    CHECK(colon_by_monomial(power(kQ1, 3), mon({0, 0, 4})) == power(kQ1, 2));
}

TEST_CASE("radical") {
    CHECK(radical(MonomialIdeal::make(2, {mon({2, 0}), mon({0, 3})})) ==
          MonomialIdeal::make(2, {mon({1, 0}), mon({0, 1})}));
    CHECK(radical(ideal3({{2, 0, 4}, {0, 1, 0}})) == ideal3({{1, 0, 1}, {0, 1, 0}}));
    CHECK(radical(intersect(kQ1, kQ2)) ==
          ideal3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("minimize is idempotent and order independent") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        auto I = random_ideal(rng, 4, 6, 3);
        auto gens = I.gens();
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(MonomialIdeal::make(4, gens) == I);
    }
}

TEST_CASE("membership distributes over intersection") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        auto I = random_ideal(rng, 3, 4, 2);
        auto J = random_ideal(rng, 3, 4, 2);
        auto K = intersect(I, J);
        // Exhaust all monomials of total degree <= 6.
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b)
                for (int c = 0; a + b + c <= 6; ++c) {
                    Monomial u = mon({a, b, c});
                    CHECK(contains(K, u) == (contains(I, u) && contains(J, u)));
                }
    }
}

TEST_CASE("power is additive in the exponent") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        auto I = random_ideal(rng, 3, 4, 2);
        for (unsigned s = 1; s <= 4; ++s)
            for (unsigned t = 1; s + t <= 5; ++t)
                CHECK(power(I, s + t) == product(power(I, s), power(I, t)));
    }
}

TEST_CASE("special power distributes over intersect, product and sum") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 30; ++round) {
        auto I = random_ideal(rng, 3, 4, 3);
        auto J = random_ideal(rng, 3, 4, 3);
        for (unsigned m = 1; m <= 3; ++m) {
            CHECK(special_power(intersect(I, J), m) ==
                  intersect(special_power(I, m), special_power(J, m)));
            CHECK(special_power(product(I, J), m) ==
                  product(special_power(I, m), special_power(J, m)));
            CHECK(special_power(sum(I, J), m) ==
                  sum(special_power(I, m), special_power(J, m)));
            CHECK(radical(special_power(I, m)) == radical(I));
        }
    }
}

TEST_CASE("colon law for irreducible powers") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> exp(1, 4);
    for (int round = 0; round < 30; ++round) {
        std::vector<Monomial> gens;
        int last = -1;
        for (std::size_t i = 0; i < 3; ++i) {
            int e = exp(rng);
            gens.push_back(Monomial::variable(3, i, e));
            last = e;
        }
        auto I = MonomialIdeal::make(3, gens);
        Monomial xm = Monomial::variable(3, 2, last);
        for (unsigned s = 2; s <= 4; ++s)
            CHECK(colon_by_monomial(power(I, s), xm) == power(I, s - 1));
    }
}
