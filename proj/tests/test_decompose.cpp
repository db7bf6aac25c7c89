#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/decompose.hpp"
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

TEST_CASE("irreducible decomposition of simple ideals") {
    auto comps = irreducible_decomposition(ideal(2, {{1, 1}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].ideal(2) == ideal(2, {{1, 0}}));
    CHECK(comps[1].ideal(2) == ideal(2, {{0, 1}}));

    auto already = irreducible_decomposition(ideal(2, {{2, 0}, {0, 2}}));
    REQUIRE(already.size() == 1);
    CHECK(already[0].ideal(2) == ideal(2, {{2, 0}, {0, 2}}));
}

TEST_CASE("irreducible decomposition of the worked example") {
    auto comps = irreducible_decomposition(kExample);
    REQUIRE(comps.size() == 2);
    std::vector<MonomialIdeal> ideals{comps[0].ideal(3), comps[1].ideal(3)};
    auto q1 = ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
    auto q2 = ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 2}});
    bool found = (ideals[0] == q1 && ideals[1] == q2) ||
                 (ideals[0] == q2 && ideals[1] == q1);
    CHECK(found);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), degenerate_input);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(2)), degenerate_input);
    CHECK_THROWS_AS(primary_decomposition(MonomialIdeal::unit(2)), degenerate_input);
}

TEST_CASE("primary decomposition groups by support") {
    auto pd = primary_decomposition(kExample);
    REQUIRE(pd.components.size() == 1);
    CHECK(pd.components[0].ideal == kExample);
    CHECK(pd.components[0].support == std::vector<std::size_t>{0, 1, 2});
    CHECK_FALSE(pd.components[0].is_irreducible);

    auto edge = primary_decomposition(ideal(2, {{1, 1}}));
    REQUIRE(edge.components.size() == 2);
    CHECK(edge.components[0].is_irreducible);
    CHECK(edge.components[1].is_irreducible);
}

TEST_CASE("primary decomposition of the oriented path ideal") {
    auto I = ideal(3, {{1, 2, 0}, {0, 1, 1}});
    auto pd = primary_decomposition(I);
    REQUIRE(pd.components.size() == 3);
    CHECK(pd.components[0].ideal == ideal(3, {{0, 1, 0}}));
    CHECK(pd.components[1].ideal == ideal(3, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(pd.components[2].ideal == ideal(3, {{0, 2, 0}, {0, 0, 1}}));
    CHECK(intersect_all(pd, 3) == I);
}

TEST_CASE("height and minimal-height components") {
    CHECK(height(ideal(2, {{1, 1}})) == 1);
    CHECK(height(kExample) == 3);

    auto pd = primary_decomposition(ideal(3, {{1, 2, 0}, {0, 1, 1}}));
    CHECK(height(pd) == 1);
    auto mins = min_height_components(pd);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].ideal == ideal(3, {{0, 1, 0}}));
}

TEST_CASE("irreducibility predicate") {
    CHECK(is_irreducible(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}})));
    CHECK_FALSE(is_irreducible(kExample));
    CHECK_FALSE(is_irreducible(MonomialIdeal::unit(3)));
    CHECK_FALSE(is_irreducible(MonomialIdeal::zero(3)));
}

TEST_CASE("decomposition round-trips on random ideals") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 60; ++round) {
        auto I = random_ideal(rng, 4, 5, 3);
        auto pd = primary_decomposition(I);
        CHECK(intersect_all(pd, 4) == I);

        // Radical supports pairwise distinct.
        for (std::size_t i = 0; i < pd.components.size(); ++i)
            for (std::size_t j = i + 1; j < pd.components.size(); ++j)
                CHECK(pd.components[i].support != pd.components[j].support);

        // dim(R/I) = n - min component height.
        CHECK(hilbert_summary(I).dim == 4 - height(pd));
    }
}

TEST_CASE("special powers commute with primary decomposition") {
    std::mt19937_64 rng(103);
    for (int round = 0; round < 40; ++round) {
        auto I = random_ideal(rng, 4, 4, 3);
        auto pd = primary_decomposition(I);
        for (unsigned m = 1; m <= 3; ++m) {
            auto pdm = primary_decomposition(special_power(I, m));
            REQUIRE(pdm.components.size() == pd.components.size());
            for (std::size_t i = 0; i < pd.components.size(); ++i) {
                CHECK(pdm.components[i].support == pd.components[i].support);
                CHECK(pdm.components[i].ideal ==
                      special_power(pd.components[i].ideal, m));
            }
            CHECK(is_irreducible(I) == is_irreducible(special_power(I, m)));
        }
    }
}
