#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/errors.hpp"
#include "mono/io.hpp"

using namespace mono;

TEST_CASE("parse a basic ideal file") {
    auto spec = parse_ideal_spec("ring x1 x2 x3\nideal I = x1^2, x2^2, x3^4\n");
    CHECK(spec.variables == std::vector<std::string>{"x1", "x2", "x3"});
    REQUIRE(spec.ideals.size() == 1);
    CHECK(spec.ideals[0].name == "I");
    CHECK(spec.ideals[0].gens.size() == 3);
    CHECK(spec.first_ideal().gens().size() == 3);
}

TEST_CASE("worked example generators parse to the expected sets") {
    auto spec = parse_ideal_spec(
        "ring x1 x2 x3\n"
        "ideal Q1 = x1^2, x2^2, x3^4\n"
        "ideal Q2 = x1^3, x2^3, x3^2\n");
    auto q1 = spec.ideal("Q1");
    auto q2 = spec.ideal("Q2");
    CHECK(q1.gens().size() == 3);
    CHECK(q2.gens().size() == 3);
    CHECK(intersect(q1, q2).gens().size() == 5);
}

TEST_CASE("comments, whitespace and the constant monomial") {
    auto spec = parse_ideal_spec(
        "# header comment\n"
        "ring  a   b\n"
        "\n"
        "ideal U = 1   # the unit ideal\n"
        "ideal J = a ^ 2 * b , b\n");
    CHECK(spec.ideal("U").is_unit());
    CHECK(spec.ideal("J").gens().size() == 1); // b divides a^2 b
}

TEST_CASE("ideal parse errors carry positions") {
    CHECK_THROWS_AS(parse_ideal_spec("ideal I = x1\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal_spec("ring x1\nideal I = y\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal_spec("ring x1 x1\nideal I = x1\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal_spec("ring x1\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal_spec(""), parse_error);
    CHECK_THROWS_AS(parse_ideal_spec("ring x1\nideal I = x1 x1\n"), parse_error);

    try {
        parse_ideal_spec("ring x1\nideal I = y2\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 11);
    }
}

TEST_CASE("parse a basic graph file") {
    auto spec = parse_graph_spec("vertices: x1 x2:2\narcs: x1->x2\n");
    CHECK(spec.vertices == std::vector<std::string>{"x1", "x2"});
    CHECK(spec.weights == std::vector<Int>{1, 2});
    REQUIRE(spec.arcs.size() == 1);
    CHECK(spec.arcs[0] == std::make_pair<std::size_t, std::size_t>(0, 1));
    CHECK(spec.graph().vertex_count() == 2);
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(parse_graph_spec("vertices: a\narcs: a->a\n"), parse_error);
    CHECK_THROWS_AS(parse_graph_spec("vertices: a b\narcs: a->c\n"), parse_error);
    CHECK_THROWS_AS(parse_graph_spec("vertices: a:0 b\narcs: a->b\n"), parse_error);
    CHECK_THROWS_AS(parse_graph_spec("arcs: a->b\n"), parse_error);
}

TEST_CASE("print-parse round trip for ideals") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> exp(0, 4);
    for (int round = 0; round < 40; ++round) {
        IdealSpec spec;
        spec.variables = {"x1", "x2", "y"};
        IdealSpec::NamedIdeal ni;
        ni.name = "I";
        for (int g = 0; g < 4; ++g) {
            std::vector<Int> e(3);
            for (auto& x : e) x = exp(rng);
            ni.gens.push_back(Monomial(std::move(e)));
        }
        spec.ideals.push_back(ni);

        auto reparsed = parse_ideal_spec(print_ideal_spec(spec));
        CHECK(reparsed.variables == spec.variables);
        REQUIRE(reparsed.ideals.size() == 1);
        CHECK(reparsed.ideals[0].name == "I");
        CHECK(reparsed.ideals[0].gens == spec.ideals[0].gens);
    }
}

TEST_CASE("print-parse round trip for graphs") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> w(1, 3);
    for (int round = 0; round < 40; ++round) {
        GraphSpec spec;
        spec.vertices = {"a", "b", "c", "d"};
        for (int i = 0; i < 4; ++i) spec.weights.push_back(w(rng));
        spec.arcs = {{0, 1}, {2, 1}};
        if (w(rng) == 1) spec.arcs.emplace_back(1, 3);

        auto reparsed = parse_graph_spec(print_graph_spec(spec));
        CHECK(reparsed.vertices == spec.vertices);
        CHECK(reparsed.weights == spec.weights);
        CHECK(reparsed.arcs == spec.arcs);
    }
}

TEST_CASE("monomial rendering") {
    auto spec = parse_ideal_spec("ring x y\nideal I = x^2*y\n");
    CHECK(monomial_to_string(spec.ideals[0].gens[0], spec.variables) == "x^2*y");
    CHECK(monomial_to_string(Monomial::one(2), spec.variables) == "1");
}
