#ifndef MONO_IO_HPP
#define MONO_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mono/graph.hpp"
#include "mono/ideal.hpp"

namespace mono {

/// A parsed ideal file: a ring line naming the variables, then one or more
/// named ideals given by generator lists.
struct IdealSpec {
    struct NamedIdeal {
        std::string name;
        std::vector<Monomial> gens; // as written, before minimalization
    };

    std::vector<std::string> variables;
    std::vector<NamedIdeal> ideals;

    const NamedIdeal& find(const std::string& name) const;
    MonomialIdeal ideal(const std::string& name) const;
    MonomialIdeal first_ideal() const;
};

/// A parsed graph file: weighted vertices and an arc list.
struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<Int> weights;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;

    WeightedOrientedGraph graph() const;
};

// Grammar:
//   ring x1 x2 x3
//   ideal I = x1^2, x2^2*x3, 1
// '#' comments to end of line; whitespace insignificant within a line.
IdealSpec parse_ideal_spec(const std::string& text);

// Grammar:
//   vertices: x1 x2:2 x3
//   arcs: x1->x2 x2->x3
// Omitted weight means 1.
GraphSpec parse_graph_spec(const std::string& text);

std::string print_ideal_spec(const IdealSpec& spec);
std::string print_graph_spec(const GraphSpec& spec);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

} // namespace mono

#endif
