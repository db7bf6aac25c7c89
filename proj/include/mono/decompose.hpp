#ifndef MONO_DECOMPOSE_HPP
#define MONO_DECOMPOSE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "mono/ideal.hpp"

namespace mono {

/// An ideal generated by pure powers of distinct variables:
/// (x_{i1}^{a_1}, ..., x_{ih}^{a_h}). Height = number of assignments.
struct IrreducibleComponent {
    std::map<std::size_t, Int> assignments; // variable index -> exponent >= 1

    std::size_t height() const { return assignments.size(); }
    MonomialIdeal ideal(std::size_t n) const;

    friend bool operator==(const IrreducibleComponent&,
                           const IrreducibleComponent&) = default;
    friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.assignments < b.assignments;
    }
};

struct PrimaryComponent {
    MonomialIdeal ideal;
    std::vector<std::size_t> support; // sorted variable indices of the radical
    bool is_irreducible = false;

    std::size_t height() const { return support.size(); }

    friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

/// Irredundant reduced primary decomposition: pairwise distinct radical
/// supports, no component containing the intersection of the others.
struct PrimaryDecomposition {
    std::vector<PrimaryComponent> components;
};

/// Splits non-pure-power generators until every leaf is generated by pure
/// powers of variables; leaves deduplicated and made irredundant. Throws
/// degenerate_input on the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Groups irreducible components by radical support and intersects each
/// group; canonical component order (height, support, generators).
PrimaryDecomposition primary_decomposition(const MonomialIdeal& I);

std::size_t height(const PrimaryDecomposition& pd);
std::size_t height(const MonomialIdeal& I);

std::vector<PrimaryComponent> min_height_components(const PrimaryDecomposition& pd);

/// True iff every generator is a power of a single variable; false for the
/// zero and unit ideals by convention.
bool is_irreducible(const MonomialIdeal& I);

/// Intersection of all components; the round-trip check target.
MonomialIdeal intersect_all(const PrimaryDecomposition& pd, std::size_t n);

} // namespace mono

#endif
