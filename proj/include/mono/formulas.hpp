#ifndef MONO_FORMULAS_HPP
#define MONO_FORMULAS_HPP

#include <string>

#include "mono/decompose.hpp"
#include "mono/hilbert.hpp"

namespace mono {

enum class MultMethod { closed_form, component_sum, engine_fallback };

std::string to_string(MultMethod m);

struct FormulaReport {
    bool applicable = false;
    std::size_t h = 0;     // height of I
    std::size_t r = 0;     // number of height-h components
    Int base_mult;         // mult(R/I)
    Int value;             // the requested multiplicity
    MultMethod method = MultMethod::closed_form;
};

/// True iff every minimal-height component is irreducible.
bool check_hypothesis(const PrimaryDecomposition& pd);

inline constexpr std::size_t kDefaultPowerGeneratorCap = 200'000;

/// mult(R/I^s) as the sum of engine multiplicities of Q_i^s over the
/// minimal-height components; valid for every monomial ideal.
Int mult_power_components(const PrimaryDecomposition& pd, unsigned s,
                          std::size_t gen_cap = kDefaultPowerGeneratorCap);

/// Closed form mult(R/I) * C(h+s-1, s-1); throws hypothesis_violated when a
/// minimal-height component is not irreducible.
FormulaReport mult_power_closed(const PrimaryDecomposition& pd, unsigned s);

/// Closed form m^h * C(h+s-1, s-1) * mult(R/I) for the s-th power of the m-th
/// special power; same hypothesis.
FormulaReport mult_special_power_closed(const PrimaryDecomposition& pd,
                                        unsigned m, unsigned s);

/// r * m^h * C(h+s-1, s-1) for a square-free ideal; throws not_squarefree.
Int mult_squarefree_closed(const MonomialIdeal& I, unsigned m, unsigned s);

} // namespace mono

#endif
