#include "mono/formulas.hpp"

#include "mono/errors.hpp"

namespace mono {

std::string to_string(MultMethod m) {
    switch (m) {
    case MultMethod::closed_form: return "closed_form";
    case MultMethod::component_sum: return "component_sum";
    case MultMethod::engine_fallback: return "engine_fallback";
    }
    return "?";
}

bool check_hypothesis(const PrimaryDecomposition& pd) {
    for (const auto& c : min_height_components(pd))
        if (!c.is_irreducible) return false;
    return true;
}

Int mult_power_components(const PrimaryDecomposition& pd, unsigned s,
                          std::size_t gen_cap) {
    Int total = 0;
    for (const auto& c : min_height_components(pd)) {
        MonomialIdeal q = power(c.ideal, s);
        if (q.gens().size() > gen_cap)
            throw resource_limit("power expansion exceeds generator cap");
        total += mult_engine(q);
    }
    return total;
}

namespace {

// Sum over the height-h components of the product of their pure-power
// exponents; requires every minimal-height component to be irreducible.
Int irreducible_base_mult(const std::vector<PrimaryComponent>& comps) {
    Int base = 0;
    for (const auto& c : comps) {
        Int prod = 1;
        for (const Monomial& g : c.ideal.gens())
            for (std::size_t i = 0; i < g.vars(); ++i)
                if (g.exponent(i) > 0) prod *= g.exponent(i);
        base += prod;
    }
    return base;
}

} // namespace

FormulaReport mult_power_closed(const PrimaryDecomposition& pd, unsigned s) {
    if (!check_hypothesis(pd))
        throw hypothesis_violated(
            "a minimal-height primary component is not irreducible");

    auto comps = min_height_components(pd);
    FormulaReport rep;
    rep.applicable = true;
    rep.h = comps.front().height();
    rep.r = comps.size();
    rep.base_mult = irreducible_base_mult(comps);
    rep.value = rep.base_mult * binomial(Int(rep.h) + s - 1, Int(s) - 1);
    rep.method = MultMethod::closed_form;
    return rep;
}

FormulaReport mult_special_power_closed(const PrimaryDecomposition& pd,
                                        unsigned m, unsigned s) {
    FormulaReport rep = mult_power_closed(pd, s);
    rep.value = ipow(Int(m), static_cast<unsigned>(rep.h)) * rep.value;
    return rep;
}

Int mult_squarefree_closed(const MonomialIdeal& I, unsigned m, unsigned s) {
    if (!I.is_squarefree())
        throw not_squarefree("ideal has a generator with an exponent above 1");
    auto pd = primary_decomposition(I);
    auto comps = min_height_components(pd);
    std::size_t h = comps.front().height();
    Int r(comps.size());
    return r * ipow(Int(m), static_cast<unsigned>(h)) *
           binomial(Int(h) + s - 1, Int(s) - 1);
}

} // namespace mono
