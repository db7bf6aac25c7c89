#include "mono/decompose.hpp"

#include <algorithm>
#include <set>

#include "mono/errors.hpp"

namespace mono {

MonomialIdeal IrreducibleComponent::ideal(std::size_t n) const {
    std::vector<Monomial> gens;
    gens.reserve(assignments.size());
    for (const auto& [var, exp] : assignments)
        gens.push_back(Monomial::variable(n, var, exp));
    return MonomialIdeal::make(n, std::move(gens));
}

namespace {

void split(const MonomialIdeal& I, std::set<IrreducibleComponent>& leaves) {
    // First (canonical order) generator with support of size >= 2.
    const Monomial* u = nullptr;
    for (const Monomial& g : I.gens())
        if (!g.is_pure_power()) {
            u = &g;
            break;
        }

    if (!u) {
        IrreducibleComponent c;
        for (const Monomial& g : I.gens())
            for (std::size_t i = 0; i < I.vars(); ++i)
                if (g.exponent(i) > 0) c.assignments[i] = g.exponent(i);
        leaves.insert(std::move(c));
        return;
    }

    // u = v * w with v the lowest-index pure-power part, w the remainder;
    // I = (G \ {u}, v) cap (G \ {u}, w).
    std::size_t var = u->support().front();
    Monomial v = Monomial::variable(I.vars(), var, u->exponent(var));
    Monomial w = colon_quotient(*u, v);

    std::vector<Monomial> rest;
    for (const Monomial& g : I.gens())
        if (&g != u) rest.push_back(g);

    std::vector<Monomial> left = rest;
    left.push_back(std::move(v));
    split(MonomialIdeal::make(I.vars(), std::move(left)), leaves);

    rest.push_back(std::move(w));
    split(MonomialIdeal::make(I.vars(), std::move(rest)), leaves);
}

/// Drops every ideal containing the intersection of the others, one at a
/// time in canonical order.
template <typename T>
void drop_redundant(std::vector<T>& items, std::size_t n,
                    const std::vector<MonomialIdeal>& ideals_in) {
    std::vector<MonomialIdeal> ideals = ideals_in;
    bool changed = true;
    while (changed && ideals.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            MonomialIdeal rest = MonomialIdeal::zero(n);
            bool first = true;
            for (std::size_t j = 0; j < ideals.size(); ++j) {
                if (j == i) continue;
                rest = first ? ideals[j] : intersect(rest, ideals[j]);
                first = false;
            }
            if (contains(ideals[i], rest)) {
                ideals.erase(ideals.begin() + static_cast<long>(i));
                items.erase(items.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw degenerate_input("decomposition requires a proper nonzero ideal");

    std::set<IrreducibleComponent> leaves;
    split(I, leaves);

    std::vector<IrreducibleComponent> comps(leaves.begin(), leaves.end());
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(comps.size());
    for (const auto& c : comps) ideals.push_back(c.ideal(I.vars()));
    drop_redundant(comps, I.vars(), ideals);
    return comps;
}

PrimaryDecomposition primary_decomposition(const MonomialIdeal& I) {
    auto irr = irreducible_decomposition(I);

    // Group by radical support; components with equal support intersect into
    // one primary component.
    std::map<std::vector<std::size_t>, std::vector<IrreducibleComponent>> groups;
    for (auto& c : irr) {
        std::vector<std::size_t> support;
        for (const auto& [var, exp] : c.assignments) support.push_back(var);
        groups[std::move(support)].push_back(std::move(c));
    }

    std::vector<PrimaryComponent> comps;
    for (auto& [support, members] : groups) {
        MonomialIdeal q = members.front().ideal(I.vars());
        for (std::size_t i = 1; i < members.size(); ++i)
            q = intersect(q, members[i].ideal(I.vars()));
        PrimaryComponent pc;
        pc.is_irreducible = is_irreducible(q);
        pc.ideal = std::move(q);
        pc.support = support;
        comps.push_back(std::move(pc));
    }

    std::sort(comps.begin(), comps.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  if (a.height() != b.height()) return a.height() < b.height();
                  if (a.support != b.support) return a.support < b.support;
                  return std::lexicographical_compare(
                      a.ideal.gens().begin(), a.ideal.gens().end(),
                      b.ideal.gens().begin(), b.ideal.gens().end(), lex_less);
              });

    std::vector<MonomialIdeal> ideals;
    ideals.reserve(comps.size());
    for (const auto& c : comps) ideals.push_back(c.ideal);
    drop_redundant(comps, I.vars(), ideals);

    PrimaryDecomposition pd;
    pd.components = std::move(comps);
    return pd;
}

std::size_t height(const PrimaryDecomposition& pd) {
    std::size_t h = pd.components.front().height();
    for (const auto& c : pd.components) h = std::min(h, c.height());
    return h;
}

std::size_t height(const MonomialIdeal& I) {
    return height(primary_decomposition(I));
}

std::vector<PrimaryComponent> min_height_components(const PrimaryDecomposition& pd) {
    std::size_t h = height(pd);
    std::vector<PrimaryComponent> out;
    for (const auto& c : pd.components)
        if (c.height() == h) out.push_back(c);
    return out;
}

bool is_irreducible(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return false;
    return std::all_of(I.gens().begin(), I.gens().end(),
                       [](const Monomial& g) { return g.is_pure_power(); });
}

MonomialIdeal intersect_all(const PrimaryDecomposition& pd, std::size_t n) {
    MonomialIdeal out = MonomialIdeal::zero(n);
    bool first = true;
    for (const auto& c : pd.components) {
        out = first ? c.ideal : intersect(out, c.ideal);
        first = false;
    }
    return out;
}

} // namespace mono
