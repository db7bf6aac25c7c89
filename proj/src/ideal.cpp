#include "mono/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
    return make(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::make(std::size_t n, std::vector<Monomial> raw) {
    for (const Monomial& m : raw)
        if (m.vars() != n)
            throw malformed_input("generator has wrong variable count");

    MonomialIdeal I(n);
    if (raw.empty()) return I;

    std::sort(raw.begin(), raw.end(), lex_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Antichain: keep a generator only if no other generator divides it.
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
            if (j != i && divides(raw[j], raw[i])) redundant = true;
        if (!redundant) kept.push_back(raw[i]);
    }
    I.gens_ = std::move(kept);
    return I;
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

static void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw malformed_input("ideals live in different variable counts");
}

bool contains(const MonomialIdeal& I, const Monomial& u) {
    if (u.vars() != I.vars())
        throw malformed_input("monomial has wrong variable count");
    return std::any_of(I.gens().begin(), I.gens().end(),
                       [&](const Monomial& g) { return divides(g, u); });
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    return std::all_of(J.gens().begin(), J.gens().end(),
                       [&](const Monomial& g) { return contains(I, g); });
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const Monomial& a : I.gens())
        for (const Monomial& b : J.gens()) gens.push_back(a * b);
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const Monomial& a : I.gens())
        for (const Monomial& b : J.gens()) gens.push_back(lcm(a, b));
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned s) {
    if (s == 0) return MonomialIdeal::unit(I.vars());
    // Iterated product, re-minimalized after every multiplication.
    MonomialIdeal result = I;
    for (unsigned k = 1; k < s; ++k) result = product(result, I);
    return result;
}

MonomialIdeal special_power(const MonomialIdeal& I, unsigned m) {
    if (m == 0) throw malformed_input("special power requires m >= 1");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) gens.push_back(pow(g, m));
    // u^m | v^m iff u | v, so the image of G(I) is already minimal.
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
    if (u.vars() != I.vars())
        throw malformed_input("monomial has wrong variable count");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) gens.push_back(colon_quotient(g, u));
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) gens.push_back(squarefree_part(g));
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < I.gens().size(); ++i) {
        if (i) os << ", ";
        os << to_string(I.gens()[i]);
    }
    os << ")";
    return os.str();
}

} // namespace mono
