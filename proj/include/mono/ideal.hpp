#ifndef MONO_IDEAL_HPP
#define MONO_IDEAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mono/monomial.hpp"

namespace mono {

/// A monomial ideal held by its minimal generating set G(I), kept sorted in
/// lexicographic order. The zero ideal has no generators; the unit ideal is
/// generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default; // zero ideal in zero variables
    explicit MonomialIdeal(std::size_t n) : n_(n) {}

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n);

    /// Minimalize an arbitrary generating set (divisibility antichain,
    /// canonical order). Throws malformed_input on a length mismatch.
    static MonomialIdeal make(std::size_t n, std::vector<Monomial> raw);

    std::size_t vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Monomial> gens_;
};

bool contains(const MonomialIdeal& I, const Monomial& u);
bool contains(const MonomialIdeal& I, const MonomialIdeal& J); // I >= J

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Ordinary power I^s; s = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, unsigned s);

/// Special power: the ideal generated by the m-th powers of G(I).
MonomialIdeal special_power(const MonomialIdeal& I, unsigned m);

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);
MonomialIdeal radical(const MonomialIdeal& I);

std::string to_string(const MonomialIdeal& I);

} // namespace mono

#endif
