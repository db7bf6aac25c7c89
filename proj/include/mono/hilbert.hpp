#ifndef MONO_HILBERT_HPP
#define MONO_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "mono/ideal.hpp"
#include "mono/polynomial.hpp"

namespace mono {

/// Hilbert data of R/I: K(t) = numerator over (1-t)^n, the reduced numerator
/// Q(t) with Q(1) != 0, the Krull dimension of R/I, the multiplicity e_0 and
/// the Hilbert coefficients e_0..e_{dim-1} (just e_0 in dimension zero).
struct HilbertSummary {
    std::size_t n = 0;
    IntPoly k_poly;
    std::size_t dim = 0;
    IntPoly q_poly;
    Int mult;
    std::vector<Int> hilbert_coeffs;
};

/// Numerator of HS(R/I, t) over (1-t)^n, by pivot splitting on the generator
/// of highest total degree.
IntPoly k_polynomial(const MonomialIdeal& I);

/// Throws degenerate_input on the unit ideal.
HilbertSummary hilbert_summary(const MonomialIdeal& I);

inline constexpr long long kDefaultEnumerationCap = 5'000'000;

/// dim_K (R/I)_k by enumerating every degree-k exponent vector. Throws
/// resource_limit when C(k+n-1, k) exceeds the cap.
Int hilbert_function_bruteforce(const MonomialIdeal& I, const Int& k,
                                const Int& cap = kDefaultEnumerationCap);

/// H(k) read off the series K(t)/(1-t)^n.
Int hilbert_function_from_series(const IntPoly& k_poly, std::size_t n, const Int& k);

/// The Hilbert polynomial p with H(k) = p(k) for k >> 0; the zero polynomial
/// in dimension zero.
RationalPoly hilbert_polynomial(const HilbertSummary& s);

/// Shorthand: multiplicity of R/I through the engine.
Int mult_engine(const MonomialIdeal& I);

} // namespace mono

#endif
