#ifndef MONO_POLYNOMIAL_HPP
#define MONO_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mono/ints.hpp"

namespace mono {

/// Dense univariate polynomial with exact integer coefficients, index = degree
/// in t. Normalized: the highest stored coefficient is nonzero (zero
/// polynomial stores nothing).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(const Int& c, std::size_t deg); // c * t^deg

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const;

    Int eval(const Int& x) const;
    IntPoly derivative() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<Int> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Quotient of p by (1 - t) when the division is exact; remainder reported
/// through `remainder` (= p(1)).
IntPoly divide_one_minus_t(const IntPoly& p, Int& remainder);

/// (1 - t^d), the K-polynomial factor of one generator of degree d.
IntPoly one_minus_t_pow(std::size_t d);

std::string to_string(const IntPoly& p);

/// Dense univariate polynomial with exact rational coefficients; used for
/// Hilbert polynomials only.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Int& x) const;

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    std::vector<Rational> c_;
};

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly scale(const RationalPoly& a, const Rational& c);

std::string to_string(const RationalPoly& p);

} // namespace mono

#endif
