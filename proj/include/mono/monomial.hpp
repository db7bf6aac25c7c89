#ifndef MONO_MONOMIAL_HPP
#define MONO_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mono/ints.hpp"

namespace mono {

/// A monomial in a fixed number of variables, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Int> exps);

    static Monomial one(std::size_t n);
    static Monomial variable(std::size_t n, std::size_t i, Int exp = 1);

    std::size_t vars() const { return exps_.size(); }
    const Int& exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<Int>& exponents() const { return exps_; }

    Int degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    bool is_pure_power() const; // support size <= 1 (includes 1 itself)
    std::vector<std::size_t> support() const;
    std::size_t support_size() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Int> exps_;
};

/// Lexicographic order on exponent vectors; the canonical generator order.
bool lex_less(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

/// a with gcd(a, b) divided out; the generator map of the colon ideal.
Monomial colon_quotient(const Monomial& a, const Monomial& b);

Monomial pow(const Monomial& a, unsigned m);
Monomial squarefree_part(const Monomial& a);

/// Debug rendering with default names x1..xn.
std::string to_string(const Monomial& m);

} // namespace mono

#endif
