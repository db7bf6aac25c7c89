#include "mono/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

Monomial::Monomial(std::vector<Int> exps) : exps_(std::move(exps)) {
    for (const Int& e : exps_)
        if (e < 0) throw malformed_input("negative exponent in monomial");
}

Monomial Monomial::one(std::size_t n) {
    return Monomial(std::vector<Int>(n, 0));
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Int exp) {
    if (i >= n) throw malformed_input("variable index out of range");
    std::vector<Int> e(n, 0);
    e[i] = std::move(exp);
    return Monomial(std::move(e));
}

Int Monomial::degree() const {
    Int d = 0;
    for (const Int& e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const Int& e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const Int& e) { return e <= 1; });
}

bool Monomial::is_pure_power() const {
    return support_size() <= 1;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

std::size_t Monomial::support_size() const {
    std::size_t c = 0;
    for (const Int& e : exps_)
        if (e > 0) ++c;
    return c;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
}

static void require_same_vars(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw malformed_input("monomials live in different variable counts");
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        e[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        e[i] = a.exponent(i) + b.exponent(i);
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i) {
        const Int& g = std::min(a.exponent(i), b.exponent(i));
        e[i] = a.exponent(i) - g;
    }
    return Monomial(std::move(e));
}

Monomial pow(const Monomial& a, unsigned m) {
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        e[i] = a.exponent(i) * m;
    return Monomial(std::move(e));
}

Monomial squarefree_part(const Monomial& a) {
    std::vector<Int> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        e[i] = a.exponent(i) > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (m.exponent(i) != 1) os << "^" << m.exponent(i);
    }
    return os.str();
}

} // namespace mono
