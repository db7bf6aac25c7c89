#include "mono/polynomial.hpp"

#include <sstream>

namespace mono {

static void normalize(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize(c_);
}

IntPoly IntPoly::constant(Int c) {
    return IntPoly(std::vector<Int>{std::move(c)});
}

IntPoly IntPoly::monomial(const Int& c, std::size_t deg) {
    std::vector<Int> v(deg + 1, 0);
    v[deg] = c;
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Int(0);
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(c));
}

IntPoly divide_one_minus_t(const IntPoly& p, Int& remainder) {
    // p(t) = (1 - t) q(t) + p(1). Horner from the top: dividing by (t - 1)
    // and negating the quotient.
    if (p.is_zero()) {
        remainder = 0;
        return IntPoly();
    }
    const auto& c = p.coeffs();
    std::vector<Int> q(c.size() - 1, 0);
    Int carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry += c[i];
        q[i - 1] = -carry;
    }
    remainder = carry + c[0]; // = p(1)
    return IntPoly(std::move(q));
}

IntPoly one_minus_t_pow(std::size_t d) {
    std::vector<Int> c(d + 1, 0);
    c[0] = 1;
    c[d] -= 1; // d = 0 gives the zero polynomial: 1 - t^0
    return IntPoly(std::move(c));
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Int& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || i == 0) os << a;
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

static void normalize(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize(c_);
}

Rational RationalPoly::eval(const Int& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * Rational(x) + *it;
    return r;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs().size()) c[i] += a.coeffs()[i];
        if (i < b.coeffs().size()) c[i] += b.coeffs()[i];
    }
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RationalPoly(std::move(c));
}

RationalPoly scale(const RationalPoly& a, const Rational& c) {
    std::vector<Rational> v = a.coeffs();
    for (Rational& x : v) x *= c;
    return RationalPoly(std::move(v));
}

std::string to_string(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << " + ";
        os << "(" << p.coeffs()[i] << ")";
        if (i >= 1) {
            os << "*k";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace mono
