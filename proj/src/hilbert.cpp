#include "mono/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "mono/errors.hpp"

namespace mono {

namespace {

constexpr long long kMaxSeriesDegree = 2'000'000;

std::size_t degree_index(const Int& d) {
    if (d > kMaxSeriesDegree)
        throw resource_limit("total degree too large for dense series arithmetic");
    return d.convert_to<std::size_t>();
}

std::string gens_key(const std::vector<Monomial>& gens) {
    std::ostringstream os;
    for (const Monomial& g : gens) {
        for (const Int& e : g.exponents()) os << e << ",";
        os << ";";
    }
    return os.str();
}

bool pairwise_coprime(const std::vector<Monomial>& gens, std::size_t n) {
    std::vector<int> seen(n, 0);
    for (const Monomial& g : gens)
        for (std::size_t i = 0; i < n; ++i)
            if (g.exponent(i) > 0 && ++seen[i] > 1) return false;
    return true;
}

struct KPolyCtx {
    std::unordered_map<std::string, IntPoly> cache;

    IntPoly run(const MonomialIdeal& I) {
        if (I.is_unit()) return IntPoly();
        if (I.is_zero()) return IntPoly::constant(1);

        const auto& gens = I.gens();
        if (pairwise_coprime(gens, I.vars())) {
            IntPoly p = IntPoly::constant(1);
            for (const Monomial& g : gens)
                p = p * one_minus_t_pow(degree_index(g.degree()));
            return p;
        }

        std::string key = gens_key(gens);
        if (auto it = cache.find(key); it != cache.end()) return it->second;

        // Pivot: the non-pure-power generator of highest total degree (a
        // minimal generating set that is not pairwise coprime always has
        // one), split on its variable of maximal exponent.
        const Monomial* pick = nullptr;
        for (const Monomial& g : gens) {
            if (g.is_pure_power()) continue;
            if (!pick || g.degree() > pick->degree()) pick = &g;
        }
        std::size_t var = 0;
        for (std::size_t i = 1; i < I.vars(); ++i)
            if (pick->exponent(i) > pick->exponent(var)) var = i;
        Monomial pivot = Monomial::variable(I.vars(), var, pick->exponent(var));

        // K(I) = K(I + (p)) + t^{deg p} * K(I : p)
        std::vector<Monomial> with_pivot = gens;
        with_pivot.push_back(pivot);
        IntPoly left = run(MonomialIdeal::make(I.vars(), std::move(with_pivot)));
        IntPoly right = run(colon_by_monomial(I, pivot));
        IntPoly result =
            left + IntPoly::monomial(1, degree_index(pivot.degree())) * right;
        cache.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

IntPoly k_polynomial(const MonomialIdeal& I) {
    KPolyCtx ctx;
    return ctx.run(I);
}

HilbertSummary hilbert_summary(const MonomialIdeal& I) {
    if (I.is_unit())
        throw degenerate_input("Hilbert summary of the unit ideal is undefined");

    HilbertSummary s;
    s.n = I.vars();
    s.k_poly = k_polynomial(I);

    // Strip (1-t) factors; K = (1-t)^{n-dim} Q with Q(1) != 0.
    IntPoly q = s.k_poly;
    std::size_t divisions = 0;
    while (divisions < s.n) {
        Int rem;
        IntPoly next = divide_one_minus_t(q, rem);
        if (rem != 0) break;
        q = std::move(next);
        ++divisions;
    }
    s.dim = s.n - divisions;
    s.q_poly = std::move(q);
    s.mult = s.q_poly.eval(1);

    // e_i = Q^{(i)}(1) / i!, i = 0..dim-1; a zero-dimensional quotient keeps
    // just e_0 = its length.
    std::size_t count = s.dim == 0 ? 1 : s.dim;
    IntPoly d = s.q_poly;
    for (std::size_t i = 0; i < count; ++i) {
        s.hilbert_coeffs.push_back(d.eval(1) / factorial(static_cast<unsigned>(i)));
        d = d.derivative();
    }
    return s;
}

namespace {

Int count_standard(const MonomialIdeal& I, std::vector<Int>& exps, std::size_t pos,
                   const Int& remaining) {
    if (pos + 1 == exps.size()) {
        exps[pos] = remaining;
        return contains(I, Monomial(std::vector<Int>(exps))) ? Int(0) : Int(1);
    }
    Int total = 0;
    for (Int e = 0; e <= remaining; ++e) {
        exps[pos] = e;
        total += count_standard(I, exps, pos + 1, remaining - e);
    }
    return total;
}

} // namespace

Int hilbert_function_bruteforce(const MonomialIdeal& I, const Int& k, const Int& cap) {
    if (k < 0) return 0;
    if (I.vars() == 0) return (k == 0 && !I.is_unit()) ? 1 : 0;
    Int vectors = binomial(k + Int(I.vars()) - 1, k);
    if (vectors > cap)
        throw resource_limit("degree-" + k.str() + " enumeration exceeds cap");
    std::vector<Int> exps(I.vars(), 0);
    return count_standard(I, exps, 0, k);
}

Int hilbert_function_from_series(const IntPoly& k_poly, std::size_t n, const Int& k) {
    if (k < 0) return 0;
    // [t^k] K(t)/(1-t)^n = sum_j K_j * C(k-j+n-1, n-1)
    Int h = 0;
    for (std::size_t j = 0; j < k_poly.coeffs().size(); ++j) {
        Int kj(j);
        if (kj > k) break;
        h += k_poly.coeffs()[j] * binomial(k - kj + Int(n) - 1, Int(n) - 1);
    }
    return h;
}

RationalPoly hilbert_polynomial(const HilbertSummary& s) {
    if (s.dim == 0) return RationalPoly();
    const long d = static_cast<long>(s.dim) - 1;
    RationalPoly p;
    for (long i = 0; i <= d; ++i) {
        // (-1)^i e_i C(k + d - i, d - i) as a polynomial in k.
        RationalPoly term(std::vector<Rational>{1});
        for (long l = 0; l < d - i; ++l)
            term = term * RationalPoly(std::vector<Rational>{Rational(d - i - l), 1});
        Rational c = Rational(s.hilbert_coeffs[static_cast<std::size_t>(i)]) /
                     Rational(factorial(static_cast<unsigned>(d - i)));
        if (i % 2 == 1) c = -c;
        p = p + scale(term, c);
    }
    return p;
}

Int mult_engine(const MonomialIdeal& I) {
    return hilbert_summary(I).mult;
}

} // namespace mono
