#include "mono/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mono/decompose.hpp"
#include "mono/errors.hpp"
#include "mono/formulas.hpp"
#include "mono/graph.hpp"
#include "mono/hilbert.hpp"
#include "mono/ideal.hpp"

namespace mono {

bool VerifyReport::ok() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawReport& l) { return l.status != LawStatus::failed; });
}

bool VerifyReport::exhausted() const {
    return std::any_of(laws.begin(), laws.end(), [](const LawReport& l) {
        return l.status == LawStatus::budget_exhausted;
    });
}

namespace {

using Rng = std::mt19937_64;

std::size_t rand_in(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Tracks one law: counts cases, remembers the first counterexample, honors
/// the per-law budget.
struct Law {
    LawReport rep;
    std::size_t limit;

    Law(std::string name, std::size_t default_cases, std::size_t budget)
        : limit(default_cases) {
        rep.law = std::move(name);
        if (budget != 0 && budget < limit) {
            limit = budget;
            rep.status = LawStatus::budget_exhausted;
        }
    }

    bool wants_more() const { return rep.cases < limit; }

    void record(bool ok, const std::string& input) {
        ++rep.cases;
        if (!ok) {
            ++rep.failures;
            if (rep.first_counterexample.empty()) rep.first_counterexample = input;
            if (rep.status != LawStatus::budget_exhausted) rep.status = LawStatus::failed;
        }
    }

    void finish() {
        if (rep.failures > 0) rep.status = LawStatus::failed;
    }
};

struct IrreducibleCase {
    MonomialIdeal ideal;
    std::size_t last_var;
    Int last_exp;
};

IrreducibleCase random_irreducible(Rng& rng, std::size_t max_n, std::size_t max_exp) {
    std::size_t n = rand_in(rng, 2, max_n);
    std::size_t m = rand_in(rng, 1, n);
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(m);
    std::sort(vars.begin(), vars.end());

    std::vector<Monomial> gens;
    IrreducibleCase c{MonomialIdeal::zero(n), 0, 0};
    for (std::size_t v : vars) {
        Int e(rand_in(rng, 1, max_exp));
        gens.push_back(Monomial::variable(n, v, e));
        c.last_var = v;
        c.last_exp = e;
    }
    c.ideal = MonomialIdeal::make(n, std::move(gens));
    return c;
}

MonomialIdeal random_ideal(Rng& rng, std::size_t max_n, std::size_t max_gens,
                           std::size_t max_exp) {
    std::size_t n = rand_in(rng, 2, max_n);
    std::size_t g = rand_in(rng, 1, max_gens);
    std::vector<Monomial> gens;
    while (gens.size() < g) {
        std::vector<Int> e(n, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = Int(rand_in(rng, 0, max_exp));
            if (e[i] > 0) nonzero = true;
        }
        if (nonzero) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal random_ideal_in(Rng& rng, std::size_t n, std::size_t max_gens,
                              std::size_t max_exp) {
    std::size_t g = rand_in(rng, 1, max_gens);
    std::vector<Monomial> gens;
    while (gens.size() < g) {
        std::vector<Int> e(n, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = Int(rand_in(rng, 0, max_exp));
            if (e[i] > 0) nonzero = true;
        }
        if (nonzero) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal random_squarefree(Rng& rng, std::size_t max_n, std::size_t max_gens) {
    return random_ideal(rng, max_n, max_gens, 1);
}

Monomial mon(std::vector<int> e) {
    std::vector<Int> v(e.begin(), e.end());
    return Monomial(std::move(v));
}

/// Criterion shared by every scope: series coefficients match brute-force
/// standard-monomial counts for all degrees up to max_deg (degrees past the
/// enumeration cap are skipped, not failed).
bool series_coherent(const MonomialIdeal& I, unsigned max_deg, std::string& why) {
    if (I.is_unit()) return true;
    IntPoly k = k_polynomial(I);
    for (unsigned deg = 0; deg <= max_deg; ++deg) {
        Int bf;
        try {
            bf = hilbert_function_bruteforce(I, deg);
        } catch (const resource_limit&) {
            continue;
        }
        Int fs = hilbert_function_from_series(k, I.vars(), deg);
        if (bf != fs) {
            std::ostringstream os;
            os << to_string(I) << " degree " << deg << ": series " << fs
               << " vs brute force " << bf;
            why = os.str();
            return false;
        }
    }
    return true;
}

std::string describe(const MonomialIdeal& I) { return to_string(I); }

} // namespace

VerifyReport verify_example() {
    VerifyReport report;
    report.scope = "example";

    MonomialIdeal q1 =
        MonomialIdeal::make(3, {mon({2, 0, 0}), mon({0, 2, 0}), mon({0, 0, 4})});
    MonomialIdeal q2 =
        MonomialIdeal::make(3, {mon({3, 0, 0}), mon({0, 3, 0}), mon({0, 0, 2})});
    MonomialIdeal I = intersect(q1, q2);

    {
        Law law("example-mults", 4, 0);
        const Int expected[4] = {26, 112, 294, 608};
        for (unsigned s = 1; s <= 4; ++s) {
            Int got = mult_engine(power(I, s));
            std::ostringstream os;
            os << "s=" << s << ": engine " << got << " expected " << expected[s - 1];
            law.record(got == expected[s - 1], os.str());
        }
        law.finish();
        report.laws.push_back(law.rep);
    }
    {
        Law law("example-counterexample", 4, 0);
        auto pd = primary_decomposition(I);
        law.record(!check_hypothesis(pd), "check_hypothesis should be false");
        const Int wrong[3] = {104, 260, 520};
        const Int engine[3] = {112, 294, 608};
        for (unsigned s = 2; s <= 4; ++s) {
            Int would_be = Int(26) * binomial(Int(3) + s - 1, Int(s) - 1);
            bool ok = would_be == wrong[s - 2] && would_be != engine[s - 2];
            std::ostringstream os;
            os << "s=" << s << ": formula " << would_be;
            law.record(ok, os.str());
        }
        law.finish();
        report.laws.push_back(law.rep);
    }
    {
        Law law("example-additivity", 1, 0);
        Int a = mult_engine(q1);
        Int b = mult_engine(q2);
        Int c = mult_engine(sum(q1, q2));
        std::ostringstream os;
        os << a << " + " << b << " - " << c << " != 26";
        law.record(a == 16 && b == 18 && c == 8 && a + b - c == 26, os.str());
        law.finish();
        report.laws.push_back(law.rep);
    }
    {
        Law law("hilbert-coherence", 5, 0);
        std::string why;
        for (unsigned s = 1; s <= 4; ++s)
            law.record(series_coherent(power(I, s), 12, why), why);
        law.record(series_coherent(I, 12, why), why);
        law.finish();
        report.laws.push_back(law.rep);
    }
    return report;
}

VerifyReport verify_lemma23(std::uint64_t seed, std::size_t budget) {
    VerifyReport report;
    report.scope = "lemma23";
    Rng rng(seed);

    Law law("lemma23-colon", 200, budget);
    Law coherence("hilbert-coherence", 200, budget);
    while (law.wants_more()) {
        IrreducibleCase c = random_irreducible(rng, 5, 4);
        Monomial xm = Monomial::variable(c.ideal.vars(), c.last_var, c.last_exp);
        bool ok = true;
        unsigned bad_s = 0;
        for (unsigned s = 2; s <= 4; ++s) {
            if (colon_by_monomial(power(c.ideal, s), xm) != power(c.ideal, s - 1)) {
                ok = false;
                bad_s = s;
                break;
            }
        }
        std::ostringstream os;
        os << describe(c.ideal) << " s=" << bad_s;
        law.record(ok, os.str());

        std::string why;
        coherence.record(series_coherent(c.ideal, 12, why), why);
    }
    law.finish();
    coherence.finish();
    report.laws.push_back(law.rep);
    report.laws.push_back(coherence.rep);
    return report;
}

VerifyReport verify_thm22(std::uint64_t seed, std::size_t budget) {
    VerifyReport report;
    report.scope = "thm22";
    Rng rng(seed);

    {
        Law law("lemma24-closed-form", 100, budget);
        while (law.wants_more()) {
            IrreducibleCase c = random_irreducible(rng, 5, 4);
            Int base = 1;
            for (const Monomial& g : c.ideal.gens())
                for (std::size_t i = 0; i < g.vars(); ++i)
                    if (g.exponent(i) > 0) base *= g.exponent(i);
            Int h(c.ideal.gens().size());
            bool ok = true;
            std::ostringstream os;
            for (unsigned s = 1; s <= 4 && ok; ++s) {
                Int closed = base * binomial(h + s - 1, Int(s) - 1);
                Int engine = mult_engine(power(c.ideal, s));
                if (closed != engine) {
                    ok = false;
                    os << describe(c.ideal) << " s=" << s << ": closed " << closed
                       << " engine " << engine;
                }
            }
            law.record(ok, os.str());
        }
        law.finish();
        report.laws.push_back(law.rep);
    }

    Law comp("thm22-1-component-sum", 100, budget);
    Law closed("thm22-2-closed-form", 100, budget);
    Law coherence("hilbert-coherence", 100, budget);
    while (comp.wants_more()) {
        MonomialIdeal I = random_ideal(rng, 4, 5, 3);
        auto pd = primary_decomposition(I);
        bool ok = true;
        std::ostringstream os;
        std::vector<Int> engine_vals;
        for (unsigned s = 1; s <= 3; ++s) {
            Int engine = mult_engine(power(I, s));
            engine_vals.push_back(engine);
            Int by_components = mult_power_components(pd, s);
            if (by_components != engine && ok) {
                ok = false;
                os << describe(I) << " s=" << s << ": components " << by_components
                   << " engine " << engine;
            }
        }
        comp.record(ok, os.str());

        if (check_hypothesis(pd)) {
            bool cok = true;
            std::ostringstream cs;
            for (unsigned s = 1; s <= 3 && cok; ++s) {
                FormulaReport rep = mult_power_closed(pd, s);
                if (rep.value != engine_vals[s - 1]) {
                    cok = false;
                    cs << describe(I) << " s=" << s << ": closed " << rep.value
                       << " engine " << engine_vals[s - 1];
                }
            }
            closed.record(cok, cs.str());
        }

        std::string why;
        coherence.record(series_coherent(I, 12, why), why);
    }
    comp.finish();
    closed.finish();
    coherence.finish();
    report.laws.push_back(comp.rep);
    report.laws.push_back(closed.rep);
    report.laws.push_back(coherence.rep);
    return report;
}

VerifyReport verify_special(std::uint64_t seed, std::size_t budget) {
    VerifyReport report;
    report.scope = "special";
    Rng rng(seed);

    Law dist("lemma26-distributivity", 100, budget);
    Law irr("lemma26-4-irreducibility", 100, budget);
    Law rad("radical-of-special-power", 100, budget);
    Law decomp("lemma27-decomposition", 100, budget);
    Law thm28("thm28-closed-form", 100, budget);
    Law coherence("hilbert-coherence", 100, budget);

    while (dist.wants_more()) {
        std::size_t n = rand_in(rng, 2, 4);
        MonomialIdeal a = random_ideal_in(rng, n, 4, 3);
        MonomialIdeal b = random_ideal_in(rng, n, 4, 3);
        unsigned m = static_cast<unsigned>(rand_in(rng, 1, 3));

        bool ok = special_power(intersect(a, b), m) ==
                      intersect(special_power(a, m), special_power(b, m)) &&
                  special_power(product(a, b), m) ==
                      product(special_power(a, m), special_power(b, m)) &&
                  special_power(sum(a, b), m) ==
                      sum(special_power(a, m), special_power(b, m));
        std::ostringstream os;
        os << describe(a) << ", " << describe(b) << " m=" << m;
        dist.record(ok, os.str());

        // Alternate irreducible and arbitrary inputs for the equivalence.
        MonomialIdeal I = dist.rep.cases % 2 == 0
                              ? random_irreducible(rng, 4, 3).ideal
                              : random_ideal(rng, 4, 4, 3);
        irr.record(is_irreducible(I) == is_irreducible(special_power(I, m)),
                   describe(I) + " m=" + std::to_string(m));
        rad.record(radical(special_power(I, m)) == radical(I),
                   describe(I) + " m=" + std::to_string(m));

        auto pd = primary_decomposition(I);
        auto pdm = primary_decomposition(special_power(I, m));
        bool dok = pd.components.size() == pdm.components.size();
        if (dok) {
            for (std::size_t i = 0; i < pd.components.size(); ++i) {
                if (pd.components[i].support != pdm.components[i].support ||
                    special_power(pd.components[i].ideal, m) != pdm.components[i].ideal) {
                    dok = false;
                    break;
                }
            }
        }
        decomp.record(dok, describe(I) + " m=" + std::to_string(m));

        if (check_hypothesis(pd)) {
            bool tok = true;
            std::ostringstream ts;
            for (unsigned mm = 1; mm <= 3 && tok; ++mm) {
                for (unsigned s = 1; s <= 3 && tok; ++s) {
                    FormulaReport r = mult_special_power_closed(pd, mm, s);
                    Int engine = mult_engine(power(special_power(I, mm), s));
                    if (r.value != engine) {
                        tok = false;
                        ts << describe(I) << " m=" << mm << " s=" << s << ": closed "
                           << r.value << " engine " << engine;
                    }
                }
            }
            thm28.record(tok, ts.str());
        }

        std::string why;
        coherence.record(series_coherent(I, 12, why), why);
    }
    for (Law* l : {&dist, &irr, &rad, &decomp, &thm28, &coherence}) {
        l->finish();
        report.laws.push_back(l->rep);
    }
    return report;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> complete_edges(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return e;
}

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

struct GraphCase {
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::vector<GraphCase> all_connected_graphs(std::size_t max_n) {
    std::vector<GraphCase> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        auto all = complete_edges(n);
        for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t i = 0; i < all.size(); ++i)
                if ((mask >> i) & 1u) edges.push_back(all[i]);
            if (connected(n, edges)) out.push_back({n, edges});
        }
    }
    return out;
}

std::string describe_graph(const WeightedOrientedGraph& d) {
    std::ostringstream os;
    os << "n=" << d.vertex_count() << " arcs{";
    for (const auto& [a, b] : d.arcs()) os << a + 1 << "->" << b + 1 << " ";
    os << "} w(";
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        if (v) os << ",";
        os << d.weight(v);
    }
    os << ")";
    return os.str();
}

} // namespace

VerifyReport verify_graphs(std::uint64_t seed, std::size_t budget) {
    VerifyReport report;
    report.scope = "graphs";
    Rng rng(seed);

    auto graphs = all_connected_graphs(5);
    std::size_t cases = std::max<std::size_t>(graphs.size(), 500);

    Law roundtrip("strong-cover-roundtrip", cases, budget);
    Law agree("decomposer-agreement", cases, budget);
    Law thm33("thm33-closed-form", cases, budget);
    Law halpha("height-equals-alpha", cases, budget);
    Law l3empty("minimum-cover-L3-empty", cases, budget);
    Law weight1("weight1-collapse", cases, budget);
    Law coherence("hilbert-coherence", cases, budget);

    std::size_t gi = 0;
    while (roundtrip.wants_more()) {
        const GraphCase& g = graphs[gi];
        gi = (gi + 1) % graphs.size();

        // Random orientation (occasionally both directions) and weights.
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (const auto& [a, b] : g.edges) {
            switch (rand_in(rng, 0, 9)) {
            case 0:
                arcs.emplace_back(a, b);
                arcs.emplace_back(b, a);
                break;
            default:
                if (rand_in(rng, 0, 1) == 0) arcs.emplace_back(a, b);
                else arcs.emplace_back(b, a);
            }
        }
        std::vector<Int> weights(g.n);
        for (auto& w : weights) w = Int(rand_in(rng, 1, 3));
        WeightedOrientedGraph d(g.n, arcs, weights);
        std::string id = describe_graph(d);

        MonomialIdeal I = edge_ideal(d);
        auto cover_pd = cover_primary_decomposition(d);
        roundtrip.record(intersect_all(cover_pd, g.n) == I, id);

        auto pd = primary_decomposition(I);
        agree.record(pd.components == cover_pd.components, id);

        CoverStats st = alpha_and_r(d.underlying());
        halpha.record(height(pd) == st.alpha, id);

        bool l3ok = true;
        for (const auto& c : st.minimum_covers)
            if (!cover_partition(d, c).l3.empty()) l3ok = false;
        l3empty.record(l3ok, id);

        bool tok = true;
        std::ostringstream ts;
        for (unsigned m = 1; m <= 2 && tok; ++m) {
            for (unsigned s = 1; s <= 2 && tok; ++s) {
                Int closed = mult_oriented_closed(d, m, s);
                Int engine = mult_engine(power(special_power(I, m), s));
                if (closed != engine) {
                    tok = false;
                    ts << id << " m=" << m << " s=" << s << ": closed " << closed
                       << " engine " << engine;
                }
            }
        }
        thm33.record(tok, ts.str());

        // Same graph with all weights 1: strong covers collapse to minimal
        // covers and the formula reduces to r(G) * C(alpha+s-1, s-1).
        WeightedOrientedGraph d1(g.n, arcs, std::vector<Int>(g.n, 1));
        bool wok = strong_vertex_covers(d1) == minimal_vertex_covers(d1.underlying());
        for (unsigned s = 1; s <= 3 && wok; ++s)
            wok = mult_oriented_closed(d1, 1, s) ==
                  Int(st.r) * binomial(Int(st.alpha) + s - 1, Int(s) - 1);
        weight1.record(wok, id);

        std::string why;
        coherence.record(series_coherent(I, 12, why), why);
    }

    for (Law* l : {&roundtrip, &agree, &thm33, &halpha, &l3empty, &weight1, &coherence}) {
        l->finish();
        report.laws.push_back(l->rep);
    }
    return report;
}

VerifyReport verify_squarefree(std::uint64_t seed, std::size_t budget) {
    VerifyReport report;
    report.scope = "squarefree";
    Rng rng(seed);

    Law law("squarefree-closed-form", 50, budget);
    Law reduction("squarefree-m1-reduction", 50, budget);
    Law coherence("hilbert-coherence", 50, budget);
    while (law.wants_more()) {
        MonomialIdeal I = random_squarefree(rng, 5, 5);
        auto pd = primary_decomposition(I);
        auto comps = min_height_components(pd);
        std::size_t h = comps.front().height();
        Int r(comps.size());

        bool ok = true;
        std::ostringstream os;
        for (unsigned m = 1; m <= 3 && ok; ++m) {
            for (unsigned s = 1; s <= 3 && ok; ++s) {
                Int closed = mult_squarefree_closed(I, m, s);
                Int engine = mult_engine(power(special_power(I, m), s));
                if (closed != engine) {
                    ok = false;
                    os << describe(I) << " m=" << m << " s=" << s << ": closed "
                       << closed << " engine " << engine;
                }
            }
        }
        law.record(ok, os.str());

        bool rok = true;
        for (unsigned s = 1; s <= 3 && rok; ++s)
            rok = mult_squarefree_closed(I, 1, s) ==
                  r * binomial(Int(h) + s - 1, Int(s) - 1);
        reduction.record(rok, describe(I));

        std::string why;
        coherence.record(series_coherent(I, 12, why), why);
    }
    for (Law* l : {&law, &reduction, &coherence}) {
        l->finish();
        report.laws.push_back(l->rep);
    }
    return report;
}

std::vector<VerifyReport> verify_all(std::uint64_t seed, std::size_t budget) {
    return {verify_example(),           verify_lemma23(seed, budget),
            verify_thm22(seed, budget), verify_special(seed, budget),
            verify_graphs(seed, budget), verify_squarefree(seed, budget)};
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream os;
    for (const LawReport& l : r.laws) {
        const char* tag = l.status == LawStatus::passed         ? "PASS"
                          : l.status == LawStatus::failed       ? "FAIL"
                                                                : "BUDGET";
        os << tag << " " << r.scope << "/" << l.law << ": " << l.cases - l.failures
           << "/" << l.cases << " cases";
        if (l.failures > 0) os << "; first counterexample: " << l.first_counterexample;
        os << "\n";
    }
    return os.str();
}

} // namespace mono
