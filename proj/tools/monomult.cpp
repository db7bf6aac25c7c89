#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mono/decompose.hpp"
#include "mono/errors.hpp"
#include "mono/formulas.hpp"
#include "mono/graph.hpp"
#include "mono/hilbert.hpp"
#include "mono/io.hpp"
#include "mono/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw mono::malformed_input("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

mono::MonomialIdeal select_ideal(const mono::IdealSpec& spec, const std::string& name) {
    return name.empty() ? spec.first_ideal() : spec.ideal(name);
}

// Unbounded integers render as decimal strings; see docs/interface.md.
json big(const mono::Int& v) { return v.str(); }

json echo_ideal(const mono::IdealSpec& spec, const mono::MonomialIdeal& I) {
    json e;
    e["variables"] = spec.variables;
    json gens = json::array();
    for (const auto& g : I.gens())
        gens.push_back(mono::monomial_to_string(g, spec.variables));
    e["generators"] = gens;
    return e;
}

json components_json(const mono::PrimaryDecomposition& pd,
                     const std::vector<std::string>& names) {
    json comps = json::array();
    for (const auto& c : pd.components) {
        json jc;
        json support = json::array();
        for (std::size_t v : c.support) support.push_back(names[v]);
        jc["support"] = support;
        json gens = json::array();
        for (const auto& g : c.ideal.gens())
            gens.push_back(mono::monomial_to_string(g, names));
        jc["generators"] = gens;
        jc["height"] = c.height();
        jc["irreducible"] = c.is_irreducible;
        comps.push_back(jc);
    }
    return comps;
}

int run_decompose(const std::string& path, const std::string& name) {
    auto spec = mono::parse_ideal_spec(read_input(path));
    auto I = select_ideal(spec, name);
    auto pd = mono::primary_decomposition(I);
    json out;
    out["command"] = "decompose";
    out["input"] = echo_ideal(spec, I);
    out["height"] = mono::height(pd);
    out["components"] = components_json(pd, spec.variables);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_hilbert(const std::string& path, const std::string& name, unsigned s,
                unsigned m) {
    auto spec = mono::parse_ideal_spec(read_input(path));
    auto I = select_ideal(spec, name);
    if (m > 1) I = mono::special_power(I, m);
    if (s > 1) I = mono::power(I, s);
    auto summary = mono::hilbert_summary(I);
    json out;
    out["command"] = "hilbert";
    out["input"] = echo_ideal(spec, I);
    out["n"] = summary.n;
    out["k_poly"] = mono::to_string(summary.k_poly);
    out["dim"] = summary.dim;
    out["q_poly"] = mono::to_string(summary.q_poly);
    out["mult"] = big(summary.mult);
    json coeffs = json::array();
    for (const auto& e : summary.hilbert_coeffs) coeffs.push_back(big(e));
    out["hilbert_coeffs"] = coeffs;
    out["hilbert_polynomial"] = mono::to_string(mono::hilbert_polynomial(summary));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_mult(const std::string& path, const std::string& name, unsigned s, unsigned m,
             const std::string& method) {
    auto spec = mono::parse_ideal_spec(read_input(path));
    auto I = select_ideal(spec, name);
    auto pd = mono::primary_decomposition(I);

    json out;
    out["command"] = "mult";
    out["input"] = echo_ideal(spec, I);
    out["power"] = s;
    out["special"] = m;

    if (method == "closed") {
        auto rep = m > 1 ? mono::mult_special_power_closed(pd, m, s)
                         : mono::mult_power_closed(pd, s);
        out["method"] = mono::to_string(rep.method);
        out["h"] = rep.h;
        out["r"] = rep.r;
        out["base_mult"] = big(rep.base_mult);
        out["value"] = big(rep.value);
    } else if (method == "components") {
        auto target = m > 1 ? mono::special_power(I, m) : I;
        auto tpd = mono::primary_decomposition(target);
        mono::Int value = mono::mult_power_components(tpd, s);
        out["method"] = mono::to_string(mono::MultMethod::component_sum);
        out["h"] = mono::height(tpd);
        out["r"] = mono::min_height_components(tpd).size();
        out["base_mult"] = big(mono::mult_engine(target));
        out["value"] = big(value);
    } else { // engine
        auto target = mono::power(m > 1 ? mono::special_power(I, m) : I, s);
        out["method"] = mono::to_string(mono::MultMethod::engine_fallback);
        out["h"] = mono::height(pd);
        out["r"] = mono::min_height_components(pd).size();
        out["base_mult"] = big(mono::mult_engine(I));
        out["value"] = big(mono::mult_engine(target));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_covers(const std::string& path, bool strong) {
    auto spec = mono::parse_graph_spec(read_input(path));
    auto d = spec.graph();
    json out;
    out["command"] = "covers";
    out["input"] = json::object();
    out["input"]["vertices"] = spec.vertices;

    auto name_set = [&](const mono::VertexSet& s) {
        json a = json::array();
        for (std::size_t v : s) a.push_back(spec.vertices[v]);
        return a;
    };

    auto covers = strong ? mono::strong_vertex_covers(d)
                         : mono::minimal_vertex_covers(d.underlying());
    json list = json::array();
    for (const auto& c : covers) {
        auto p = mono::cover_partition(d, c);
        json jc;
        jc["cover"] = name_set(p.cover);
        jc["l1"] = name_set(p.l1);
        jc["l2"] = name_set(p.l2);
        jc["l3"] = name_set(p.l3);
        list.push_back(jc);
    }
    out[strong ? "strong_covers" : "minimal_covers"] = list;
    auto st = mono::alpha_and_r(d.underlying());
    out["alpha"] = st.alpha;
    out["r"] = st.r;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_graph_mult(const std::string& path, unsigned s, unsigned m,
                   const std::string& method) {
    auto spec = mono::parse_graph_spec(read_input(path));
    auto d = spec.graph();
    auto I = mono::edge_ideal(d);
    auto st = mono::alpha_and_r(d.underlying());

    json out;
    out["command"] = "graph-mult";
    out["input"] = json::object();
    out["input"]["vertices"] = spec.vertices;
    json gens = json::array();
    for (const auto& g : I.gens())
        gens.push_back(mono::monomial_to_string(g, spec.vertices));
    out["input"]["edge_ideal"] = gens;
    out["power"] = s;
    out["special"] = m;
    out["h"] = st.alpha;
    out["r"] = st.r;
    out["base_mult"] = big(mono::mult_oriented_closed(d, 1, 1));

    if (method == "closed") {
        out["method"] = "closed_form";
        out["value"] = big(mono::mult_oriented_closed(d, m, s));
    } else {
        out["method"] = "engine_fallback";
        auto target = mono::power(m > 1 ? mono::special_power(I, m) : I, s);
        out["value"] = big(mono::mult_engine(target));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& scope, std::uint64_t seed, std::size_t budget) {
    std::vector<mono::VerifyReport> reports;
    if (scope == "all") reports = mono::verify_all(seed, budget);
    else if (scope == "example") reports = {mono::verify_example()};
    else if (scope == "lemma23") reports = {mono::verify_lemma23(seed, budget)};
    else if (scope == "thm22") reports = {mono::verify_thm22(seed, budget)};
    else if (scope == "special") reports = {mono::verify_special(seed, budget)};
    else if (scope == "graphs") reports = {mono::verify_graphs(seed, budget)};
    else if (scope == "squarefree") reports = {mono::verify_squarefree(seed, budget)};
    else throw mono::malformed_input("unknown scope '" + scope + "'");

    bool ok = true;
    bool exhausted = false;
    json out;
    out["command"] = "verify";
    out["seed"] = seed;
    out["budget"] = budget;
    json scopes = json::array();
    for (const auto& r : reports) {
        std::cerr << mono::format_report(r);
        ok = ok && r.ok();
        exhausted = exhausted || r.exhausted();
        json js;
        js["scope"] = r.scope;
        json laws = json::array();
        for (const auto& l : r.laws) {
            json jl;
            jl["law"] = l.law;
            jl["cases"] = l.cases;
            jl["failures"] = l.failures;
            jl["status"] = l.status == mono::LawStatus::passed         ? "passed"
                           : l.status == mono::LawStatus::failed       ? "failed"
                                                                       : "budget_exhausted";
            if (!l.first_counterexample.empty())
                jl["first_counterexample"] = l.first_counterexample;
            laws.push_back(jl);
        }
        js["laws"] = laws;
        scopes.push_back(js);
    }
    out["scopes"] = scopes;
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
    if (!ok) return kExitVerifyFailed;
    if (exhausted) return kExitResource;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicity computations for monomial ideals and "
                 "edge ideals of weighted oriented graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string ideal_name;
    std::string method = "engine";
    std::string scope = "all";
    unsigned s = 1;
    unsigned m = 1;
    std::uint64_t seed = 1;
    std::size_t budget = 0;
    bool strong = false;

    auto* decompose = app.add_subcommand("decompose", "Irredundant reduced primary decomposition");
    decompose->add_option("file", file, "ideal file ('-' for stdin)")->required();
    decompose->add_option("--ideal", ideal_name, "ideal name (default: first declared)");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series summary of R/I");
    hilbert->add_option("file", file)->required();
    hilbert->add_option("--ideal", ideal_name);
    hilbert->add_option("--power", s, "ordinary power s");
    hilbert->add_option("--special", m, "special power m");

    auto* mult = app.add_subcommand("mult", "Multiplicity of R/(I^{m})^s");
    mult->add_option("file", file)->required();
    mult->add_option("--ideal", ideal_name);
    mult->add_option("--power", s, "ordinary power s (default 1)");
    mult->add_option("--special", m, "special power m (default 1)");
    mult->add_option("--method", method, "closed | components | engine")
        ->check(CLI::IsMember({"closed", "components", "engine"}));

    auto* covers = app.add_subcommand("covers", "Vertex covers with L1/L2/L3 partitions");
    covers->add_option("file", file, "graph file ('-' for stdin)")->required();
    covers->add_flag("--strong", strong, "list strong covers instead of minimal ones");

    auto* gmult = app.add_subcommand("graph-mult", "Multiplicity for an oriented graph edge ideal");
    gmult->add_option("file", file)->required();
    gmult->add_option("--power", s);
    gmult->add_option("--special", m);
    gmult->add_option("--method", method, "closed | engine")
        ->check(CLI::IsMember({"closed", "engine"}));

    auto* verify = app.add_subcommand("verify", "Run the verification harness");
    verify->add_option("--scope", scope, "all | example | lemma23 | thm22 | special | graphs | squarefree")
        ->check(CLI::IsMember({"all", "example", "lemma23", "thm22", "special", "graphs", "squarefree"}));
    verify->add_option("--seed", seed, "RNG seed (default 1)");
    verify->add_option("--budget", budget, "cap on cases per law (0 = defaults)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decompose->parsed()) return run_decompose(file, ideal_name);
        if (hilbert->parsed()) return run_hilbert(file, ideal_name, s, m);
        if (mult->parsed()) return run_mult(file, ideal_name, s, m, method);
        if (covers->parsed()) return run_covers(file, strong);
        if (gmult->parsed()) return run_graph_mult(file, s, m, method);
        if (verify->parsed()) return run_verify(scope, seed, budget);
    } catch (const mono::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const mono::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mono::malformed_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mono::degenerate_input& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mono::hypothesis_violated& e) {
        std::cerr << "hypothesis violated: " << e.what()
                  << " (use --method components or engine)\n";
        return kExitVerifyFailed;
    } catch (const mono::not_squarefree& e) {
        std::cerr << "not square-free: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mono::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
