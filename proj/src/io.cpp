#include "mono/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

namespace {

constexpr std::size_t kMaxIntegerDigits = 4096;

struct Line {
    std::size_t number; // 1-based
    std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t num = 0;
    while (std::getline(in, raw)) {
        ++num;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back({num, raw});
    }
    return lines;
}

struct Cursor {
    const Line& line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos])))
            ++pos;
    }
    bool eol() {
        skip_ws();
        return pos >= line.text.size();
    }
    char peek() {
        skip_ws();
        return pos < line.text.size() ? line.text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(line.number, pos + 1, msg);
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (line.text.compare(pos, w.size(), w) != 0) return false;
        std::size_t end = pos + w.size();
        if (end < line.text.size() &&
            (std::isalnum(static_cast<unsigned char>(line.text[end])) || line.text[end] == '_'))
            return false;
        pos = end;
        return true;
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        auto is_start = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto is_cont = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos >= line.text.size() || !is_start(line.text[pos]))
            fail("expected an identifier");
        while (pos < line.text.size() && is_cont(line.text[pos])) ++pos;
        return line.text.substr(start, pos - start);
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos])))
            ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > kMaxIntegerDigits) {
            pos = start;
            fail("integer literal too large");
        }
        return Int(line.text.substr(start, pos - start));
    }
};

Monomial parse_monomial(Cursor& c, const std::map<std::string, std::size_t>& vars,
                        std::size_t n) {
    std::vector<Int> exps(n, 0);
    if (c.peek() == '1') {
        ++c.pos;
        return Monomial(std::move(exps));
    }
    while (true) {
        c.skip_ws();
        std::size_t at = c.pos;
        std::string name = c.identifier();
        auto it = vars.find(name);
        if (it == vars.end()) {
            c.pos = at;
            c.fail("undeclared variable '" + name + "'");
        }
        Int e = 1;
        if (c.accept('^')) e = c.integer();
        exps[it->second] += e;
        if (!c.accept('*')) break;
    }
    return Monomial(std::move(exps));
}

} // namespace

const IdealSpec::NamedIdeal& IdealSpec::find(const std::string& name) const {
    for (const auto& ni : ideals)
        if (ni.name == name) return ni;
    throw malformed_input("no ideal named '" + name + "'");
}

MonomialIdeal IdealSpec::ideal(const std::string& name) const {
    return MonomialIdeal::make(variables.size(), find(name).gens);
}

MonomialIdeal IdealSpec::first_ideal() const {
    if (ideals.empty()) throw malformed_input("no ideal declared");
    return MonomialIdeal::make(variables.size(), ideals.front().gens);
}

IdealSpec parse_ideal_spec(const std::string& text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw parse_error(1, 1, "empty input");

    IdealSpec spec;
    std::map<std::string, std::size_t> vars;

    Cursor ring{lines.front()};
    if (!ring.accept_word("ring"))
        ring.fail("expected a 'ring' line first");
    while (!ring.eol()) {
        ring.skip_ws();
        std::size_t at = ring.pos;
        std::string name = ring.identifier();
        if (!vars.emplace(name, spec.variables.size()).second) {
            ring.pos = at;
            ring.fail("duplicate variable '" + name + "'");
        }
        spec.variables.push_back(std::move(name));
    }
    if (spec.variables.empty()) ring.fail("a ring needs at least one variable");

    for (std::size_t li = 1; li < lines.size(); ++li) {
        Cursor c{lines[li]};
        if (!c.accept_word("ideal")) c.fail("expected an 'ideal' line");
        IdealSpec::NamedIdeal ni;
        ni.name = c.identifier();
        c.expect('=', "after the ideal name");
        ni.gens.push_back(parse_monomial(c, vars, spec.variables.size()));
        while (c.accept(','))
            ni.gens.push_back(parse_monomial(c, vars, spec.variables.size()));
        if (!c.eol()) c.fail("trailing input after generator list");
        for (const auto& other : spec.ideals)
            if (other.name == ni.name) c.fail("duplicate ideal '" + ni.name + "'");
        spec.ideals.push_back(std::move(ni));
    }
    if (spec.ideals.empty())
        throw parse_error(lines.front().number, 1, "no ideal declared");
    return spec;
}

WeightedOrientedGraph GraphSpec::graph() const {
    return WeightedOrientedGraph(vertices.size(), arcs, weights);
}

GraphSpec parse_graph_spec(const std::string& text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw parse_error(1, 1, "empty input");

    GraphSpec spec;
    std::map<std::string, std::size_t> verts;

    Cursor v{lines.front()};
    if (!v.accept_word("vertices")) v.fail("expected a 'vertices:' line first");
    v.expect(':', "after 'vertices'");
    while (!v.eol()) {
        v.skip_ws();
        std::size_t at = v.pos;
        std::string name = v.identifier();
        Int w = 1;
        if (v.accept(':')) w = v.integer();
        if (w < 1) {
            v.pos = at;
            v.fail("vertex weight must be >= 1");
        }
        if (!verts.emplace(name, spec.vertices.size()).second) {
            v.pos = at;
            v.fail("duplicate vertex '" + name + "'");
        }
        spec.vertices.push_back(std::move(name));
        spec.weights.push_back(std::move(w));
    }
    if (spec.vertices.empty()) v.fail("at least one vertex required");

    if (lines.size() < 2) throw parse_error(lines.front().number, 1, "missing 'arcs:' line");
    Cursor a{lines[1]};
    if (!a.accept_word("arcs")) a.fail("expected an 'arcs:' line");
    a.expect(':', "after 'arcs'");
    while (!a.eol()) {
        a.skip_ws();
        std::size_t at = a.pos;
        std::string from = a.identifier();
        a.expect('-', "in '->'");
        a.expect('>', "in '->'");
        std::string to = a.identifier();
        auto fi = verts.find(from);
        auto ti = verts.find(to);
        if (fi == verts.end() || ti == verts.end()) {
            a.pos = at;
            a.fail("undeclared vertex in arc");
        }
        if (fi->second == ti->second) {
            a.pos = at;
            a.fail("self-arcs are not allowed");
        }
        spec.arcs.emplace_back(fi->second, ti->second);
    }
    if (lines.size() > 2) {
        Cursor extra{lines[2]};
        extra.fail("unexpected extra line");
    }
    return spec;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!first) os << "*";
        first = false;
        os << names[i];
        if (m.exponent(i) != 1) os << "^" << m.exponent(i);
    }
    return os.str();
}

std::string print_ideal_spec(const IdealSpec& spec) {
    std::ostringstream os;
    os << "ring";
    for (const auto& v : spec.variables) os << " " << v;
    os << "\n";
    for (const auto& ni : spec.ideals) {
        os << "ideal " << ni.name << " = ";
        for (std::size_t i = 0; i < ni.gens.size(); ++i) {
            if (i) os << ", ";
            os << monomial_to_string(ni.gens[i], spec.variables);
        }
        os << "\n";
    }
    return os.str();
}

std::string print_graph_spec(const GraphSpec& spec) {
    std::ostringstream os;
    os << "vertices:";
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
        os << " " << spec.vertices[i];
        if (spec.weights[i] != 1) os << ":" << spec.weights[i];
    }
    os << "\narcs:";
    for (const auto& [a, b] : spec.arcs)
        os << " " << spec.vertices[a] << "->" << spec.vertices[b];
    os << "\n";
    return os.str();
}

} // namespace mono
