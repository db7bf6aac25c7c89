#include "mono/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mono/errors.hpp"

namespace mono {

namespace {

std::uint32_t full_mask(std::size_t n) {
    return n >= 32 ? ~0u : (1u << n) - 1u;
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet s;
    for (std::size_t v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) s.push_back(v);
    return s;
}

std::uint32_t set_to_mask(const VertexSet& s, std::size_t n) {
    std::uint32_t m = 0;
    for (std::size_t v : s) {
        if (v >= n) throw malformed_input("vertex index out of range");
        m |= 1u << v;
    }
    return m;
}

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n > 31)
        throw resource_limit("vertex count exceeds the enumeration cap");
}

bool cover_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

SimpleGraph::SimpleGraph(std::size_t n,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), adj_(n, 0) {
    if (n > 31) throw malformed_input("at most 31 vertices supported");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw malformed_input("edge endpoint out of range");
        if (a == b) throw malformed_input("loops are not allowed");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) continue;
        adj_[a] |= 1u << b;
        adj_[b] |= 1u << a;
    }
    edges_.assign(seen.begin(), seen.end());
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
    return a < n_ && b < n_ && (adj_[a] >> b) & 1u;
}

bool SimpleGraph::is_cover(std::uint32_t mask) const {
    for (const auto& [a, b] : edges_)
        if (!((mask >> a) & 1u) && !((mask >> b) & 1u)) return false;
    return true;
}

WeightedOrientedGraph::WeightedOrientedGraph(
    std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> arcs,
    std::vector<Int> weights)
    : underlying_(n, arcs), weights_(std::move(weights)) {
    if (weights_.size() != n)
        throw malformed_input("need one weight per vertex");
    for (const Int& w : weights_)
        if (w < 1) throw malformed_input("vertex weights must be >= 1");
    std::set<std::pair<std::size_t, std::size_t>> seen(arcs.begin(), arcs.end());
    arcs_.assign(seen.begin(), seen.end());
}

bool WeightedOrientedGraph::has_arc(std::size_t a, std::size_t b) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(a, b));
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of the
// complement are the maximal independent sets of g.
void bk(const std::vector<std::uint32_t>& cadj, std::uint32_t r, std::uint32_t p,
        std::uint32_t x, std::vector<std::uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint32_t px = p | x;
    std::size_t best = static_cast<std::size_t>(-1);
    int best_count = -1;
    for (std::uint32_t m = px; m; m &= m - 1) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(m));
        int c = std::popcount(p & cadj[u]);
        if (c > best_count) {
            best_count = c;
            best = u;
        }
    }
    std::uint32_t candidates = p & ~cadj[best];
    for (std::uint32_t m = candidates; m; m &= m - 1) {
        std::uint32_t vbit = m & (~m + 1);
        std::size_t v = static_cast<std::size_t>(std::countr_zero(vbit));
        bk(cadj, r | vbit, p & cadj[v], x & cadj[v], out);
        p &= ~vbit;
        x |= vbit;
    }
}

std::vector<std::uint32_t> maximal_independent_sets(const SimpleGraph& g) {
    std::size_t n = g.vertex_count();
    std::uint32_t all = full_mask(n);
    std::vector<std::uint32_t> cadj(n);
    for (std::size_t v = 0; v < n; ++v)
        cadj[v] = all & ~g.adjacency_mask(v) & ~(1u << v);
    std::vector<std::uint32_t> out;
    bk(cadj, 0, all, 0, out);
    return out;
}

} // namespace

std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g, std::size_t cap) {
    check_cap(g.vertex_count(), cap);
    std::uint32_t all = full_mask(g.vertex_count());
    std::vector<VertexSet> covers;
    for (std::uint32_t mis : maximal_independent_sets(g))
        covers.push_back(mask_to_set(all & ~mis));
    std::sort(covers.begin(), covers.end(), cover_less);
    return covers;
}

CoverStats alpha_and_r(const SimpleGraph& g, std::size_t cap) {
    auto covers = minimal_vertex_covers(g, cap);
    CoverStats st;
    st.alpha = covers.front().size();
    for (const auto& c : covers)
        if (c.size() == st.alpha) st.minimum_covers.push_back(c);
    st.r = st.minimum_covers.size();
    return st;
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d) {
    std::size_t n = d.vertex_count();
    std::vector<Monomial> gens;
    for (const auto& [i, j] : d.arcs()) {
        std::vector<Int> e(n, 0);
        e[i] += 1;
        e[j] += d.weight(j);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

namespace {

CoverPartition partition_mask(const WeightedOrientedGraph& d, std::uint32_t cmask,
                              L1Convention conv) {
    const SimpleGraph& g = d.underlying();
    if (!g.is_cover(cmask)) throw malformed_input("the given set is not a vertex cover");

    std::uint32_t l1 = 0, l3 = 0;
    if (conv == L1Convention::directed) {
        for (const auto& [a, b] : d.arcs())
            if (((cmask >> a) & 1u) && !((cmask >> b) & 1u)) l1 |= 1u << a;
    } else {
        for (std::uint32_t m = cmask; m; m &= m - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            if (g.adjacency_mask(v) & ~cmask) l1 |= 1u << v;
        }
    }
    for (std::uint32_t m = cmask; m; m &= m - 1) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
        if ((g.adjacency_mask(v) & ~cmask) == 0) l3 |= 1u << v;
    }

    CoverPartition p;
    p.cover = mask_to_set(cmask);
    p.l1 = mask_to_set(l1);
    p.l3 = mask_to_set(l3);
    p.l2 = mask_to_set(cmask & ~(l1 | l3));
    return p;
}

bool is_strong_mask(const WeightedOrientedGraph& d, std::uint32_t cmask,
                    L1Convention conv) {
    CoverPartition p = partition_mask(d, cmask, conv);
    // A cover is minimal exactly when L3 is empty, so only L3 needs checking.
    for (std::size_t v : p.l3) {
        bool ok = false;
        for (const auto& [a, b] : d.arcs()) {
            if (b != v || d.weight(a) < 2) continue;
            bool a_in_l23 =
                std::binary_search(p.l2.begin(), p.l2.end(), a) ||
                std::binary_search(p.l3.begin(), p.l3.end(), a);
            if (a_in_l23) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace

CoverPartition cover_partition(const WeightedOrientedGraph& d, const VertexSet& cover,
                               L1Convention conv) {
    return partition_mask(d, set_to_mask(cover, d.vertex_count()), conv);
}

std::vector<VertexSet> strong_vertex_covers(const WeightedOrientedGraph& d,
                                            std::size_t cap, L1Convention conv) {
    std::size_t n = d.vertex_count();
    check_cap(n, cap);
    const SimpleGraph& g = d.underlying();
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask <= full_mask(n); ++mask) {
        if (!g.is_cover(mask)) continue;
        if (is_strong_mask(d, mask, conv)) out.push_back(mask_to_set(mask));
        if (n == 0) break;
    }
    std::sort(out.begin(), out.end(), cover_less);
    return out;
}

PrimaryDecomposition cover_primary_decomposition(const WeightedOrientedGraph& d,
                                                 std::size_t cap) {
    std::size_t n = d.vertex_count();
    std::vector<PrimaryComponent> comps;
    for (const VertexSet& c : strong_vertex_covers(d, cap)) {
        CoverPartition p = cover_partition(d, c);
        std::vector<Monomial> gens;
        for (std::size_t v : p.l1) gens.push_back(Monomial::variable(n, v));
        for (std::size_t v : p.l2) gens.push_back(Monomial::variable(n, v, d.weight(v)));
        for (std::size_t v : p.l3) gens.push_back(Monomial::variable(n, v, d.weight(v)));
        PrimaryComponent pc;
        pc.ideal = MonomialIdeal::make(n, std::move(gens));
        pc.support = p.cover;
        pc.is_irreducible = true; // I_C is generated by pure powers
        comps.push_back(std::move(pc));
    }
    std::sort(comps.begin(), comps.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  if (a.height() != b.height()) return a.height() < b.height();
                  if (a.support != b.support) return a.support < b.support;
                  return std::lexicographical_compare(
                      a.ideal.gens().begin(), a.ideal.gens().end(),
                      b.ideal.gens().begin(), b.ideal.gens().end(), lex_less);
              });
    PrimaryDecomposition pd;
    pd.components = std::move(comps);
    return pd;
}

Int mult_oriented_closed(const WeightedOrientedGraph& d, unsigned m, unsigned s,
                         std::size_t cap) {
    if (m < 1 || s < 1) throw malformed_input("m and s must be >= 1");
    CoverStats st = alpha_and_r(d.underlying(), cap);
    Int total = 0;
    for (const VertexSet& c : st.minimum_covers) {
        CoverPartition p = cover_partition(d, c);
        Int prod = 1;
        for (std::size_t v : p.l2) prod *= d.weight(v);
        total += prod;
    }
    return ipow(Int(m), static_cast<unsigned>(st.alpha)) * total *
           binomial(Int(st.alpha) + s - 1, Int(s) - 1);
}

} // namespace mono
