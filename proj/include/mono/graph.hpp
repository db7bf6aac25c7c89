#ifndef MONO_GRAPH_HPP
#define MONO_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mono/decompose.hpp"
#include "mono/ideal.hpp"

namespace mono {

using VertexSet = std::vector<std::size_t>; // sorted vertex indices

/// Simple undirected graph on vertices 0..n-1; no loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::uint32_t adjacency_mask(std::size_t v) const { return adj_[v]; }
    bool has_edge(std::size_t a, std::size_t b) const;
    bool is_cover(std::uint32_t mask) const;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_; // normalized a < b
    std::vector<std::uint32_t> adj_;
};

/// Orientation of a simple graph plus a positive integer weight per vertex.
/// Both orientations of one underlying edge may be present.
class WeightedOrientedGraph {
public:
    WeightedOrientedGraph(std::size_t n,
                          std::vector<std::pair<std::size_t, std::size_t>> arcs,
                          std::vector<Int> weights);

    const SimpleGraph& underlying() const { return underlying_; }
    std::size_t vertex_count() const { return underlying_.vertex_count(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const { return arcs_; }
    const Int& weight(std::size_t v) const { return weights_[v]; }
    const std::vector<Int>& weights() const { return weights_; }
    bool has_arc(std::size_t a, std::size_t b) const;

private:
    SimpleGraph underlying_;
    std::vector<std::pair<std::size_t, std::size_t>> arcs_; // sorted, deduped
    std::vector<Int> weights_;
};

/// Which neighbors put a cover vertex into L1: only out-neighbors (the
/// default, matching the cover decomposition) or any neighbor.
enum class L1Convention { directed, undirected };

struct CoverPartition {
    VertexSet cover;
    VertexSet l1;
    VertexSet l2;
    VertexSet l3;
};

inline constexpr std::size_t kDefaultVertexCap = 20;

/// All minimal vertex covers, as complements of maximal independent sets;
/// sorted by (size, vertex list).
std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g,
                                             std::size_t vertex_cap = kDefaultVertexCap);

struct CoverStats {
    std::size_t alpha = 0;               // minimum cover size
    std::size_t r = 0;                   // number of minimum covers
    std::vector<VertexSet> minimum_covers;
};

CoverStats alpha_and_r(const SimpleGraph& g, std::size_t vertex_cap = kDefaultVertexCap);

/// I(D): one generator x_i * x_j^{w(x_j)} per arc (i, j).
MonomialIdeal edge_ideal(const WeightedOrientedGraph& d);

/// Splits a vertex cover into L1 / L2 / L3. Throws malformed_input when C is
/// not a cover of the underlying graph.
CoverPartition cover_partition(const WeightedOrientedGraph& d, const VertexSet& cover,
                               L1Convention conv = L1Convention::directed);

/// All strong vertex covers: covers that are minimal, or in which every L3
/// vertex has an in-arc from an L2 or L3 vertex of weight >= 2.
std::vector<VertexSet> strong_vertex_covers(const WeightedOrientedGraph& d,
                                            std::size_t vertex_cap = kDefaultVertexCap,
                                            L1Convention conv = L1Convention::directed);

/// One irreducible component I_C per strong cover C, with
/// I_C = (L1(C), { x_j^{w(x_j)} : x_j in L2(C) + L3(C) }).
PrimaryDecomposition cover_primary_decomposition(const WeightedOrientedGraph& d,
                                                 std::size_t vertex_cap = kDefaultVertexCap);

/// mult(R/(I(D)^{m})^s) = m^alpha * sum over minimum covers of the product of
/// L2-weights, times C(alpha+s-1, s-1).
Int mult_oriented_closed(const WeightedOrientedGraph& d, unsigned m, unsigned s,
                         std::size_t vertex_cap = kDefaultVertexCap);

} // namespace mono

#endif
