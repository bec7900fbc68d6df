#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ktcover {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Adjacency is kept as one bitset row per vertex. Rows are kept symmetric
/// and irreflexive by every mutator, so `adjacent(u, v) == adjacent(v, u)`
/// and `!adjacent(v, v)` always hold.
class Graph {
public:
    explicit Graph(int n = 0);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edges_; }

    /// Adds {u, v}. Self loops and out-of-range ids throw std::invalid_argument.
    /// Adding an existing edge is a no-op.
    void add_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    std::vector<Vertex> neighbor_list(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Whether the given vertices are pairwise adjacent.
    bool is_clique(std::span<const Vertex> vertices) const;

    VertexSet empty_set() const { return VertexSet(adj_.size()); }
    VertexSet full_set() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
    std::size_t edges_ = 0;
};

/// An induced subgraph together with the relabeling that produced it.
/// `to_parent[i]` is the parent id of local vertex i; `from_parent[v]` is the
/// local id of parent vertex v, or -1 when v was dropped.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> from_parent;
};

/// Induced subgraph on `keep`; local ids follow increasing parent ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph remove_vertex(const Graph& g, Vertex v);

/// Vertex of minimum degree; ties go to the smallest id. Requires n >= 1.
Vertex min_degree_vertex(const Graph& g);
int min_degree(const Graph& g);

std::vector<Vertex> to_vector(const VertexSet& s);

// Generators.

/// Complete k-partite graph T(n, k). Parts are contiguous id blocks; the
/// n mod k larger parts come first.
Graph turan_graph(int n, int k);
/// Part sizes of T(n, k) in block order.
std::vector<int> turan_part_sizes(int n, int k);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
/// Cycle 0..n-1 plus a center n adjacent to every rim vertex.
Graph wheel_graph(int rim);
Graph complete_multipartite(std::span<const int> part_sizes);

/// Erdős–Rényi G(n, p). Pairs are visited in lexicographic order with one
/// draw each, so the output is a pure function of (n, p, seed).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random chordal graph built by simplicial vertex addition. Vertex v picks an
/// earlier vertex u uniformly and joins a random subset of the clique formed
/// by u and u's earlier neighbors, keeping each member with probability
/// `density`. Vertex v is therefore simplicial when added.
Graph random_chordal(int n, double density, std::uint64_t seed);

/// Graph with n vertices whose edges are the set bits of `mask` over the
/// lexicographic list of pairs (0,1), (0,2), ..., (n-2, n-1).
Graph graph_from_mask(int n, std::uint64_t mask);
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Small-graph isomorphism.

inline constexpr int kIsomorphismLimit = 10;

/// Exact isomorphism test by degree-pruned backtracking. Throws
/// SizeLimitExceeded when either graph has more than kIsomorphismLimit
/// vertices.
bool isomorphic_small(const Graph& a, const Graph& b);

// 3-uniform hypergraphs.

struct Hypergraph3 {
    int n = 0;
    /// Sorted triples, strictly increasing within each triple, no duplicates.
    std::vector<std::array<Vertex, 3>> hyperedges;
};

/// The three-part hypergraph construction: parts of sizes floor(n/3),
/// floor((n+1)/3), floor((n+2)/3); transversal triples plus every triple with
/// two vertices in part i and one in part (i+1) mod 3. Requires n >= 3.
Hypergraph3 turan_hypergraph(int n);

} // namespace ktcover
