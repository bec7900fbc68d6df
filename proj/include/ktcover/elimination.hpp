#pragma once

#include <optional>
#include <vector>

#include "ktcover/graph.hpp"

namespace ktcover {

/// Which forbidden family an elimination ordering certifies: later
/// neighborhoods free of induced K2-bar (cliques, i.e. simplicial orderings)
/// or free of induced P3 (cluster graphs).
enum class OrderingFamily { simplicial, p3 };

struct EliminationOrdering {
    std::vector<Vertex> order;
    OrderingFamily family = OrderingFamily::p3;
};

/// True iff g has no induced P3, i.e. every component is complete.
bool is_cluster(const Graph& g);
/// is_cluster on the subgraph induced by `vertices`.
bool is_cluster_within(const Graph& g, const VertexSet& vertices);

/// Later neighborhood of order[i]: N(order[i]) ∩ {order[i+1], ...}.
/// Throws std::invalid_argument unless `order` is a permutation of V(g).
std::vector<VertexSet> later_neighborhoods(const Graph& g, const std::vector<Vertex>& order);

/// True iff every later neighborhood induces a cluster graph.
bool verify_p3_ordering(const Graph& g, const std::vector<Vertex>& order);
/// True iff every later neighborhood is a clique.
bool verify_simplicial_ordering(const Graph& g, const std::vector<Vertex>& order);
bool verify_ordering(const Graph& g, const EliminationOrdering& ordering);

struct P3SearchStats {
    std::uint64_t steps = 0;
    /// Times a partial ordering had to be abandoned.
    std::uint64_t backtracks = 0;
};

/// A {P3}-elimination ordering, or nullopt when none exists. Repeatedly
/// eliminates the lowest-id vertex whose remaining neighborhood is a cluster
/// graph; dead ends fall back to full backtracking over the other eligible
/// vertices, with failed remainders memoized.
std::optional<EliminationOrdering> find_p3_elimination(const Graph& g, P3SearchStats* stats = nullptr);

inline bool is_semichordal(const Graph& g) { return find_p3_elimination(g).has_value(); }

struct ChordalityResult {
    bool chordal = false;
    /// A verified simplicial elimination ordering when chordal.
    std::optional<EliminationOrdering> ordering;
};

/// Maximum cardinality search; the reverse visit order is checked as a
/// simplicial elimination ordering.
ChordalityResult is_chordal(const Graph& g);

inline constexpr int kWheelSearchLimit = 12;

/// True iff some vertex c and some induced cycle C of g - c (length >= 3)
/// induce a wheel whose center has degree >= 3 on the rim and is adjacent to
/// three consecutive rim vertices. Rims of length 3 count, so K4 is a 3-wheel.
/// Throws SizeLimitExceeded above kWheelSearchLimit vertices.
bool contains_induced_3wheel(const Graph& g);

} // namespace ktcover
