#pragma once

#include <cstdint>
#include <vector>

#include "ktcover/clique.hpp"

namespace ktcover {

/// Record of the max-clique peeling behind the greedy edge cover.
struct GreedyTrace {
    /// A_1, ..., A_p: A_i is a maximum clique of g minus A_1..A_{i-1}.
    std::vector<Clique> layers;
    /// Every S_{v,j} = {v} ∪ (N(v) ∩ A_j) for v in A_i, j < i, including
    /// the ones too small to be emitted.
    struct Side {
        Vertex v;
        int layer; ///< j, 0-based
        Clique clique;
    };
    std::vector<Side> sides;

    int p() const noexcept { return static_cast<int>(layers.size()); }
    /// p + sum_i (i-1) a_i, the count of all A_i and S_{v,j}.
    std::int64_t ledger() const;
};

struct GreedyEdgeCover {
    CoverSolution cover;
    GreedyTrace trace;
};

/// Peels maximum cliques A_1..A_p off g and emits every A_i and S_{v,j}
/// with at least two vertices. Always a feasible edge clique cover, with at
/// most `trace.ledger()` members.
GreedyEdgeCover greedy_lovasz_edge_cover(const Graph& g);

enum class Subsolver { exact, greedy };

/// Triangle cover built by min-degree vertex removal: cover G - v
/// recursively, cover the edges of H = G[N(v)], and add v to each clique of
/// that edge cover. With Subsolver::exact the size is at most k3(T(n,3)).
CoverSolution recursive_triangle_cover(const Graph& g, Subsolver subsolver = Subsolver::exact,
                                       const Limits& limits = {});

/// The same recursion for K_t (t >= 2) with a K_{t-1} cover of H at each
/// step. Heuristic: no size guarantee is claimed for t >= 4. When the H
/// cover is larger than the number of (t-1)-cliques of H, those cliques are
/// used directly instead, so the result never exceeds count_kt(g, t).
CoverSolution recursive_kt_cover(const Graph& g, int t, Subsolver subsolver = Subsolver::exact,
                                 const Limits& limits = {});

} // namespace ktcover
