#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktcover/clique.hpp"
#include "ktcover/elimination.hpp"

namespace ktcover {

/// One elimination step of optpair.
struct OptpairLevel {
    Vertex v;                     ///< eliminated vertex v_1 of this level
    struct Component {
        Clique q;                 ///< Q_i, a clique component of G[N(v)]
        Clique z;                 ///< Z_i, heaviest (t-1)-clique of Q_i
        std::int64_t t_i = 0;     ///< w({v} ∪ Z_i) under the current residual weights
        bool packed = false;      ///< whether y({v} ∪ Z_i) = 1
    };
    std::vector<Component> components;
    struct Residual {
        Clique k;
        std::int64_t before;
        std::int64_t after;
    };
    /// Weight reductions w'(k) = max(0, w(k) - t_i) on the t-cliques of the Q_i.
    std::vector<Residual> residuals;
};

struct OptpairResult {
    CoverSolution cover;
    PackingSolution packing;
    std::int64_t cost = 0;
    std::int64_t value = 0;
    std::vector<OptpairLevel> trace;
};

/// Optimal (w, K_t)-cover and (w, K_t)-packing of equal value on a graph
/// with a {P3}-elimination ordering.
///
/// Each level removes the next vertex v of the ordering. The components of
/// the remaining neighborhood of v are cliques; every component Q with at
/// least t-1 vertices gets f(Q ∪ {v}) = t_Q, where t_Q is the largest residual
/// weight of a t-clique {v} ∪ Z with Z ⊆ Q (ties: lexicographically smallest
/// Z). The t-cliques inside Q then have their residual weight reduced by t_Q.
/// After the remaining graph runs out of edges, levels are unwound in reverse:
/// {v} ∪ Z_Q is packed unless t_Q = 0 or a later level already packed a
/// t-clique inside Q.
///
/// Throws std::invalid_argument for t < 2, for an ordering that does not
/// verify, and for weights on sets that are not t-cliques of g.
OptpairResult optpair(const Graph& g, int t, const WeightMap& w, const EliminationOrdering& ordering);

struct Certificate {
    bool ok = true;
    std::vector<std::string> problems;
    explicit operator bool() const noexcept { return ok; }
};

/// Re-checks feasibility of both solutions, that y(k) = 1 only where
/// w(k) > 0, and that cost equals value. Equal cost and value for a feasible
/// pair proves both optimal by weak duality.
Certificate certify(const OptpairResult& result, const Graph& g, int t, const WeightMap& w);

} // namespace ktcover
