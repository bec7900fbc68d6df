#pragma once

#include <cstdint>
#include <vector>

#include "ktcover/clique.hpp"

namespace ktcover {

/// G' = G plus s = 1 + e pairwise nonadjacent vertices u_1..u_s, each joined
/// to every vertex of G, where e is the number of t-cliques of G. A K_{t-1}
/// cover of G of size k corresponds to a K_t cover of G' of size s*k + e.
struct Gadget {
    Graph original;
    int t = 0;
    Graph augmented;
    std::int64_t e = 0;
    std::int64_t s = 0;

    /// Id of u_i (0-based i); new vertices follow the original ones.
    Vertex new_vertex(std::int64_t i) const { return original.order() + static_cast<Vertex>(i); }
    bool is_new_vertex(Vertex v) const { return v >= original.order(); }
    std::int64_t budget(std::int64_t k) const { return s * k + e; }
};

/// Throws std::invalid_argument for t < 2.
Gadget build_gadget(const Graph& g, int t);

/// Lifts a K_{t-1} cover A of G to the K_t cover of G' made of every
/// u_i ∪ S (S in A) plus each t-clique of G that no member of A contains.
/// Throws std::invalid_argument if A is not a feasible K_{t-1} cover of G.
CoverSolution lift_cover(const Gadget& gadget, const CoverSolution& cover);

struct Projection {
    CoverSolution cover;
    /// Index i of the stripped vertex u_i (0-based).
    std::int64_t stripped = 0;
    /// |D_i|: members of the input cover containing u_i, with multiplicity.
    std::vector<std::int64_t> class_sizes;
};

/// Projects a K_t cover D of G' to a K_{t-1} cover of G: picks the u_i lying
/// in the fewest members of D (ties: smallest i), removes u_i from those
/// members and keeps the results that still have at least t-1 vertices.
/// Throws std::invalid_argument if D is not a feasible K_t cover of G'.
Projection project_cover(const Gadget& gadget, const CoverSolution& cover);

struct ReductionCheck {
    std::int64_t theta_original = 0;  ///< theta_{K_{t-1}}(G)
    std::int64_t theta_augmented = 0; ///< theta_{K_t}(G')
    std::int64_t k = 0;
    std::int64_t k_prime = 0;
    bool original_yes = false;
    bool augmented_yes = false;
    bool holds() const noexcept { return original_yes == augmented_yes; }
};

/// Both sides of theta_{K_{t-1}}(G) <= k  <=>  theta_{K_t}(G') <= s*k + e,
/// computed with the exact cover oracle. Default limits: n <= 5, t <= 3.
ReductionCheck check_reduction(const Graph& g, int t, std::int64_t k, bool unsafe_limits = false);
inline bool verify_reduction(const Graph& g, int t, std::int64_t k)
{
    return check_reduction(g, t, k).holds();
}

/// check_reduction for every k in [k_min, k_max] from one pair of oracle calls.
std::vector<ReductionCheck> check_reduction_range(const Graph& g, int t, std::int64_t k_min,
                                                  std::int64_t k_max, bool unsafe_limits = false);

} // namespace ktcover
