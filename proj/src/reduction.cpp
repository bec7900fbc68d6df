#include "ktcover/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "ktcover/errors.hpp"

namespace ktcover {

Gadget build_gadget(const Graph& g, int t)
{
    if (t < 2) {
        throw std::invalid_argument("build_gadget requires t >= 2");
    }
    Gadget gadget;
    gadget.original = g;
    gadget.t = t;
    gadget.e = static_cast<std::int64_t>(count_kt(g, t));
    gadget.s = 1 + gadget.e;
    const int n = g.order();
    gadget.augmented = Graph(n + static_cast<int>(gadget.s));
    for (const auto& [u, v] : g.edges()) {
        gadget.augmented.add_edge(u, v);
    }
    for (std::int64_t i = 0; i < gadget.s; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            gadget.augmented.add_edge(v, gadget.new_vertex(i));
        }
    }
    return gadget;
}

CoverSolution lift_cover(const Gadget& gadget, const CoverSolution& cover)
{
    const int t = gadget.t;
    if (auto report = check_cover(gadget.original, t - 1, WeightMap::unit(t - 1), cover); !report) {
        throw std::invalid_argument("lift_cover: input is not a K_" + std::to_string(t - 1) +
                                    " cover: " + report.problems.front());
    }
    CoverSolution lifted;
    for (std::int64_t i = 0; i < gadget.s; ++i) {
        for (const auto& [k, m] : cover.entries()) {
            lifted.add(k.with(gadget.new_vertex(i)), m);
        }
    }
    for (const auto& k : enumerate_t_cliques(gadget.original, t)) {
        const bool covered = std::any_of(cover.entries().begin(), cover.entries().end(),
                                         [&](const auto& entry) { return k.is_subset_of(entry.first); });
        if (!covered) {
            lifted.add(k);
        }
    }
    return lifted;
}

Projection project_cover(const Gadget& gadget, const CoverSolution& cover)
{
    const int t = gadget.t;
    if (auto report = check_cover(gadget.augmented, t, WeightMap::unit(t), cover); !report) {
        throw std::invalid_argument("project_cover: input is not a K_" + std::to_string(t) +
                                    " cover of the gadget: " + report.problems.front());
    }
    Projection out;
    out.class_sizes.assign(static_cast<std::size_t>(gadget.s), 0);
    for (const auto& [k, m] : cover.entries()) {
        std::int64_t hits = 0;
        for (Vertex v : k) {
            if (gadget.is_new_vertex(v)) {
                out.class_sizes[v - gadget.original.order()] += m;
                ++hits;
            }
        }
        // The u_i are pairwise nonadjacent, so no clique holds two of them.
        if (hits > 1) {
            throw std::logic_error("clique " + to_string(k) + " contains two gadget vertices");
        }
    }
    const auto smallest = std::min_element(out.class_sizes.begin(), out.class_sizes.end());
    out.stripped = smallest - out.class_sizes.begin();
    const Vertex u = gadget.new_vertex(out.stripped);
    for (const auto& [k, m] : cover.entries()) {
        if (!k.contains(u)) {
            continue;
        }
        Clique rest = k.without(u);
        if (static_cast<int>(rest.size()) >= t - 1 && !rest.empty()) {
            out.cover.add(rest, m);
        }
    }
    return out;
}

namespace {

Limits reduction_limits(const Graph& g, int t, bool unsafe)
{
    if (unsafe) {
        return Limits::unsafe();
    }
    if (g.order() > 5 || t > 3) {
        throw SizeLimitExceeded("reduction check supports n <= 5 and t <= 3");
    }
    return Limits{};
}

} // namespace

std::vector<ReductionCheck> check_reduction_range(const Graph& g, int t, std::int64_t k_min,
                                                  std::int64_t k_max, bool unsafe_limits)
{
    const Limits limits = reduction_limits(g, t, unsafe_limits);
    const Gadget gadget = build_gadget(g, t);
    const std::int64_t lhs = theta(g, t - 1, limits);
    const std::int64_t rhs = theta(gadget.augmented, t, limits);
    std::vector<ReductionCheck> out;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        ReductionCheck c;
        c.theta_original = lhs;
        c.theta_augmented = rhs;
        c.k = k;
        c.k_prime = gadget.budget(k);
        c.original_yes = lhs <= k;
        c.augmented_yes = rhs <= c.k_prime;
        out.push_back(c);
    }
    return out;
}

ReductionCheck check_reduction(const Graph& g, int t, std::int64_t k, bool unsafe_limits)
{
    return check_reduction_range(g, t, k, k, unsafe_limits).front();
}

} // namespace ktcover
