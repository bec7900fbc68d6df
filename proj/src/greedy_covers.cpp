#include "ktcover/greedy_covers.hpp"

#include <stdexcept>

namespace ktcover {

std::int64_t GreedyTrace::ledger() const
{
    std::int64_t total = p();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        total += static_cast<std::int64_t>(i) * static_cast<std::int64_t>(layers[i].size());
    }
    return total;
}

GreedyEdgeCover greedy_lovasz_edge_cover(const Graph& g)
{
    GreedyEdgeCover out;
    VertexSet remaining = g.full_set();
    while (remaining.any()) {
        const InducedSubgraph rest = induced_subgraph(g, remaining);
        const Clique local = maximum_clique(rest.graph);
        std::vector<Vertex> layer;
        for (Vertex v : local) {
            layer.push_back(rest.to_parent[v]);
            remaining.reset(rest.to_parent[v]);
        }
        out.trace.layers.emplace_back(std::move(layer));
    }
    auto& layers = out.trace.layers;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        for (Vertex v : layers[i]) {
            for (std::size_t j = 0; j < i; ++j) {
                std::vector<Vertex> side{v};
                for (Vertex a : layers[j]) {
                    if (g.adjacent(v, a)) {
                        side.push_back(a);
                    }
                }
                out.trace.sides.push_back({v, static_cast<int>(j), Clique(std::move(side))});
            }
        }
    }
    // Cliques with fewer than two vertices cover no edge.
    for (const auto& a : layers) {
        if (a.size() >= 2) {
            out.cover.add(a);
        }
    }
    for (const auto& s : out.trace.sides) {
        if (s.clique.size() >= 2 && out.cover.multiplicity(s.clique) == 0) {
            out.cover.add(s.clique);
        }
    }
    return out;
}

namespace {

// A K_s cover of h (local ids), s >= 1.
std::vector<Clique> cover_link(const Graph& h, int s, Subsolver subsolver, const Limits& limits)
{
    std::vector<Clique> cliques;
    if (subsolver == Subsolver::exact) {
        const auto result = exact_cover_number(h, s, WeightMap::unit(s), limits);
        for (const auto& [k, m] : result.cover.entries()) {
            for (std::int64_t i = 0; i < m; ++i) {
                cliques.push_back(k);
            }
        }
    } else if (s == 1) {
        // Vertex clique cover: peel maximum cliques.
        VertexSet remaining = h.full_set();
        while (remaining.any()) {
            const InducedSubgraph rest = induced_subgraph(h, remaining);
            std::vector<Vertex> c;
            for (Vertex v : maximum_clique(rest.graph)) {
                c.push_back(rest.to_parent[v]);
                remaining.reset(rest.to_parent[v]);
            }
            cliques.emplace_back(std::move(c));
        }
    } else if (s == 2) {
        const auto greedy = greedy_lovasz_edge_cover(h);
        for (const auto& [k, m] : greedy.cover.entries()) {
            cliques.push_back(k);
        }
    } else {
        const auto inner = recursive_kt_cover(h, s, Subsolver::greedy, limits);
        for (const auto& [k, m] : inner.entries()) {
            cliques.push_back(k);
        }
    }
    const auto direct = enumerate_t_cliques(h, s);
    if (cliques.size() > direct.size()) {
        return direct;
    }
    return cliques;
}

} // namespace

CoverSolution recursive_kt_cover(const Graph& g, int t, Subsolver subsolver, const Limits& limits)
{
    if (t < 2) {
        throw std::invalid_argument("recursive_kt_cover requires t >= 2");
    }
    CoverSolution cover;
    // Iterative form of the recursion: `alive` is the vertex set of the
    // current graph G - {v_1, ..., v_i}.
    VertexSet alive = g.full_set();
    while (static_cast<int>(alive.count()) >= t) {
        const InducedSubgraph current = induced_subgraph(g, alive);
        const Vertex local_v = min_degree_vertex(current.graph);
        const Vertex v = current.to_parent[local_v];
        const InducedSubgraph link = induced_subgraph(g, g.neighbors(v) & alive);
        if (static_cast<int>(link.graph.order()) >= t - 1) {
            for (const auto& k : cover_link(link.graph, t - 1, subsolver, limits)) {
                std::vector<Vertex> lifted{v};
                for (Vertex x : k) {
                    lifted.push_back(link.to_parent[x]);
                }
                cover.add(Clique(std::move(lifted)));
            }
        }
        alive.reset(v);
    }
    return cover;
}

CoverSolution recursive_triangle_cover(const Graph& g, Subsolver subsolver, const Limits& limits)
{
    return recursive_kt_cover(g, 3, subsolver, limits);
}

} // namespace ktcover
