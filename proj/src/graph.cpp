#include "ktcover/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ktcover/errors.hpp"
#include "rng.hpp"

namespace ktcover {

Graph::Graph(int n)
{
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order()) {
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(order()) + ")");
    }
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    }
    if (adj_[u].test(v)) {
        return;
    }
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const { return to_vector(adj_[v]); }

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u) {
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
            out.emplace_back(u, static_cast<Vertex>(v));
        }
    }
    return out;
}

bool Graph::is_clique(std::span<const Vertex> vertices) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= order()) {
            return false;
        }
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[j] < 0 || vertices[j] >= order() || !adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

VertexSet Graph::full_set() const
{
    VertexSet s(adj_.size());
    s.set();
    return s;
}

std::vector<Vertex> to_vector(const VertexSet& s)
{
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    VertexSet mask = g.empty_set();
    for (Vertex v : keep) {
        if (v < 0 || v >= g.order()) {
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        }
        mask.set(v);
    }
    return induced_subgraph(g, mask);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    InducedSubgraph sub;
    sub.to_parent = to_vector(keep);
    sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        sub.from_parent[sub.to_parent[i]] = static_cast<Vertex>(i);
    }
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        const VertexSet row = g.neighbors(sub.to_parent[i]) & keep;
        for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) {
            const Vertex j = sub.from_parent[v];
            if (static_cast<std::size_t>(j) > i) {
                sub.graph.add_edge(static_cast<Vertex>(i), j);
            }
        }
    }
    return sub;
}

InducedSubgraph remove_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order()) {
        throw std::invalid_argument("remove_vertex: vertex out of range");
    }
    VertexSet keep = g.full_set();
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Vertex min_degree_vertex(const Graph& g)
{
    if (g.order() == 0) {
        throw std::invalid_argument("min_degree_vertex: empty graph");
    }
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) < g.degree(best)) {
            best = v;
        }
    }
    return best;
}

int min_degree(const Graph& g) { return g.order() == 0 ? 0 : g.degree(min_degree_vertex(g)); }

std::vector<int> turan_part_sizes(int n, int k)
{
    if (n < 1 || k < 1) {
        throw std::invalid_argument("turan_graph requires n >= 1 and k >= 1");
    }
    std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) {
        ++sizes[i];
    }
    return sizes;
}

Graph complete_multipartite(std::span<const int> part_sizes)
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 0) {
            throw std::invalid_argument("negative part size");
        }
        part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph turan_graph(int n, int k)
{
    const auto sizes = turan_part_sizes(n, k);
    return complete_multipartite(sizes);
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle_graph requires n >= 3");
    }
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph wheel_graph(int rim)
{
    const Graph c = cycle_graph(rim);
    Graph g(rim + 1);
    for (const auto& [u, v] : c.edges()) {
        g.add_edge(u, v);
    }
    for (Vertex v = 0; v < rim; ++v) {
        g.add_edge(v, rim);
    }
    return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("random_gnp: probability must lie in [0, 1]");
    }
    detail::Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph random_chordal(int n, double density, std::uint64_t seed)
{
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("random_chordal: density must lie in [0, 1]");
    }
    detail::Rng rng(seed);
    Graph g(n);
    // creation[u] = {u} plus u's neighbors at the time u was added; a clique.
    std::vector<std::vector<Vertex>> creation(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        creation[v].push_back(v);
        if (v == 0) {
            continue;
        }
        const auto anchor = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
        for (Vertex u : creation[anchor]) {
            if (rng.bernoulli(density)) {
                g.add_edge(u, v);
                creation[v].push_back(u);
            }
        }
    }
    return g;
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
    if (pair_count(n) > 64) {
        throw std::invalid_argument("graph_from_mask supports at most 64 vertex pairs");
    }
    Graph g(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<Vertex> order;   // vertices of a in assignment order
    std::vector<Vertex> image;   // image[a-vertex] in b, or -1
    std::vector<bool> used;      // b-vertex taken

    bool extend(std::size_t depth)
    {
        if (depth == order.size()) {
            return true;
        }
        const Vertex x = order[depth];
        for (Vertex y = 0; y < b.order(); ++y) {
            if (used[y] || a.degree(x) != b.degree(y)) {
                continue;
            }
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                const Vertex px = order[d];
                consistent = a.adjacent(x, px) == b.adjacent(y, image[px]);
            }
            if (!consistent) {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if (extend(depth + 1)) {
                return true;
            }
            used[y] = false;
            image[x] = -1;
        }
        return false;
    }
};

std::vector<int> sorted_degrees(const Graph& g)
{
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        d[v] = g.degree(v);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

bool isomorphic_small(const Graph& a, const Graph& b)
{
    if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit) {
        throw SizeLimitExceeded("isomorphic_small supports at most " +
                                std::to_string(kIsomorphismLimit) + " vertices");
    }
    if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
        sorted_degrees(a) != sorted_degrees(b)) {
        return false;
    }
    IsoSearch search{a, b, {}, std::vector<Vertex>(a.order(), -1), std::vector<bool>(b.order(), false)};
    // Highest degree first tends to constrain the remaining choices soonest.
    search.order.resize(static_cast<std::size_t>(a.order()));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
    return search.extend(0);
}

Hypergraph3 turan_hypergraph(int n)
{
    if (n < 3) {
        throw std::invalid_argument("turan_hypergraph requires n >= 3");
    }
    const int sizes[3] = {n / 3, (n + 1) / 3, (n + 2) / 3};
    std::vector<std::vector<Vertex>> parts(3);
    Vertex next = 0;
    for (int p = 0; p < 3; ++p) {
        for (int i = 0; i < sizes[p]; ++i) {
            parts[p].push_back(next++);
        }
    }
    Hypergraph3 h;
    h.n = n;
    auto add = [&](Vertex x, Vertex y, Vertex z) {
        std::array<Vertex, 3> e{x, y, z};
        std::sort(e.begin(), e.end());
        h.hyperedges.push_back(e);
    };
    for (Vertex x : parts[0]) {
        for (Vertex y : parts[1]) {
            for (Vertex z : parts[2]) {
                add(x, y, z);
            }
        }
    }
    for (int p = 0; p < 3; ++p) {
        const auto& inner = parts[p];
        for (std::size_t i = 0; i < inner.size(); ++i) {
            for (std::size_t j = i + 1; j < inner.size(); ++j) {
                for (Vertex z : parts[(p + 1) % 3]) {
                    add(inner[i], inner[j], z);
                }
            }
        }
    }
    std::sort(h.hyperedges.begin(), h.hyperedges.end());
    return h;
}

} // namespace ktcover
