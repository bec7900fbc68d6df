#include "ktcover/elimination.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "ktcover/errors.hpp"

namespace ktcover {

bool is_cluster_within(const Graph& g, const VertexSet& vertices)
{
    // An induced P3 has a middle vertex with two nonadjacent neighbors.
    for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v)) {
        const VertexSet nv = g.neighbors(static_cast<Vertex>(v)) & vertices;
        for (auto u = nv.find_first(); u != VertexSet::npos; u = nv.find_next(u)) {
            VertexSet others = nv;
            others.reset(u);
            if (!others.is_subset_of(g.neighbors(static_cast<Vertex>(u)))) {
                return false;
            }
        }
    }
    return true;
}

bool is_cluster(const Graph& g) { return is_cluster_within(g, g.full_set()); }

std::vector<VertexSet> later_neighborhoods(const Graph& g, const std::vector<Vertex>& order)
{
    if (static_cast<int>(order.size()) != g.order()) {
        throw std::invalid_argument("ordering has " + std::to_string(order.size()) +
                                    " entries for " + std::to_string(g.order()) + " vertices");
    }
    VertexSet later = g.full_set();
    std::vector<VertexSet> out;
    out.reserve(order.size());
    for (Vertex v : order) {
        if (v < 0 || v >= g.order() || !later.test(v)) {
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        }
        later.reset(v);
        out.push_back(g.neighbors(v) & later);
    }
    return out;
}

bool verify_p3_ordering(const Graph& g, const std::vector<Vertex>& order)
{
    for (const auto& nb : later_neighborhoods(g, order)) {
        if (!is_cluster_within(g, nb)) {
            return false;
        }
    }
    return true;
}

bool verify_simplicial_ordering(const Graph& g, const std::vector<Vertex>& order)
{
    for (const auto& nb : later_neighborhoods(g, order)) {
        if (!g.is_clique(to_vector(nb))) {
            return false;
        }
    }
    return true;
}

bool verify_ordering(const Graph& g, const EliminationOrdering& ordering)
{
    return ordering.family == OrderingFamily::p3 ? verify_p3_ordering(g, ordering.order)
                                                 : verify_simplicial_ordering(g, ordering.order);
}

namespace {

struct P3Search {
    const Graph& g;
    P3SearchStats& stats;
    std::vector<Vertex> order;
    std::set<VertexSet> failed;

    bool run(const VertexSet& remaining)
    {
        if (remaining.none()) {
            return true;
        }
        if (failed.contains(remaining)) {
            return false;
        }
        for (auto v = remaining.find_first(); v != VertexSet::npos; v = remaining.find_next(v)) {
            ++stats.steps;
            if (!is_cluster_within(g, g.neighbors(static_cast<Vertex>(v)) & remaining)) {
                continue;
            }
            VertexSet rest = remaining;
            rest.reset(v);
            order.push_back(static_cast<Vertex>(v));
            if (run(rest)) {
                return true;
            }
            order.pop_back();
            ++stats.backtracks;
        }
        failed.insert(remaining);
        return false;
    }
};

} // namespace

std::optional<EliminationOrdering> find_p3_elimination(const Graph& g, P3SearchStats* stats)
{
    P3SearchStats local;
    P3Search search{g, stats ? *stats : local, {}, {}};
    if (!search.run(g.full_set())) {
        return std::nullopt;
    }
    return EliminationOrdering{std::move(search.order), OrderingFamily::p3};
}

ChordalityResult is_chordal(const Graph& g)
{
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) {
                pick = v;
            }
        }
        numbered[pick] = true;
        visit.push_back(pick);
        const VertexSet& nb = g.neighbors(pick);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
            if (!numbered[u]) {
                ++weight[u];
            }
        }
    }
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    ChordalityResult result;
    if (verify_simplicial_ordering(g, peo)) {
        result.chordal = true;
        result.ordering = EliminationOrdering{std::move(peo), OrderingFamily::simplicial};
    }
    return result;
}

namespace {

// Extends the induced path `path` (whose first three vertices x, y, z are
// neighbors of the center) until it closes into an induced cycle through x.
bool close_induced_cycle(const Graph& g, const VertexSet& avail, std::vector<Vertex>& path,
                         VertexSet& on_path)
{
    const Vertex first = path.front();
    const Vertex last = path.back();
    const VertexSet next = g.neighbors(last) & avail & ~on_path;
    for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w)) {
        // w may touch only `last` and, when closing, `first`.
        VertexSet touching = g.neighbors(static_cast<Vertex>(w)) & on_path;
        touching.reset(last);
        const bool closes = touching.test(first);
        touching.reset(first);
        if (touching.any()) {
            continue;
        }
        if (closes) {
            return true;
        }
        path.push_back(static_cast<Vertex>(w));
        on_path.set(w);
        const bool found = close_induced_cycle(g, avail, path, on_path);
        on_path.reset(w);
        path.pop_back();
        if (found) {
            return true;
        }
    }
    return false;
}

} // namespace

bool contains_induced_3wheel(const Graph& g)
{
    if (g.order() > kWheelSearchLimit) {
        throw SizeLimitExceeded("contains_induced_3wheel supports at most " +
                                std::to_string(kWheelSearchLimit) + " vertices");
    }
    for (Vertex c = 0; c < g.order(); ++c) {
        const VertexSet& nc = g.neighbors(c);
        VertexSet avail = g.full_set();
        avail.reset(c);
        for (auto y = nc.find_first(); y != VertexSet::npos; y = nc.find_next(y)) {
            const VertexSet ny = g.neighbors(static_cast<Vertex>(y)) & nc;
            for (auto x = ny.find_first(); x != VertexSet::npos; x = ny.find_next(x)) {
                for (auto z = ny.find_next(x); z != VertexSet::npos; z = ny.find_next(z)) {
                    if (g.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(z))) {
                        return true; // rim x-y-z-x, center adjacent to all three
                    }
                    std::vector<Vertex> path{static_cast<Vertex>(x), static_cast<Vertex>(y),
                                             static_cast<Vertex>(z)};
                    VertexSet on_path = g.empty_set();
                    on_path.set(x);
                    on_path.set(y);
                    on_path.set(z);
                    // The rest of the rim must avoid y's neighborhood.
                    const VertexSet rim_avail = avail & ~g.neighbors(static_cast<Vertex>(y));
                    if (close_induced_cycle(g, rim_avail, path, on_path)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace ktcover
