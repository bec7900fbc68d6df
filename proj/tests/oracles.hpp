#pragma once

// Brute-force reference implementations used only by the tests. They work on
// bitmasks and permutations and share no code with the library's solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ktcover/clique.hpp"
#include "ktcover/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const ktcover::Graph& g)
{
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) {
            if (u != v && g.adjacent(u, v)) {
                adj[u] |= Mask{1} << v;
            }
        }
    }
    return adj;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline bool is_clique(const std::vector<Mask>& adj, Mask s)
{
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        if ((s >> v & 1) && (s & ~(Mask{1} << v) & ~adj[v])) {
            return false;
        }
    }
    return true;
}

/// Every nonempty clique, as a mask, in increasing mask order.
inline std::vector<Mask> all_cliques(const ktcover::Graph& g)
{
    const auto adj = adjacency(g);
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        if (is_clique(adj, s)) {
            out.push_back(s);
        }
    }
    return out;
}

inline std::vector<Mask> t_cliques(const ktcover::Graph& g, int t)
{
    std::vector<Mask> out;
    for (Mask s : all_cliques(g)) {
        if (popcount(s) == t) {
            out.push_back(s);
        }
    }
    return out;
}

inline std::vector<Mask> maximal_cliques(const ktcover::Graph& g)
{
    const auto adj = adjacency(g);
    std::vector<Mask> out;
    for (Mask s : all_cliques(g)) {
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v) {
            if (!(s >> v & 1) && (adj[v] & s) == s) {
                maximal = false;
            }
        }
        if (maximal) {
            out.push_back(s);
        }
    }
    if (g.order() > 0 && out.empty()) {
        out.push_back(1);
    }
    return out;
}

inline Mask mask_of(const ktcover::Clique& c)
{
    Mask m = 0;
    for (int v : c) {
        m |= Mask{1} << v;
    }
    return m;
}

inline ktcover::Clique clique_of(Mask m)
{
    std::vector<int> vs;
    for (int v = 0; m >> v; ++v) {
        if (m >> v & 1) {
            vs.push_back(v);
        }
    }
    return ktcover::Clique(vs);
}

/// Minimum number of cliques (with repetition) such that each t-clique k is
/// inside at least w(k) of them. Memoized over residual demand vectors.
inline std::int64_t min_cover(const ktcover::Graph& g, int t, const std::function<std::int64_t(Mask)>& w)
{
    std::vector<Mask> elements;
    std::vector<int> demand;
    for (Mask k : t_cliques(g, t)) {
        if (w(k) > 0) {
            elements.push_back(k);
            demand.push_back(static_cast<int>(w(k)));
        }
    }
    // Enlarging a clique never hurts, so maximal cliques suffice.
    const std::vector<Mask> sets = maximal_cliques(g);
    std::map<std::vector<int>, std::int64_t> memo;
    std::function<std::int64_t(const std::vector<int>&)> solve = [&](const std::vector<int>& res) -> std::int64_t {
        const auto first = std::find_if(res.begin(), res.end(), [](int r) { return r > 0; });
        if (first == res.end()) {
            return 0;
        }
        if (auto it = memo.find(res); it != memo.end()) {
            return it->second;
        }
        const std::size_t e = static_cast<std::size_t>(first - res.begin());
        std::int64_t best = INT64_MAX;
        for (Mask c : sets) {
            if ((elements[e] & c) != elements[e]) {
                continue;
            }
            auto next = res;
            for (std::size_t i = 0; i < elements.size(); ++i) {
                if ((elements[i] & c) == elements[i] && next[i] > 0) {
                    --next[i];
                }
            }
            best = std::min(best, 1 + solve(next));
        }
        memo[res] = best;
        return best;
    };
    return solve(demand);
}

/// Maximum total weight of t-cliques, no two inside a common clique.
inline std::int64_t max_packing(const ktcover::Graph& g, int t, const std::function<std::int64_t(Mask)>& w)
{
    const auto adj = adjacency(g);
    const auto ks = t_cliques(g, t);
    std::int64_t best = 0;
    std::vector<Mask> chosen;
    std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t value) {
        best = std::max(best, value);
        for (std::size_t j = i; j < ks.size(); ++j) {
            const bool ok = std::none_of(chosen.begin(), chosen.end(),
                                         [&](Mask c) { return is_clique(adj, c | ks[j]); });
            if (ok && w(ks[j]) > 0) {
                chosen.push_back(ks[j]);
                go(j + 1, value + w(ks[j]));
                chosen.pop_back();
            }
        }
    };
    go(0, 0);
    return best;
}

inline std::vector<int> identity(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Later neighborhood of order[i] induces no P3 (every component a clique).
inline bool later_is_cluster(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t i)
{
    Mask later = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
        later |= Mask{1} << order[j];
    }
    const Mask nb = adj[order[i]] & later;
    for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
        if (!(nb >> a & 1)) {
            continue;
        }
        const Mask na = adj[a] & nb;
        for (int b = 0; b < static_cast<int>(adj.size()); ++b) {
            if ((na >> b & 1) && ((nb & ~adj[b] & ~(Mask{1} << b)) & na)) {
                return false;
            }
        }
    }
    return true;
}

inline bool later_is_clique(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t i)
{
    Mask later = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
        later |= Mask{1} << order[j];
    }
    return is_clique(adj, adj[order[i]] & later);
}

inline bool some_ordering(const ktcover::Graph& g,
                          bool (*ok)(const std::vector<Mask>&, const std::vector<int>&, std::size_t))
{
    const auto adj = adjacency(g);
    auto order = identity(g.order());
    do {
        bool all = true;
        for (std::size_t i = 0; i < order.size() && all; ++i) {
            all = ok(adj, order, i);
        }
        if (all) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

inline bool has_p3_ordering(const ktcover::Graph& g) { return some_ordering(g, later_is_cluster); }
inline bool has_simplicial_ordering(const ktcover::Graph& g) { return some_ordering(g, later_is_clique); }

inline bool isomorphic(const ktcover::Graph& a, const ktcover::Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    auto p = identity(a.order());
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u) {
            for (int v = u + 1; v < a.order() && ok; ++v) {
                ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Triangles with one vertex in each of three parts plus the pairs-in-a-part
/// rule, counted from part sizes alone.
inline std::int64_t hyper_count(std::int64_t a, std::int64_t b, std::int64_t c)
{
    auto pairs = [](std::int64_t x) { return x * (x - 1) / 2; };
    return a * b * c + pairs(a) * b + pairs(b) * c + pairs(c) * a;
}

} // namespace oracle
