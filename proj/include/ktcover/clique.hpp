#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ktcover/graph.hpp"

namespace ktcover {

/// A vertex set in canonical form: strictly increasing ids. Construction
/// sorts and rejects duplicates; adjacency is checked against a host graph
/// separately (see `is_clique_of`).
class Clique {
public:
    Clique() = default;
    Clique(std::initializer_list<Vertex> vs) : Clique(std::vector<Vertex>(vs)) {}
    explicit Clique(std::vector<Vertex> vs);
    static Clique from_set(const VertexSet& s);

    const std::vector<Vertex>& vertices() const noexcept { return vs_; }
    std::size_t size() const noexcept { return vs_.size(); }
    bool empty() const noexcept { return vs_.empty(); }
    bool contains(Vertex v) const;
    bool is_subset_of(const Clique& other) const;

    Clique with(Vertex v) const;
    Clique without(Vertex v) const;
    VertexSet to_set(int n) const;

    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }

    friend auto operator<=>(const Clique&, const Clique&) = default;
    friend bool operator==(const Clique&, const Clique&) = default;

private:
    std::vector<Vertex> vs_;
};

std::string to_string(const Clique& c);
bool is_clique_of(const Graph& g, const Clique& c);

/// Demands w(k) on the t-cliques of a host graph. Unlisted t-cliques take
/// `default_weight`, which callers state explicitly: 1 for plain K_t cover
/// problems, 0 for residual subproblems.
class WeightMap {
public:
    WeightMap(int t, std::int64_t default_weight);

    static WeightMap unit(int t) { return WeightMap(t, 1); }
    static WeightMap zero(int t) { return WeightMap(t, 0); }

    int t() const noexcept { return t_; }
    std::int64_t default_weight() const noexcept { return default_; }
    std::int64_t operator()(const Clique& k) const;
    /// Sets w(k); k must have exactly t vertices and w >= 0.
    void set(const Clique& k, std::int64_t w);
    const std::map<Clique, std::int64_t>& explicit_weights() const noexcept { return weights_; }

    /// Throws std::invalid_argument if a listed key is not a t-clique of g.
    void validate(const Graph& g) const;
    std::int64_t max_weight(const Graph& g) const;

private:
    int t_;
    std::int64_t default_;
    std::map<Clique, std::int64_t> weights_;
};

/// A (w, K_t)-cover: cliques with positive multiplicities. Zero entries are
/// never stored.
class CoverSolution {
public:
    void add(const Clique& k, std::int64_t mult = 1);
    std::int64_t multiplicity(const Clique& k) const;
    std::int64_t cost() const noexcept { return cost_; }
    std::size_t distinct() const noexcept { return mult_.size(); }
    const std::map<Clique, std::int64_t>& entries() const noexcept { return mult_; }

    friend bool operator==(const CoverSolution&, const CoverSolution&) = default;

private:
    std::map<Clique, std::int64_t> mult_;
    std::int64_t cost_ = 0;
};

/// A (w, K_t)-packing. The constraint for K = k forces y(k) <= 1, so the
/// packing is stored as the set of t-cliques with y(k) = 1.
class PackingSolution {
public:
    void select(const Clique& k) { selected_.insert(k); }
    bool selected(const Clique& k) const { return selected_.contains(k); }
    const std::set<Clique>& cliques() const noexcept { return selected_; }
    std::size_t size() const noexcept { return selected_.size(); }
    std::int64_t value(const WeightMap& w) const;

    friend bool operator==(const PackingSolution&, const PackingSolution&) = default;

private:
    std::set<Clique> selected_;
};

/// Size limits for the exact oracles. Defaults keep single calls in the
/// millisecond-to-second range; `unsafe()` lifts them.
struct Limits {
    int max_vertices = 20;
    int max_maximal_cliques = 256;
    int max_elements = 512;
    std::int64_t max_weight = 1000;

    static Limits unsafe()
    {
        return {1 << 20, 1 << 20, 1 << 20, std::int64_t{1} << 40};
    }
};

// Enumeration.

/// All t-cliques in lexicographic order. t = 0 yields the single empty clique.
std::vector<Clique> enumerate_t_cliques(const Graph& g, int t);
std::uint64_t count_kt(const Graph& g, int t);
/// t-cliques of g that lie inside `within`.
std::vector<Clique> enumerate_t_cliques_in(const Graph& g, int t, const VertexSet& within);
/// Inclusion-maximal cliques (Bron–Kerbosch with Tomita pivoting), sorted.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g);
/// A maximum clique; the lexicographically smallest one among the largest.
Clique maximum_clique(const Graph& g);

// Exact oracles.

struct CoverResult {
    std::int64_t cost = 0;
    CoverSolution cover;
};

struct PackingResult {
    std::int64_t value = 0;
    PackingSolution packing;
};

/// i_{w,t}(G) by branch and bound over multiplicities of maximal cliques.
/// t >= 1. Throws SizeLimitExceeded beyond `limits`.
CoverResult exact_cover_number(const Graph& g, int t, const WeightMap& w,
                               const Limits& limits = {});
/// p_{w,t}(G) by branch and bound over sets of pairwise compatible t-cliques.
PackingResult exact_packing_number(const Graph& g, int t, const WeightMap& w,
                                   const Limits& limits = {});

/// Unweighted K_t clique cover number.
inline std::int64_t theta(const Graph& g, int t, const Limits& limits = {})
{
    return exact_cover_number(g, t, WeightMap::unit(t), limits).cost;
}

// Feasibility.

struct Feasibility {
    bool ok = true;
    std::vector<std::string> problems;

    explicit operator bool() const noexcept { return ok; }
    void fail(std::string why)
    {
        ok = false;
        problems.push_back(std::move(why));
    }
};

/// Checks sum over K containing k of f(K) >= w(k) for every t-clique k, and
/// that each member of f is a clique of g.
Feasibility check_cover(const Graph& g, int t, const WeightMap& w, const CoverSolution& f);
/// Checks that each selected member is a t-clique of g and that no two
/// selected t-cliques lie in a common clique (their union is not a clique).
Feasibility check_packing(const Graph& g, int t, const PackingSolution& y);

inline bool is_cover_feasible(const Graph& g, int t, const WeightMap& w, const CoverSolution& f)
{
    return check_cover(g, t, w, f).ok;
}
inline bool is_packing_feasible(const Graph& g, int t, const PackingSolution& y)
{
    return check_packing(g, t, y).ok;
}

// Conjecture check.

struct ConjectureViolation {
    Graph graph;
    std::int64_t theta = 0;
    std::int64_t turan_theta = 0;
    /// True when theta exceeds the Turán value; false when theta ties it on a
    /// graph that is not isomorphic to T(n, t).
    bool exceeds = false;
};

struct ConjectureOptions {
    /// Labeled graphs are enumerated exhaustively up to this order; above it
    /// `sample` graphs are drawn from G(n, 1/2).
    int exhaustive_limit = 6;
    int sample = 2000;
    std::uint64_t seed = 1;
};

/// Graphs on n vertices violating theta_{K_t}(G) <= theta_{K_t}(T(n, t)) or
/// attaining equality without being isomorphic to T(n, t). n <= 7.
std::vector<ConjectureViolation> verify_conjecture(int n, int t, const ConjectureOptions& opts = {});

} // namespace ktcover
