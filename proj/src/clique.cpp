#include "ktcover/clique.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ktcover/errors.hpp"
#include "multicover.hpp"
#include "rng.hpp"

namespace ktcover {

// ---- Clique ---------------------------------------------------------------

Clique::Clique(std::vector<Vertex> vs) : vs_(std::move(vs))
{
    std::sort(vs_.begin(), vs_.end());
    if (std::adjacent_find(vs_.begin(), vs_.end()) != vs_.end()) {
        throw std::invalid_argument("clique has a repeated vertex");
    }
    if (!vs_.empty() && vs_.front() < 0) {
        throw std::invalid_argument("clique has a negative vertex id");
    }
}

Clique Clique::from_set(const VertexSet& s)
{
    Clique c;
    c.vs_ = to_vector(s);
    return c;
}

bool Clique::contains(Vertex v) const { return std::binary_search(vs_.begin(), vs_.end(), v); }

bool Clique::is_subset_of(const Clique& other) const
{
    return std::includes(other.vs_.begin(), other.vs_.end(), vs_.begin(), vs_.end());
}

Clique Clique::with(Vertex v) const
{
    auto vs = vs_;
    vs.push_back(v);
    return Clique(std::move(vs));
}

Clique Clique::without(Vertex v) const
{
    Clique c;
    for (Vertex x : vs_) {
        if (x != v) {
            c.vs_.push_back(x);
        }
    }
    return c;
}

VertexSet Clique::to_set(int n) const
{
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : vs_) {
        s.set(v);
    }
    return s;
}

std::string to_string(const Clique& c)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
        out << (i ? "," : "") << c.vertices()[i];
    }
    out << '}';
    return out.str();
}

bool is_clique_of(const Graph& g, const Clique& c) { return g.is_clique(c.vertices()); }

// ---- WeightMap ------------------------------------------------------------

WeightMap::WeightMap(int t, std::int64_t default_weight) : t_(t), default_(default_weight)
{
    if (t < 0) {
        throw std::invalid_argument("WeightMap: t must be nonnegative");
    }
    if (default_weight < 0) {
        throw std::invalid_argument("WeightMap: default weight must be nonnegative");
    }
}

std::int64_t WeightMap::operator()(const Clique& k) const
{
    auto it = weights_.find(k);
    return it == weights_.end() ? default_ : it->second;
}

void WeightMap::set(const Clique& k, std::int64_t w)
{
    if (static_cast<int>(k.size()) != t_) {
        throw std::invalid_argument("WeightMap: key " + to_string(k) + " is not a " +
                                    std::to_string(t_) + "-set");
    }
    if (w < 0) {
        throw std::invalid_argument("WeightMap: negative weight on " + to_string(k));
    }
    weights_[k] = w;
}

void WeightMap::validate(const Graph& g) const
{
    for (const auto& [k, w] : weights_) {
        if (!is_clique_of(g, k)) {
            throw std::invalid_argument("weight on " + to_string(k) + ", which is not a " +
                                        std::to_string(t_) + "-clique of the graph");
        }
    }
}

std::int64_t WeightMap::max_weight(const Graph& g) const
{
    std::int64_t m = 0;
    for (const auto& [k, w] : weights_) {
        m = std::max(m, w);
    }
    if (default_ > m && count_kt(g, t_) > weights_.size()) {
        m = default_;
    }
    return m;
}

// ---- Solutions ------------------------------------------------------------

void CoverSolution::add(const Clique& k, std::int64_t mult)
{
    if (mult < 0) {
        throw std::invalid_argument("CoverSolution: negative multiplicity");
    }
    if (mult == 0) {
        return;
    }
    mult_[k] += mult;
    cost_ += mult;
}

std::int64_t CoverSolution::multiplicity(const Clique& k) const
{
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
}

std::int64_t PackingSolution::value(const WeightMap& w) const
{
    std::int64_t v = 0;
    for (const auto& k : selected_) {
        v += w(k);
    }
    return v;
}

// ---- Enumeration ----------------------------------------------------------

namespace {

void extend_cliques(const Graph& g, int t, std::vector<Vertex>& current, const VertexSet& cand,
                    std::vector<Clique>& out)
{
    if (static_cast<int>(current.size()) == t) {
        out.emplace_back(current);
        return;
    }
    const int need = t - static_cast<int>(current.size());
    if (static_cast<int>(cand.count()) < need) {
        return;
    }
    for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
        VertexSet next = cand & g.neighbors(static_cast<Vertex>(v));
        // keep only larger ids so each clique is produced once, in order
        next &= ~VertexSet(cand.size()).set(0, v + 1, true);
        current.push_back(static_cast<Vertex>(v));
        extend_cliques(g, t, current, next, out);
        current.pop_back();
    }
}

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<Clique>& out)
{
    if (p.none() && x.none()) {
        out.push_back(Clique::from_set(r));
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbors in P.
    const VertexSet px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = (p & g.neighbors(static_cast<Vertex>(pivot))).count();
    for (auto u = px.find_next(pivot); u != VertexSet::npos; u = px.find_next(u)) {
        const std::size_t c = (p & g.neighbors(static_cast<Vertex>(u))).count();
        if (c > best) {
            pivot = u;
            best = c;
        }
    }
    const VertexSet branch = p - g.neighbors(static_cast<Vertex>(pivot));
    for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
        const VertexSet& nv = g.neighbors(static_cast<Vertex>(v));
        r.set(v);
        bron_kerbosch(g, r, p & nv, x & nv, out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

} // namespace

std::vector<Clique> enumerate_t_cliques_in(const Graph& g, int t, const VertexSet& within)
{
    if (t < 0) {
        throw std::invalid_argument("enumerate_t_cliques: t must be nonnegative");
    }
    std::vector<Clique> out;
    std::vector<Vertex> current;
    extend_cliques(g, t, current, within, out);
    return out;
}

std::vector<Clique> enumerate_t_cliques(const Graph& g, int t)
{
    return enumerate_t_cliques_in(g, t, g.full_set());
}

std::uint64_t count_kt(const Graph& g, int t) { return enumerate_t_cliques(g, t).size(); }

std::vector<Clique> enumerate_maximal_cliques(const Graph& g)
{
    std::vector<Clique> out;
    if (g.order() == 0) {
        return out;
    }
    VertexSet r = g.empty_set();
    bron_kerbosch(g, r, g.full_set(), g.empty_set(), out);
    std::sort(out.begin(), out.end());
    return out;
}

Clique maximum_clique(const Graph& g)
{
    Clique best;
    for (auto& c : enumerate_maximal_cliques(g)) {
        // cliques arrive sorted, so the first of each size wins
        if (c.size() > best.size()) {
            best = std::move(c);
        }
    }
    return best;
}

// ---- Exact oracles --------------------------------------------------------

namespace {

struct CliqueInstance {
    std::vector<Clique> elements; // t-cliques with positive weight
    std::vector<std::int64_t> weight;
    std::vector<Clique> maximal;  // maximal cliques with at least one element
    std::vector<detail::Bits> members;
};

CliqueInstance build_instance(const Graph& g, int t, const WeightMap& w, const Limits& limits)
{
    if (t < 1) {
        throw std::invalid_argument("exact oracles require t >= 1");
    }
    if (w.t() != t) {
        throw std::invalid_argument("weight map is for t = " + std::to_string(w.t()) +
                                    ", problem has t = " + std::to_string(t));
    }
    w.validate(g);
    if (g.order() > limits.max_vertices) {
        throw SizeLimitExceeded(std::to_string(g.order()) + " vertices, limit " +
                                std::to_string(limits.max_vertices));
    }
    CliqueInstance inst;
    for (auto& k : enumerate_t_cliques(g, t)) {
        const std::int64_t wk = w(k);
        if (wk > 0) {
            if (wk > limits.max_weight) {
                throw SizeLimitExceeded("weight " + std::to_string(wk) + " above limit " +
                                        std::to_string(limits.max_weight));
            }
            inst.elements.push_back(std::move(k));
            inst.weight.push_back(wk);
        }
    }
    if (static_cast<int>(inst.elements.size()) > limits.max_elements) {
        throw SizeLimitExceeded(std::to_string(inst.elements.size()) + " weighted " +
                                std::to_string(t) + "-cliques, limit " +
                                std::to_string(limits.max_elements));
    }
    for (auto& m : enumerate_maximal_cliques(g)) {
        if (static_cast<int>(m.size()) < t) {
            continue;
        }
        detail::Bits bits(inst.elements.size());
        for (std::size_t e = 0; e < inst.elements.size(); ++e) {
            if (inst.elements[e].is_subset_of(m)) {
                bits.set(e);
            }
        }
        if (bits.any()) {
            inst.maximal.push_back(std::move(m));
            inst.members.push_back(std::move(bits));
        }
    }
    if (static_cast<int>(inst.maximal.size()) > limits.max_maximal_cliques) {
        throw SizeLimitExceeded(std::to_string(inst.maximal.size()) + " maximal cliques, limit " +
                                std::to_string(limits.max_maximal_cliques));
    }
    return inst;
}

// Cliques through one vertex never contain a non-neighbor of it, so for an
// independent set I the t-cliques through distinct members of I are covered
// by disjoint families of cliques.
std::vector<std::vector<int>> independent_groups(const Graph& g, const CliqueInstance& inst)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        order[v] = v;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<std::vector<int>> groups;
    VertexSet blocked = g.empty_set();
    for (Vertex v : order) {
        if (blocked.test(v)) {
            continue;
        }
        std::vector<int> group;
        for (std::size_t e = 0; e < inst.elements.size(); ++e) {
            if (inst.elements[e].contains(v)) {
                group.push_back(static_cast<int>(e));
            }
        }
        if (group.empty()) {
            continue;
        }
        groups.push_back(std::move(group));
        blocked |= g.neighbors(v);
        blocked.set(v);
    }
    return groups;
}

} // namespace

CoverResult exact_cover_number(const Graph& g, int t, const WeightMap& w, const Limits& limits)
{
    const CliqueInstance inst = build_instance(g, t, w, limits);
    CoverResult result;
    if (inst.elements.empty()) {
        return result;
    }
    detail::MulticoverInstance problem;
    problem.demand = inst.weight;
    problem.sets = inst.members;
    problem.groups = independent_groups(g, inst);
    const auto solution = detail::solve_multicover(problem);
    for (std::size_t s = 0; s < inst.maximal.size(); ++s) {
        result.cover.add(inst.maximal[s], solution.multiplicity[s]);
    }
    result.cost = solution.cost;
    return result;
}

PackingResult exact_packing_number(const Graph& g, int t, const WeightMap& w, const Limits& limits)
{
    const CliqueInstance inst = build_instance(g, t, w, limits);
    PackingResult result;
    if (inst.elements.empty()) {
        return result;
    }
    // Two t-cliques conflict iff their union is a clique, i.e. iff some
    // maximal clique contains both.
    detail::IndependentSetInstance problem;
    problem.weight = inst.weight;
    problem.conflicts.assign(inst.elements.size(), detail::Bits(inst.elements.size()));
    for (const auto& members : inst.members) {
        for (auto e = members.find_first(); e != detail::Bits::npos; e = members.find_next(e)) {
            problem.conflicts[e] |= members;
        }
    }
    for (std::size_t e = 0; e < inst.elements.size(); ++e) {
        problem.conflicts[e].reset(e);
    }
    problem.cliques = inst.members;
    const auto solution = detail::solve_independent_set(problem);
    for (auto e = solution.chosen.find_first(); e != detail::Bits::npos;
         e = solution.chosen.find_next(e)) {
        result.packing.select(inst.elements[e]);
    }
    result.value = solution.value;
    return result;
}

// ---- Feasibility ----------------------------------------------------------

Feasibility check_cover(const Graph& g, int t, const WeightMap& w, const CoverSolution& f)
{
    Feasibility report;
    if (w.t() != t) {
        report.fail("weight map is for t = " + std::to_string(w.t()));
        return report;
    }
    for (const auto& [k, wk] : w.explicit_weights()) {
        if (wk > 0 && !is_clique_of(g, k)) {
            report.fail("weight on " + to_string(k) + ", which is not a clique of the graph");
        }
    }
    std::vector<VertexSet> sets;
    std::vector<std::int64_t> mults;
    for (const auto& [k, m] : f.entries()) {
        if (!is_clique_of(g, k)) {
            report.fail("cover member " + to_string(k) + " is not a clique of the graph");
            continue;
        }
        if (m <= 0) {
            report.fail("cover member " + to_string(k) + " has multiplicity " + std::to_string(m));
            continue;
        }
        sets.push_back(k.to_set(g.order()));
        mults.push_back(m);
    }
    for (const auto& k : enumerate_t_cliques(g, t)) {
        const std::int64_t need = w(k);
        if (need <= 0) {
            continue;
        }
        const VertexSet ks = k.to_set(g.order());
        std::int64_t got = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (ks.is_subset_of(sets[i])) {
                got += mults[i];
            }
        }
        if (got < need) {
            report.fail(to_string(k) + " covered " + std::to_string(got) + " times, needs " +
                        std::to_string(need));
        }
    }
    return report;
}

Feasibility check_packing(const Graph& g, int t, const PackingSolution& y)
{
    Feasibility report;
    std::vector<const Clique*> picked;
    for (const auto& k : y.cliques()) {
        if (static_cast<int>(k.size()) != t || !is_clique_of(g, k)) {
            report.fail("packing member " + to_string(k) + " is not a " + std::to_string(t) +
                        "-clique of the graph");
            continue;
        }
        picked.push_back(&k);
    }
    for (std::size_t i = 0; i < picked.size(); ++i) {
        for (std::size_t j = i + 1; j < picked.size(); ++j) {
            std::vector<Vertex> both = picked[i]->vertices();
            both.insert(both.end(), picked[j]->vertices().begin(), picked[j]->vertices().end());
            std::sort(both.begin(), both.end());
            both.erase(std::unique(both.begin(), both.end()), both.end());
            if (g.is_clique(both)) {
                report.fail(to_string(*picked[i]) + " and " + to_string(*picked[j]) +
                            " lie in a common clique");
            }
        }
    }
    return report;
}

// ---- Conjecture check -----------------------------------------------------

std::vector<ConjectureViolation> verify_conjecture(int n, int t, const ConjectureOptions& opts)
{
    if (n < 1 || t < 1) {
        throw std::invalid_argument("verify_conjecture requires n >= 1 and t >= 1");
    }
    if (n > 7) {
        throw SizeLimitExceeded("verify_conjecture supports n <= 7");
    }
    const Graph turan = turan_graph(n, t);
    const std::int64_t bound = theta(turan, t);
    std::vector<ConjectureViolation> out;
    auto examine = [&](const Graph& g) {
        const std::int64_t value = theta(g, t);
        if (value > bound) {
            out.push_back({g, value, bound, true});
        } else if (value == bound && !isomorphic_small(g, turan)) {
            out.push_back({g, value, bound, false});
        }
    };
    const int pairs = pair_count(n);
    if (n <= opts.exhaustive_limit) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            examine(graph_from_mask(n, mask));
        }
    } else {
        detail::Rng rng(opts.seed);
        for (int i = 0; i < opts.sample; ++i) {
            const std::uint64_t mask = rng.below(std::uint64_t{1} << pairs);
            examine(graph_from_mask(n, mask));
        }
    }
    return out;
}

} // namespace ktcover
