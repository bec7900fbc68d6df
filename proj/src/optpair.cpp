#include "ktcover/optpair.hpp"

#include <map>
#include <stdexcept>

namespace ktcover {
namespace {

// Connected components of g[within], each listed in increasing order,
// components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    for (auto s = unseen.find_first(); s != VertexSet::npos; s = unseen.find_first()) {
        VertexSet comp = g.empty_set();
        VertexSet frontier = g.empty_set();
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            unseen -= frontier;
            VertexSet next = g.empty_set();
            for (auto u = frontier.find_first(); u != VertexSet::npos; u = frontier.find_next(u)) {
                next |= g.neighbors(static_cast<Vertex>(u));
            }
            frontier = next & unseen;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool has_edges(const Graph& g, const VertexSet& alive)
{
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
        if (g.neighbors(static_cast<Vertex>(v)).intersects(alive)) {
            return true;
        }
    }
    return false;
}

} // namespace

OptpairResult optpair(const Graph& g, int t, const WeightMap& w, const EliminationOrdering& ordering)
{
    if (t < 2) {
        throw std::invalid_argument("optpair requires t >= 2");
    }
    if (w.t() != t) {
        throw std::invalid_argument("weight map is for t = " + std::to_string(w.t()));
    }
    w.validate(g);
    if (!verify_p3_ordering(g, ordering.order)) {
        throw std::invalid_argument("ordering is not a {P3}-elimination ordering of the graph");
    }

    std::map<Clique, std::int64_t> residual;
    for (auto& k : enumerate_t_cliques(g, t)) {
        const std::int64_t wk = w(k);
        residual.emplace(std::move(k), wk);
    }

    OptpairResult result;
    VertexSet alive = g.full_set();
    for (Vertex v : ordering.order) {
        if (!has_edges(g, alive)) {
            break;
        }
        OptpairLevel level;
        level.v = v;
        for (const VertexSet& comp : components(g, g.neighbors(v) & alive)) {
            if (static_cast<int>(comp.count()) < t - 1) {
                continue;
            }
            const Clique q = Clique::from_set(comp);
            if (!is_clique_of(g, q)) {
                throw std::logic_error("neighborhood component " + to_string(q) +
                                       " is not a clique");
            }
            OptpairLevel::Component c;
            c.q = q;
            bool first = true;
            for (const Clique& z : enumerate_t_cliques_in(g, t - 1, comp)) {
                const std::int64_t wz = residual.at(z.with(v));
                if (first || wz > c.t_i) {
                    c.z = z;
                    c.t_i = wz;
                    first = false;
                }
            }
            level.components.push_back(std::move(c));
        }
        for (const auto& c : level.components) {
            if (static_cast<int>(c.q.size()) < t) {
                continue;
            }
            for (const Clique& k : enumerate_t_cliques_in(g, t, c.q.to_set(g.order()))) {
                std::int64_t& wk = residual.at(k);
                const std::int64_t after = std::max<std::int64_t>(0, wk - c.t_i);
                if (after != wk) {
                    level.residuals.push_back({k, wk, after});
                    wk = after;
                }
            }
        }
        result.trace.push_back(std::move(level));
        alive.reset(v);
    }

    // Unwind: the deepest level corresponds to the innermost recursive call.
    for (auto level = result.trace.rbegin(); level != result.trace.rend(); ++level) {
        for (auto& c : level->components) {
            result.cover.add(c.q.with(level->v), c.t_i);
            bool inner_packed = false;
            for (const Clique& k : result.packing.cliques()) {
                if (k.is_subset_of(c.q)) {
                    inner_packed = true;
                    break;
                }
            }
            c.packed = c.t_i > 0 && !inner_packed;
            if (c.packed) {
                result.packing.select(c.z.with(level->v));
            }
        }
    }
    result.cost = result.cover.cost();
    result.value = result.packing.value(w);
    return result;
}

Certificate certify(const OptpairResult& result, const Graph& g, int t, const WeightMap& w)
{
    Certificate cert;
    auto fail = [&](std::string why) {
        cert.ok = false;
        cert.problems.push_back(std::move(why));
    };
    for (auto& p : check_cover(g, t, w, result.cover).problems) {
        fail("cover: " + p);
    }
    for (auto& p : check_packing(g, t, result.packing).problems) {
        fail("packing: " + p);
    }
    for (const auto& k : result.packing.cliques()) {
        if (w(k) <= 0) {
            fail("packing selects " + to_string(k) + " with zero weight");
        }
    }
    const std::int64_t cost = result.cover.cost();
    const std::int64_t value = result.packing.value(w);
    if (cost != result.cost || value != result.value) {
        fail("reported cost/value do not match the solutions");
    }
    if (cost != value) {
        fail("cost " + std::to_string(cost) + " differs from value " + std::to_string(value));
    }
    return cert;
}

} // namespace ktcover
