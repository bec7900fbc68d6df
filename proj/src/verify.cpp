#include "ktcover/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ktcover/bounds.hpp"
#include "ktcover/clique.hpp"
#include "ktcover/errors.hpp"
#include "ktcover/elimination.hpp"
#include "ktcover/graph.hpp"
#include "ktcover/greedy_covers.hpp"
#include "ktcover/optpair.hpp"
#include "ktcover/reduction.hpp"
#include "rng.hpp"

namespace ktcover::verify {
namespace {

constexpr std::size_t kMaxFailureDetails = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << " edges=[";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        out << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    out << ']';
    return out.str();
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

int threads_for(const SuiteOptions& opts) { return opts.threads > 0 ? opts.threads : env_threads(); }

Limits limits_for(const SuiteOptions& opts) { return opts.unsafe_limits ? Limits::unsafe() : Limits{}; }

// Per-item outcome gathered by the parallel harness and folded in index
// order so reports do not depend on scheduling.
struct Outcome {
    std::int64_t checked = 0;
    std::vector<std::string> failures;
};

void fold(CriterionReport& report, const std::vector<Outcome>& outcomes)
{
    for (const auto& o : outcomes) {
        report.checked += o.checked;
        for (const auto& f : o.failures) {
            report.fail(f);
        }
    }
}

template <class Body>
CriterionReport run_items(std::string name, std::size_t count, int threads, Body body)
{
    const auto start = Clock::now();
    CriterionReport report;
    report.name = std::move(name);
    std::vector<Outcome> outcomes(count);
    parallel_for(count, threads, [&](std::size_t i) { body(i, outcomes[i]); });
    fold(report, outcomes);
    report.seconds = seconds_since(start);
    return report;
}

// Random weights in [0, 5] on every t-clique, drawn in lexicographic order.
WeightMap random_weights(const Graph& g, int t, detail::Rng& rng)
{
    WeightMap w = WeightMap::zero(t);
    for (const auto& k : enumerate_t_cliques(g, t)) {
        w.set(k, static_cast<std::int64_t>(rng.below(6)));
    }
    return w;
}

// Distinct masks: all of them when there are at most `cap`, else a seeded
// sample of `cap` distinct masks.
std::vector<std::uint64_t> masks_for(int n, std::size_t cap, std::uint64_t seed)
{
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    std::vector<std::uint64_t> out;
    if (total <= cap) {
        for (std::uint64_t m = 0; m < total; ++m) {
            out.push_back(m);
        }
        return out;
    }
    detail::Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
    std::set<std::uint64_t> seen;
    while (seen.size() < cap) {
        seen.insert(rng.below(total));
    }
    return {seen.begin(), seen.end()};
}

bool brute_force_p3_ordering_exists(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        order[v] = v;
    }
    do {
        if (verify_p3_ordering(g, order)) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Suites.

SuiteReport suite_duality(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 12);
    const int per_t = pick(opts.samples, 250);
    const Limits limits = limits_for(opts);

    struct Instance {
        Graph g;
        int t;
        std::uint64_t seed;
        std::string label;
    };
    std::vector<Instance> instances;
    detail::Rng rng(opts.seed);
    for (int t : {2, 3}) {
        for (int n = 4; n <= std::max(4, n_max); ++n) {
            instances.push_back({cycle_graph(n), t, rng.below(1ULL << 62), "C" + std::to_string(n)});
        }
        for (int i = 0; i < per_t; ++i) {
            const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - 1)));
            const double density = 0.2 + 0.7 * rng.uniform();
            const std::uint64_t gseed = rng.below(1ULL << 62);
            instances.push_back({random_chordal(n, density, gseed), t, rng.below(1ULL << 62),
                                 "chordal(n=" + std::to_string(n) + ",seed=" + std::to_string(gseed) + ")"});
        }
    }

    SuiteReport report{"duality", {}, 0};
    report.criteria.push_back(run_items(
        "optpair cost = value = exact cover = exact packing", instances.size(), threads_for(opts),
        [&](std::size_t i, Outcome& out) {
            const auto& inst = instances[i];
            detail::Rng wrng(inst.seed);
            const WeightMap w = random_weights(inst.g, inst.t, wrng);
            const auto ordering = find_p3_elimination(inst.g);
            const std::string tag = inst.label + " t=" + std::to_string(inst.t);
            out.checked = 1;
            if (!ordering) {
                out.failures.push_back(tag + ": no P3-elimination ordering found");
                return;
            }
            const auto r = optpair(inst.g, inst.t, w, *ordering);
            if (auto cert = certify(r, inst.g, inst.t, w); !cert) {
                out.failures.push_back(tag + ": certificate rejected: " + cert.problems.front());
                return;
            }
            const auto cover = exact_cover_number(inst.g, inst.t, w, limits).cost;
            const auto packing = exact_packing_number(inst.g, inst.t, w, limits).value;
            if (r.cost != r.value || r.cost != cover || r.value != packing) {
                out.failures.push_back(tag + ": cost " + std::to_string(r.cost) + " value " +
                                       std::to_string(r.value) + " exact cover " + std::to_string(cover) +
                                       " exact packing " + std::to_string(packing));
            }
        }));
    return report;
}

SuiteReport suite_theorem8(const SuiteOptions& opts)
{
    const int n = pick(opts.n, 6);
    if (n > 6 && !opts.unsafe_limits) {
        throw SizeLimitExceeded("theorem8 suite enumerates all labeled graphs; n <= 6");
    }
    const Limits limits = limits_for(opts);
    const Graph turan = turan_graph(n, 3);
    const std::int64_t bound = bounds::k3_turan3(n);
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);

    SuiteReport report{"theorem8", {}, 0};
    std::vector<char> is_equal(total, 0);
    auto exact = run_items("exact triangle cover number <= k3(T(n,3))", total, threads_for(opts),
                           [&](std::size_t mask, Outcome& out) {
                               const Graph g = graph_from_mask(n, mask);
                               const auto value = theta(g, 3, limits);
                               out.checked = 1;
                               if (value > bound) {
                                   out.failures.push_back(describe(g) + ": theta " + std::to_string(value));
                               }
                               is_equal[mask] = value == bound;
                           });
    report.criteria.push_back(std::move(exact));

    auto extremal = run_items("equality exactly on T(n,3)", total, threads_for(opts),
                              [&](std::size_t mask, Outcome& out) {
                                  const Graph g = graph_from_mask(n, mask);
                                  const bool iso = isomorphic_small(g, turan);
                                  out.checked = 1;
                                  if (static_cast<bool>(is_equal[mask]) != iso) {
                                      out.failures.push_back(describe(g) + (iso ? ": isomorphic to T(n,3) but below the bound"
                                                                                : ": attains the bound"));
                                  }
                              });
    extremal.note("extremal graphs: " +
                  std::to_string(std::count(is_equal.begin(), is_equal.end(), char{1})));
    report.criteria.push_back(std::move(extremal));

    report.criteria.push_back(run_items(
        "recursive triangle cover (exact subsolver) feasible and <= k3(T(n,3))", total, threads_for(opts),
        [&](std::size_t mask, Outcome& out) {
            const Graph g = graph_from_mask(n, mask);
            const auto cover = recursive_triangle_cover(g, Subsolver::exact, limits);
            out.checked = 1;
            if (auto f = check_cover(g, 3, WeightMap::unit(3), cover); !f) {
                out.failures.push_back(describe(g) + ": infeasible: " + f.problems.front());
            } else if (cover.cost() > bound) {
                out.failures.push_back(describe(g) + ": size " + std::to_string(cover.cost()));
            }
        }));
    return report;
}

SuiteReport suite_egp(const SuiteOptions& opts)
{
    std::vector<int> orders;
    if (opts.n > 0) {
        if (opts.n > 6 && !opts.unsafe_limits) {
            throw SizeLimitExceeded("egp suite enumerates all labeled graphs; n <= 6");
        }
        orders.push_back(opts.n);
    } else {
        orders = {4, 5};
    }
    const Limits limits = limits_for(opts);
    SuiteReport report{"egp", {}, 0};
    for (int n : orders) {
        const Graph turan = turan_graph(n, 2);
        const std::int64_t bound = bounds::egp_bound(n);
        const std::uint64_t total = std::uint64_t{1} << pair_count(n);
        std::vector<char> equal(total, 0);
        auto crit = run_items("n=" + std::to_string(n) + ": theta_e <= floor(n^2/4), equality iff T(n,2)", total,
                              threads_for(opts), [&](std::size_t mask, Outcome& out) {
                                  const Graph g = graph_from_mask(n, mask);
                                  const auto value = theta(g, 2, limits);
                                  const bool iso = isomorphic_small(g, turan);
                                  out.checked = 1;
                                  equal[mask] = value == bound;
                                  if (value > bound) {
                                      out.failures.push_back(describe(g) + ": theta_e " + std::to_string(value));
                                  } else if ((value == bound) != iso) {
                                      out.failures.push_back(describe(g) + (iso ? ": T(n,2) below the bound"
                                                                                : ": attains the bound"));
                                  }
                              });
        crit.note("graphs examined: " + std::to_string(total) + ", extremal: " +
                  std::to_string(std::count(equal.begin(), equal.end(), char{1})));
        report.criteria.push_back(std::move(crit));
    }
    return report;
}

SuiteReport suite_lovasz(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 14);
    const int count = pick(opts.samples, 1000);
    const Limits limits = limits_for(opts);

    struct Instance {
        int n;
        double p;
        std::uint64_t seed;
    };
    std::vector<Instance> instances;
    detail::Rng rng(opts.seed);
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
        const double p = rng.uniform();
        instances.push_back({n, p, rng.below(1ULL << 62)});
    }

    SuiteReport report{"lovasz", {}, 0};
    report.criteria.push_back(run_items(
        "greedy cover feasible within its ledger; exact theta_e within the lovasz and min-degree bounds",
        instances.size(), threads_for(opts), [&](std::size_t i, Outcome& out) {
            const auto& inst = instances[i];
            const Graph g = random_gnp(inst.n, inst.p, inst.seed);
            const std::string tag = "gnp(n=" + std::to_string(inst.n) + ",seed=" + std::to_string(inst.seed) + ")";
            out.checked = 1;
            const auto greedy = greedy_lovasz_edge_cover(g);
            if (auto f = check_cover(g, 2, WeightMap::unit(2), greedy.cover); !f) {
                out.failures.push_back(tag + ": greedy cover infeasible: " + f.problems.front());
            }
            if (greedy.cover.cost() > greedy.trace.ledger()) {
                out.failures.push_back(tag + ": greedy size " + std::to_string(greedy.cover.cost()) +
                                       " exceeds ledger " + std::to_string(greedy.trace.ledger()));
            }
            const auto m = static_cast<std::int64_t>(g.edge_count());
            const auto lovasz = bounds::lovasz_bound(inst.n, m);
            if (greedy.cover.cost() > lovasz) {
                out.failures.push_back(tag + ": greedy size " + std::to_string(greedy.cover.cost()) +
                                       " > lovasz " + std::to_string(lovasz));
            }
            const auto value = theta(g, 2, limits);
            if (value > lovasz) {
                out.failures.push_back(tag + ": theta_e " + std::to_string(value) + " > lovasz " +
                                       std::to_string(lovasz));
            }
            const int delta = min_degree(g);
            if (inst.n >= 1) {
                const auto md = bounds::mindeg_bound(inst.n, delta);
                if (value > md) {
                    out.failures.push_back(tag + ": theta_e " + std::to_string(value) + " > mindeg " +
                                           std::to_string(md));
                }
                if (greedy.trace.ledger() > md) {
                    out.failures.push_back(tag + ": greedy ledger " + std::to_string(greedy.trace.ledger()) +
                                           " > mindeg " + std::to_string(md));
                }
                if (auto plus = bounds::mindeg_bound_plus(inst.n, delta); plus) {
                    if (value > *plus) {
                        out.failures.push_back(tag + ": theta_e " + std::to_string(value) + " > mindeg_plus " +
                                               std::to_string(*plus));
                    }
                    if (greedy.trace.ledger() > *plus) {
                        out.failures.push_back(tag + ": greedy ledger " + std::to_string(greedy.trace.ledger()) +
                                               " > mindeg_plus " + std::to_string(*plus));
                    }
                }
            }
        }));

    CriterionReport spot;
    spot.name = "spot values n=12, delta=9: mindeg 15, lovasz(m=54) 16";
    spot.checked = 2;
    if (bounds::mindeg_bound(12, 9) != 15) {
        spot.fail("mindeg_bound(12, 9) = " + std::to_string(bounds::mindeg_bound(12, 9)));
    }
    if (bounds::lovasz_bound(12, 54) != 16) {
        spot.fail("lovasz_bound(12, 54) = " + std::to_string(bounds::lovasz_bound(12, 54)));
    }
    report.criteria.push_back(std::move(spot));
    return report;
}

SuiteReport suite_reduction(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 5);
    const auto cap = static_cast<std::size_t>(pick(opts.samples, 200));
    if (n_max > 5 && !opts.unsafe_limits) {
        throw SizeLimitExceeded("reduction suite supports n <= 5");
    }
    const Limits limits = limits_for(opts);
    struct Instance {
        Graph g;
        int t;
    };
    std::vector<Instance> instances;
    for (int t : {2, 3}) {
        for (int n = 1; n <= n_max; ++n) {
            for (auto mask : masks_for(n, cap, opts.seed)) {
                instances.push_back({graph_from_mask(n, mask), t});
            }
        }
    }

    SuiteReport report{"reduction", {}, 0};
    report.criteria.push_back(run_items(
        "theta_{t-1}(G) <= k iff theta_t(G') <= s*k + e for k in [0, 10]", instances.size(), threads_for(opts),
        [&](std::size_t i, Outcome& out) {
            const auto& inst = instances[i];
            for (const auto& c : check_reduction_range(inst.g, inst.t, 0, 10, true)) {
                ++out.checked;
                if (!c.holds()) {
                    out.failures.push_back(describe(inst.g) + " t=" + std::to_string(inst.t) + " k=" +
                                           std::to_string(c.k) + ": theta " + std::to_string(c.theta_original) +
                                           " vs theta' " + std::to_string(c.theta_augmented) + " k' " +
                                           std::to_string(c.k_prime));
                }
            }
        }));
    report.criteria.push_back(run_items(
        "lift and project round trip", instances.size(), threads_for(opts), [&](std::size_t i, Outcome& out) {
            const auto& inst = instances[i];
            const int t = inst.t;
            const Gadget gadget = build_gadget(inst.g, t);
            const std::string tag = describe(inst.g) + " t=" + std::to_string(t);
            out.checked = 1;
            const auto base = exact_cover_number(inst.g, t - 1, WeightMap::unit(t - 1), limits);
            const auto lifted = lift_cover(gadget, base.cover);
            if (auto f = check_cover(gadget.augmented, t, WeightMap::unit(t), lifted); !f) {
                out.failures.push_back(tag + ": lifted cover infeasible: " + f.problems.front());
                return;
            }
            if (lifted.cost() > gadget.budget(base.cost)) {
                out.failures.push_back(tag + ": lifted size " + std::to_string(lifted.cost()) + " > k'");
            }
            for (const auto& source : {lifted, exact_cover_number(gadget.augmented, t, WeightMap::unit(t),
                                                                  Limits::unsafe())
                                                   .cover}) {
                const auto projected = project_cover(gadget, source);
                if (auto f = check_cover(inst.g, t - 1, WeightMap::unit(t - 1), projected.cover); !f) {
                    out.failures.push_back(tag + ": projected cover infeasible: " + f.problems.front());
                } else if (projected.cover.cost() > source.cost() / gadget.s) {
                    out.failures.push_back(tag + ": projected size " + std::to_string(projected.cover.cost()) +
                                           " > floor(|D|/s)");
                }
            }
        }));
    return report;
}

SuiteReport suite_semichordal(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 6);
    if (n_max > 6 && !opts.unsafe_limits) {
        throw SizeLimitExceeded("semichordal suite enumerates all labeled graphs; n <= 6");
    }
    const int samples = pick(opts.samples, 300);
    SuiteReport report{"semichordal", {}, 0};

    std::vector<std::pair<int, std::uint64_t>> labeled;
    for (int n = 1; n <= n_max; ++n) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); ++m) {
            labeled.emplace_back(n, m);
        }
    }
    std::vector<char> chordal_flags(labeled.size(), 0);
    report.criteria.push_back(run_items(
        "find_p3_elimination agrees with all-orderings search", labeled.size(), threads_for(opts),
        [&](std::size_t i, Outcome& out) {
            const Graph g = graph_from_mask(labeled[i].first, labeled[i].second);
            const auto found = find_p3_elimination(g);
            out.checked = 1;
            if (found && !verify_p3_ordering(g, found->order)) {
                out.failures.push_back(describe(g) + ": returned ordering does not verify");
            }
            if (found.has_value() != brute_force_p3_ordering_exists(g)) {
                out.failures.push_back(describe(g) + ": search disagrees with brute force");
            }
            chordal_flags[i] = is_chordal(g).chordal;
        }));

    CriterionReport wheel;
    wheel.name = "W5 rejected";
    wheel.checked = 1;
    if (is_semichordal(wheel_graph(5))) {
        wheel.fail("W5 accepted");
    }
    report.criteria.push_back(std::move(wheel));

    std::vector<Graph> chordal;
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (chordal_flags[i]) {
            chordal.push_back(graph_from_mask(labeled[i].first, labeled[i].second));
        }
    }
    detail::Rng rng(opts.seed);
    for (int i = 0; i < samples; ++i) {
        const int n = 1 + static_cast<int>(rng.below(12));
        chordal.push_back(random_chordal(n, rng.uniform(), rng.below(1ULL << 62)));
    }
    report.criteria.push_back(run_items("chordal graphs accepted", chordal.size(), threads_for(opts),
                                        [&](std::size_t i, Outcome& out) {
                                            out.checked = 1;
                                            if (!is_chordal(chordal[i]).chordal) {
                                                out.failures.push_back(describe(chordal[i]) + ": not chordal");
                                            } else if (!is_semichordal(chordal[i])) {
                                                out.failures.push_back(describe(chordal[i]) + ": rejected");
                                            }
                                        }));

    std::vector<Graph> wheel_free;
    std::int64_t drawn = 0;
    while (static_cast<int>(wheel_free.size()) < samples && drawn < 200LL * samples) {
        const int n = 1 + static_cast<int>(rng.below(10));
        Graph g = random_gnp(n, 0.15 + 0.5 * rng.uniform(), rng.below(1ULL << 62));
        ++drawn;
        if (!contains_induced_3wheel(g)) {
            wheel_free.push_back(std::move(g));
        }
    }
    auto free_crit = run_items("3-wheel-free graphs (n <= 10) accepted", wheel_free.size(), threads_for(opts),
                               [&](std::size_t i, Outcome& out) {
                                   out.checked = 1;
                                   if (!is_semichordal(wheel_free[i])) {
                                       out.failures.push_back(describe(wheel_free[i]) + ": rejected");
                                   }
                               });
    free_crit.note("drawn " + std::to_string(drawn) + " graphs");
    report.criteria.push_back(std::move(free_crit));
    return report;
}

SuiteReport suite_hypergraph(const SuiteOptions&)
{
    SuiteReport report{"hypergraph", {}, 0};
    CriterionReport crit;
    crit.name = "hyperedge counts match the closed forms";
    auto expect = [&](int n, std::int64_t formula) {
        const auto count = static_cast<std::int64_t>(turan_hypergraph(n).hyperedges.size());
        ++crit.checked;
        if (count != formula) {
            crit.fail("n=" + std::to_string(n) + ": enumerated " + std::to_string(count) + ", formula " +
                      std::to_string(formula));
        }
        if (bounds::turan_hyper_lower(n) != count) {
            crit.fail("n=" + std::to_string(n) + ": turan_hyper_lower disagrees with enumeration");
        }
    };
    for (int n : {6, 9, 12}) {
        const std::int64_t m = n / 3;
        expect(n, m * m * (5 * m - 3) / 2);
    }
    for (int n : {7, 10}) {
        const std::int64_t m = n / 3;
        expect(n, m * (5 * m * m + 2 * m - 1) / 2);
    }
    for (int n : {5, 8, 11, 14}) {
        crit.note("n=" + std::to_string(n) + ": " + std::to_string(turan_hypergraph(n).hyperedges.size()) +
                  " hyperedges");
    }
    report.criteria.push_back(std::move(crit));
    return report;
}

SuiteReport suite_formulas(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 30);
    SuiteReport report{"formulas", {}, 0};

    CriterionReport k3;
    k3.name = "k3_turan3 and k3_turan3_diff against enumeration";
    std::int64_t previous = 0;
    for (int n = 1; n <= n_max; ++n) {
        const auto counted = static_cast<std::int64_t>(count_kt(turan_graph(n, 3), 3));
        ++k3.checked;
        if (bounds::k3_turan3(n) != counted) {
            k3.fail("n=" + std::to_string(n) + ": formula " + std::to_string(bounds::k3_turan3(n)) +
                    ", enumerated " + std::to_string(counted));
        }
        if (n >= 3) {
            auto sizes = turan_part_sizes(n, 3);
            std::sort(sizes.begin(), sizes.end());
            const std::int64_t through_vertex = static_cast<std::int64_t>(sizes[0]) * sizes[1];
            const auto diff = bounds::k3_turan3_diff(n);
            if (diff != counted - previous || diff != through_vertex) {
                k3.fail("n=" + std::to_string(n) + ": diff " + std::to_string(diff) + ", difference " +
                        std::to_string(counted - previous) + ", part product " + std::to_string(through_vertex));
            }
        }
        previous = counted;
    }
    report.criteria.push_back(std::move(k3));

    CriterionReport kt;
    kt.name = "kt_turan against enumeration (n <= 12, t <= 4)";
    for (int n = 1; n <= 12; ++n) {
        for (int t = 1; t <= 4; ++t) {
            const auto counted = static_cast<std::int64_t>(count_kt(turan_graph(n, t), t));
            ++kt.checked;
            if (bounds::kt_turan(n, t) != counted) {
                kt.fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + ": formula " +
                        std::to_string(bounds::kt_turan(n, t)) + ", enumerated " + std::to_string(counted));
            }
        }
    }
    report.criteria.push_back(std::move(kt));
    return report;
}

SuiteReport suite_remark5(const SuiteOptions&)
{
    SuiteReport report{"remark5", {}, 0};
    CriterionReport crit;
    crit.name = "naive counting threshold is 26";
    crit.checked = 3;
    const auto threshold = bounds::remark5_counting_threshold();
    if (threshold != 26) {
        crit.fail("threshold " + std::to_string(threshold));
    }
    if (bounds::counting_rules_out_k4_cover(18)) {
        crit.fail("counting already rules out a K4 cover at n = 18");
    }
    if (!bounds::counting_rules_out_k4_cover(26) || bounds::counting_rules_out_k4_cover(25)) {
        crit.fail("threshold is not the first n where the count decides");
    }
    crit.note("known issue: the printed threshold 18 is not reproduced by 4*k3(T(n,3)) < C(n,3)");
    report.criteria.push_back(std::move(crit));
    return report;
}

SuiteReport suite_conjecture(const SuiteOptions& opts)
{
    const int n_max = pick(opts.n, 6);
    SuiteReport report{"conjecture", {}, 0};
    ConjectureOptions copts;
    copts.seed = opts.seed;
    if (opts.samples > 0) {
        copts.sample = opts.samples;
    }
    for (int t = 2; t <= 4; ++t) {
        for (int n = t; n <= n_max; ++n) {
            const auto start = Clock::now();
            CriterionReport crit;
            crit.name = "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": theta_t <= theta_t(T(n,t))";
            crit.checked = n <= copts.exhaustive_limit ? std::int64_t{1} << pair_count(n) : copts.sample;
            for (const auto& v : verify_conjecture(n, t, copts)) {
                if (v.exceeds) {
                    crit.fail(describe(v.graph) + ": theta " + std::to_string(v.theta) + " > " +
                              std::to_string(v.turan_theta));
                } else {
                    crit.note(describe(v.graph) + ": ties the Turan value");
                }
            }
            crit.seconds = seconds_since(start);
            report.criteria.push_back(std::move(crit));
        }
    }
    return report;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"conjecture", suite_conjecture}, {"theorem8", suite_theorem8},
        {"egp", suite_egp},               {"duality", suite_duality},
        {"lovasz", suite_lovasz},         {"reduction", suite_reduction},
        {"semichordal", suite_semichordal}, {"hypergraph", suite_hypergraph},
        {"formulas", suite_formulas},     {"remark5", suite_remark5},
    };
    return suites;
}

} // namespace

void CriterionReport::fail(std::string why)
{
    pass = false;
    ++violations;
    if (details.size() < kMaxFailureDetails) {
        details.push_back(std::move(why));
    }
}

bool SuiteReport::pass() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json(bool with_timings) const
{
    nlohmann::json crits = nlohmann::json::array();
    for (const auto& c : criteria) {
        nlohmann::json j = {{"name", c.name},
                            {"pass", c.pass},
                            {"checked", c.checked},
                            {"violations", c.violations},
                            {"details", c.details}};
        if (with_timings) {
            j["seconds"] = c.seconds;
        }
        crits.push_back(std::move(j));
    }
    nlohmann::json j = {{"suite", suite}, {"pass", pass()}, {"criteria", std::move(crits)}};
    if (with_timings) {
        j["seconds"] = seconds;
    }
    return j;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) {
            const auto start = Clock::now();
            SuiteReport report = fn(opts);
            report.seconds = seconds_since(start);
            return report;
        }
    }
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

int env_threads()
{
    if (const char* raw = std::getenv("KTCOVER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) {
            return static_cast<int>(std::min<long>(v, 256));
        }
    }
    return 1;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body)
{
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count && !stop; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                stop = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back(work);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace ktcover::verify
