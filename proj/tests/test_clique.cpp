#include <doctest.h>

#include <set>

#include "ktcover/bounds.hpp"
#include "ktcover/clique.hpp"
#include "ktcover/errors.hpp"
#include "oracles.hpp"

using namespace ktcover;

namespace {

std::vector<oracle::Mask> masks(const std::vector<Clique>& cs)
{
    std::vector<oracle::Mask> out;
    for (const auto& c : cs) {
        out.push_back(oracle::mask_of(c));
    }
    return out;
}

std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

WeightMap weights_from(const Graph& g, int t, const std::vector<std::int64_t>& values)
{
    WeightMap w = WeightMap::zero(t);
    const auto ks = enumerate_t_cliques(g, t);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        w.set(ks[i], values[i % values.size()]);
    }
    return w;
}

// Small deterministic LCG so the test corpus does not depend on the library RNG.
struct Lcg {
    std::uint64_t s;
    std::uint64_t next()
    {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
};

Graph triangle_with_weights(WeightMap& w)
{
    w = WeightMap::zero(2);
    w.set(Clique({0, 1}), 2);
    w.set(Clique({0, 2}), 3);
    w.set(Clique({1, 2}), 5);
    return complete_graph(3);
}

} // namespace

TEST_SUITE("clique")
{
    TEST_CASE("Clique is canonical")
    {
        const Clique c({3, 1, 2});
        CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3});
        CHECK_THROWS_AS(Clique({1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(Clique({-1, 2}), std::invalid_argument);
        CHECK(c.with(0).vertices() == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(c.without(2).vertices() == std::vector<Vertex>{1, 3});
        CHECK(Clique({1, 3}).is_subset_of(c));
        CHECK_FALSE(Clique({0, 3}).is_subset_of(c));
        CHECK(to_string(c) == "{1,2,3}");
    }

    TEST_CASE("t-clique enumeration examples")
    {
        CHECK(enumerate_t_cliques(complete_graph(5), 3).size() == 10);
        CHECK(enumerate_t_cliques(turan_graph(5, 3), 3).size() == 4);
        CHECK(enumerate_t_cliques(Graph(6), 2).empty());
        CHECK(count_kt(turan_graph(6, 3), 3) == 8);
        CHECK(count_kt(complete_graph(4), 4) == 1);
        CHECK(count_kt(cycle_graph(5), 3) == 0);
    }

    TEST_CASE("t-clique enumeration matches subset oracle and is lexicographic")
    {
        Lcg rng{5};
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 1 + static_cast<int>(rng.next() % 9);
            const Graph g = random_gnp(n, 0.2 + 0.1 * (trial % 7), rng.next());
            for (int t = 1; t <= 5; ++t) {
                const auto got = enumerate_t_cliques(g, t);
                CHECK(std::is_sorted(got.begin(), got.end()));
                CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
                CHECK(sorted(masks(got)) == sorted(oracle::t_cliques(g, t)));
                CHECK(count_kt(g, t) == got.size());
            }
        }
    }

    TEST_CASE("maximal cliques")
    {
        const auto c5 = enumerate_maximal_cliques(cycle_graph(5));
        CHECK(c5.size() == 5);
        for (const auto& c : c5) {
            CHECK(c.size() == 2);
        }
        const auto t63 = enumerate_maximal_cliques(turan_graph(6, 3));
        CHECK(t63.size() == 8);
        CHECK(enumerate_maximal_cliques(complete_graph(4)) == std::vector<Clique>{Clique({0, 1, 2, 3})});

        Lcg rng{17};
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng.next() % 10);
            const Graph g = random_gnp(n, 0.1 * (1 + trial % 9), rng.next());
            CHECK(sorted(masks(enumerate_maximal_cliques(g))) == sorted(oracle::maximal_cliques(g)));
        }
    }

    TEST_CASE("t-clique counts from maximal cliques by inclusion-exclusion")
    {
        // Each t-clique lies in at least one maximal clique; inclusion-exclusion
        // over intersections of maximal cliques counts the union exactly.
        Lcg rng{23};
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng.next() % 7);
            const Graph g = random_gnp(n, 0.5, rng.next());
            const auto mx = masks(enumerate_maximal_cliques(g));
            if (mx.size() > 14) {
                continue;
            }
            for (int t = 1; t <= 3; ++t) {
                std::int64_t total = 0;
                for (std::uint32_t sub = 1; sub < (1u << mx.size()); ++sub) {
                    oracle::Mask inter = ~oracle::Mask{0};
                    for (std::size_t i = 0; i < mx.size(); ++i) {
                        if (sub >> i & 1) {
                            inter &= mx[i];
                        }
                    }
                    const auto term = bounds::binomial(oracle::popcount(inter), t);
                    total += (oracle::popcount(sub) % 2 ? term : -term);
                }
                CHECK(total == static_cast<std::int64_t>(count_kt(g, t)));
            }
        }
    }

    TEST_CASE("maximum clique")
    {
        CHECK(maximum_clique(complete_graph(4)) == Clique({0, 1, 2, 3}));
        CHECK(maximum_clique(cycle_graph(5)) == Clique({0, 1}));
        CHECK(maximum_clique(Graph(3)) == Clique({0}));
        CHECK(maximum_clique(Graph(0)).empty());
        Lcg rng{31};
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = random_gnp(1 + static_cast<int>(rng.next() % 9), 0.5, rng.next());
            const auto all = oracle::all_cliques(g);
            int best = 0;
            for (auto c : all) {
                if (oracle::popcount(c) > best) {
                    best = oracle::popcount(c);
                }
            }
            std::vector<Clique> tops;
            for (auto c : all) {
                if (oracle::popcount(c) == best) {
                    tops.push_back(oracle::clique_of(c));
                }
            }
            std::sort(tops.begin(), tops.end());
            CHECK(maximum_clique(g) == tops.front());
        }
    }

    TEST_CASE("WeightMap")
    {
        WeightMap w = WeightMap::unit(2);
        w.set(Clique({0, 1}), 4);
        CHECK(w(Clique({0, 1})) == 4);
        CHECK(w(Clique({2, 3})) == 1);
        CHECK_THROWS_AS(w.set(Clique({0, 1, 2}), 1), std::invalid_argument);
        CHECK_THROWS_AS(w.set(Clique({0, 2}), -1), std::invalid_argument);
        CHECK_THROWS_AS(w.validate(Graph(2)), std::invalid_argument);
        w.validate(complete_graph(2));
    }

    TEST_CASE("exact cover examples")
    {
        const auto k4 = exact_cover_number(complete_graph(4), 3, WeightMap::unit(3));
        CHECK(k4.cost == 1);
        CHECK(k4.cover.multiplicity(Clique({0, 1, 2, 3})) == 1);
        CHECK(exact_cover_number(turan_graph(6, 3), 3, WeightMap::unit(3)).cost == 8);
        WeightMap w = WeightMap::zero(2);
        const Graph k3 = triangle_with_weights(w);
        const auto r = exact_cover_number(k3, 2, w);
        CHECK(r.cost == 5);
        CHECK(r.cover.multiplicity(Clique({0, 1, 2})) == 5);
        CHECK(exact_cover_number(Graph(4), 2, WeightMap::unit(2)).cost == 0);
        CHECK(theta(Graph(4), 1) == 4);
        CHECK(theta(cycle_graph(4), 1) == 2);
    }

    TEST_CASE("exact packing examples")
    {
        CHECK(exact_packing_number(complete_graph(3), 2, WeightMap::unit(2)).value == 1);
        WeightMap w = WeightMap::zero(2);
        const Graph k3 = triangle_with_weights(w);
        const auto r = exact_packing_number(k3, 2, w);
        CHECK(r.value == 5);
        CHECK(r.packing.selected(Clique({1, 2})));
        CHECK(exact_packing_number(cycle_graph(4), 2, WeightMap::unit(2)).value == 4);
    }

    TEST_CASE("oracles reject bad parameters and oversized instances")
    {
        CHECK_THROWS_AS(exact_cover_number(complete_graph(3), 0, WeightMap::unit(0)), std::invalid_argument);
        CHECK_THROWS_AS(exact_cover_number(complete_graph(3), 2, WeightMap::unit(3)), std::invalid_argument);
        CHECK_THROWS_AS(exact_cover_number(complete_graph(21), 2, WeightMap::unit(2)), SizeLimitExceeded);
        CHECK_THROWS_AS(exact_packing_number(complete_graph(21), 2, WeightMap::unit(2)), SizeLimitExceeded);
        CHECK(exact_cover_number(complete_graph(21), 2, WeightMap::unit(2), Limits::unsafe()).cost == 1);
    }

    TEST_CASE("exact cover and packing agree with brute force, weak duality holds")
    {
        Lcg rng{41};
        for (int trial = 0; trial < 250; ++trial) {
            const int n = 1 + static_cast<int>(rng.next() % 6);
            const Graph g = random_gnp(n, 0.3 + 0.1 * (trial % 6), rng.next());
            const int t = 1 + static_cast<int>(rng.next() % 3);
            std::vector<std::int64_t> values;
            for (int i = 0; i < 5; ++i) {
                values.push_back(static_cast<std::int64_t>(rng.next() % 3));
            }
            const WeightMap w = trial % 3 == 0 ? WeightMap::unit(t) : weights_from(g, t, values);
            auto wm = [&](oracle::Mask m) { return w(oracle::clique_of(m)); };
            const auto cover = exact_cover_number(g, t, w);
            const auto pack = exact_packing_number(g, t, w);
            CHECK(cover.cost == oracle::min_cover(g, t, wm));
            CHECK(pack.value == oracle::max_packing(g, t, wm));
            CHECK(pack.value <= cover.cost);
            CHECK(cover.cover.cost() == cover.cost);
            CHECK(is_cover_feasible(g, t, w, cover.cover));
            CHECK(is_packing_feasible(g, t, pack.packing));
            CHECK(pack.packing.value(w) == pack.value);
        }
    }

    TEST_CASE("feasibility checkers")
    {
        CHECK(is_cover_feasible(complete_graph(4), 3, WeightMap::zero(3), CoverSolution{}));
        CoverSolution k4;
        k4.add(Clique({0, 1, 2, 3}));
        CHECK(is_cover_feasible(complete_graph(4), 3, WeightMap::unit(3), k4));
        CHECK_FALSE(is_cover_feasible(complete_graph(4), 3, WeightMap::unit(3), CoverSolution{}));

        PackingSolution two;
        two.select(Clique({0, 1}));
        two.select(Clique({1, 2}));
        CHECK_FALSE(is_packing_feasible(complete_graph(3), 2, two));

        CoverSolution foreign;
        foreign.add(Clique({0, 2}));
        const auto report = check_cover(path_graph(3), 1, WeightMap::zero(1), foreign);
        CHECK_FALSE(report.ok);
        CHECK_FALSE(report.problems.empty());

        PackingSolution not_clique;
        not_clique.select(Clique({0, 2}));
        CHECK_FALSE(is_packing_feasible(path_graph(3), 2, not_clique));

        CoverSolution f;
        CHECK_THROWS_AS(f.add(Clique({0}), -1), std::invalid_argument);
        f.add(Clique({0}), 0);
        CHECK(f.distinct() == 0);
    }

    TEST_CASE("conjecture holds on small orders")
    {
        for (int n = 1; n <= 5; ++n) {
            for (int t = 1; t <= 3; ++t) {
                if (n == 1 || n >= t) {
                    CHECK(verify_conjecture(n, t).empty());
                }
            }
        }
        // Below t every graph has no K_t, so the edgeless graph ties K_n.
        const auto degenerate = verify_conjecture(2, 3);
        REQUIRE(degenerate.size() == 1);
        CHECK(degenerate[0].graph.edge_count() == 0);
        CHECK_THROWS_AS(verify_conjecture(8, 2), SizeLimitExceeded);
    }
}
