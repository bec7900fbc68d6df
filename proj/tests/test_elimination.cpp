#include <doctest.h>

#include "ktcover/elimination.hpp"
#include "oracles.hpp"

using namespace ktcover;

namespace {

Graph disjoint_k3_k2()
{
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    return g;
}

} // namespace

TEST_SUITE("elimination")
{
    TEST_CASE("cluster graphs")
    {
        CHECK(is_cluster(disjoint_k3_k2()));
        CHECK_FALSE(is_cluster(path_graph(3)));
        CHECK(is_cluster(Graph(4)));
        CHECK(is_cluster(Graph(0)));
        VertexSet ends(3);
        ends.set(0);
        ends.set(2);
        CHECK(is_cluster_within(path_graph(3), ends));
    }

    TEST_CASE("P3 ordering examples")
    {
        const auto c5 = find_p3_elimination(cycle_graph(5));
        REQUIRE(c5.has_value());
        CHECK(verify_p3_ordering(cycle_graph(5), c5->order));
        CHECK(c5->family == OrderingFamily::p3);
        CHECK_FALSE(find_p3_elimination(wheel_graph(5)).has_value());
        CHECK(verify_p3_ordering(complete_graph(5), {4, 2, 0, 1, 3}));
        CHECK(verify_p3_ordering(cycle_graph(4), {0, 1, 2, 3}));
        auto w5 = oracle::identity(6);
        do {
            CHECK_FALSE(verify_p3_ordering(wheel_graph(5), w5));
        } while (std::next_permutation(w5.begin(), w5.end()));
        for (int n = 4; n <= 12; ++n) {
            CHECK(is_semichordal(cycle_graph(n)));
        }
    }

    TEST_CASE("orderings must be permutations")
    {
        CHECK_THROWS_AS(later_neighborhoods(path_graph(3), {0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(later_neighborhoods(path_graph(3), {0, 1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(verify_p3_ordering(path_graph(3), {0, 1, 1}), std::invalid_argument);
    }

    TEST_CASE("recognition agrees with all-orderings search on n <= 6")
    {
        for (int n = 1; n <= 6; ++n) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); m += (n == 6 ? 7 : 1)) {
                const Graph g = graph_from_mask(n, m);
                P3SearchStats stats;
                const auto found = find_p3_elimination(g, &stats);
                // The property is hereditary, so a yes-instance never needs a retry.
                if (found) {
                    CHECK(stats.backtracks == 0);
                }
                CHECK(found.has_value() == oracle::has_p3_ordering(g));
                if (found) {
                    CHECK(verify_p3_ordering(g, found->order));
                }
                const auto chordal = is_chordal(g);
                CHECK(chordal.chordal == oracle::has_simplicial_ordering(g));
                if (chordal.chordal) {
                    REQUIRE(chordal.ordering.has_value());
                    CHECK(verify_simplicial_ordering(g, chordal.ordering->order));
                    CHECK(found.has_value());
                }
            }
        }
    }

    TEST_CASE("chordality examples")
    {
        CHECK_FALSE(is_chordal(cycle_graph(4)).chordal);
        CHECK(is_chordal(complete_graph(4)).chordal);
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph g = random_chordal(12, 0.7, seed);
            CHECK(is_chordal(g).chordal);
            CHECK(is_semichordal(g));
        }
    }

    TEST_CASE("3-wheels")
    {
        CHECK(contains_induced_3wheel(wheel_graph(5)));
        CHECK(contains_induced_3wheel(wheel_graph(4)));
        CHECK(contains_induced_3wheel(complete_graph(4)));
        CHECK_FALSE(contains_induced_3wheel(cycle_graph(6)));
        CHECK(contains_induced_3wheel(turan_graph(6, 3)));
        CHECK_FALSE(contains_induced_3wheel(turan_graph(6, 2)));
        CHECK_THROWS(contains_induced_3wheel(complete_graph(kWheelSearchLimit + 1)));
    }

    TEST_CASE("3-wheel-free graphs are semichordal")
    {
        int tested = 0;
        for (std::uint64_t seed = 0; tested < 150 && seed < 5000; ++seed) {
            const Graph g = random_gnp(4 + static_cast<int>(seed % 7), 0.35, seed);
            if (!contains_induced_3wheel(g)) {
                ++tested;
                CHECK(is_semichordal(g));
            }
        }
        CHECK(tested == 150);
    }

    TEST_CASE("3-wheel detection agrees with a subset search")
    {
        // A 3-wheel: an induced cycle (the rim, length >= 3) plus a center off
        // the rim adjacent to three consecutive rim vertices. Search every
        // center and rim subset directly on n <= 6.
        auto brute = [](const Graph& g) {
            const auto adj = oracle::adjacency(g);
            for (int c = 0; c < g.order(); ++c) {
                for (oracle::Mask rim = 1; rim < (oracle::Mask{1} << g.order()); ++rim) {
                    if ((rim >> c & 1) || oracle::popcount(rim) < 3) {
                        continue;
                    }
                    bool two_regular = true;
                    for (int v = 0; v < g.order() && two_regular; ++v) {
                        if (rim >> v & 1) {
                            two_regular = oracle::popcount(adj[v] & rim) == 2;
                        }
                    }
                    if (!two_regular) {
                        continue;
                    }
                    // Connected 2-regular means a single cycle.
                    oracle::Mask seen = rim & (~rim + 1);
                    for (int step = 0; step < g.order(); ++step) {
                        oracle::Mask grow = seen;
                        for (int v = 0; v < g.order(); ++v) {
                            if (seen >> v & 1) {
                                grow |= adj[v] & rim;
                            }
                        }
                        seen = grow;
                    }
                    if (seen != rim) {
                        continue;
                    }
                    for (int y = 0; y < g.order(); ++y) {
                        const oracle::Mask around = adj[y] & rim;
                        if ((rim >> y & 1) && (adj[c] >> y & 1) && (around & ~adj[c]) == 0) {
                            return true;
                        }
                    }
                }
            }
            return false;
        };
        for (int n = 1; n <= 6; ++n) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); m += (n == 6 ? 5 : 1)) {
                const Graph g = graph_from_mask(n, m);
                CHECK(contains_induced_3wheel(g) == brute(g));
            }
        }
    }
}
