#include <doctest.h>

#include "ktcover/bounds.hpp"
#include "oracles.hpp"

using namespace ktcover;
using namespace ktcover::bounds;

TEST_SUITE("bounds")
{
    TEST_CASE("lovasz_bound")
    {
        for (int n = 1; n <= 10; ++n) {
            CHECK(lovasz_bound(n, binomial(n, 2)) == 1);
        }
        CHECK(lovasz_bound(12, 54) == 16);
        CHECK(lovasz_bound(4, 0) == 9);
        CHECK_THROWS_AS(lovasz_bound(4, 7), std::invalid_argument);
        CHECK_THROWS_AS(lovasz_bound(4, -1), std::invalid_argument);
        // t is the largest integer with t(t-1) <= k.
        for (std::int64_t n = 2; n <= 15; ++n) {
            for (std::int64_t m = 0; m <= binomial(n, 2); ++m) {
                const std::int64_t k = binomial(n, 2) - m;
                const std::int64_t t = lovasz_bound(n, m) - k;
                CHECK(t * (t - 1) <= k);
                CHECK((t + 1) * t > k);
            }
        }
    }

    TEST_CASE("mindeg bounds")
    {
        CHECK(mindeg_bound(12, 9) == 15);
        for (int n = 1; n <= 10; ++n) {
            CHECK(mindeg_bound(n, n - 1) == 1);
        }
        CHECK(mindeg_bound(8, 4) == 16);
        CHECK(mindeg_bound(8, 4) == egp_bound(8));
        CHECK_THROWS_AS(mindeg_bound(5, 5), std::invalid_argument);
        CHECK(mindeg_bound_plus(9, 5) == 16);
        CHECK(mindeg_bound_plus(8, 5) == 10);
        CHECK(mindeg_bound_plus(3, 2) == 1);
        CHECK_FALSE(mindeg_bound_plus(8, 4).has_value());
        CHECK_FALSE(mindeg_bound_plus(9, 6).has_value());
        // Exact values of n^2/4 - n/2 + 1/4 and n^2/4 - n + 2.
        for (std::int64_t n = 3; n <= 41; n += 2) {
            CHECK(4 * *mindeg_bound_plus(n, (n + 1) / 2) == n * n - 2 * n + 1);
        }
        for (std::int64_t n = 4; n <= 40; n += 2) {
            CHECK(4 * *mindeg_bound_plus(n, n / 2 + 1) == n * n - 4 * n + 8);
        }
    }

    TEST_CASE("egp_bound")
    {
        CHECK(egp_bound(4) == 4);
        CHECK(egp_bound(5) == 6);
        CHECK(egp_bound(1) == 0);
        for (int n = 1; n <= 20; ++n) {
            CHECK(egp_bound(n) == static_cast<std::int64_t>(turan_graph(n, 2).edge_count()));
        }
    }

    TEST_CASE("k3_turan3 and its difference")
    {
        CHECK(k3_turan3(6) == 8);
        CHECK(k3_turan3(5) == 4);
        CHECK(k3_turan3(4) == 2);
        CHECK(k3_turan3_diff(6) == 4);
        CHECK(k3_turan3_diff(9) == 9);
        CHECK(k3_turan3_diff(3) == 1);
        CHECK_THROWS_AS(k3_turan3_diff(2), std::invalid_argument);
        for (int n = 1; n <= 30; ++n) {
            const auto sizes = turan_part_sizes(n, 3);
            CHECK(k3_turan3(n) == static_cast<std::int64_t>(sizes[0]) * sizes[1] * sizes[2]);
            CHECK(k3_turan3(n) == static_cast<std::int64_t>(count_kt(turan_graph(n, 3), 3)));
            if (n >= 3) {
                CHECK(k3_turan3_diff(n) == k3_turan3(n) - k3_turan3(n - 1));
            }
        }
    }

    TEST_CASE("kt_turan")
    {
        CHECK(kt_turan(6, 3) == 8);
        CHECK(kt_turan(4, 2) == 4);
        for (int n = 1; n <= 12; ++n) {
            CHECK(kt_turan(n, 1) == n);
            for (int t = 1; t <= 4; ++t) {
                CHECK(kt_turan(n, t) == static_cast<std::int64_t>(oracle::t_cliques(turan_graph(n, t), t).size()));
            }
        }
        CHECK(kt_turan(8, 4) == 16);
    }

    TEST_CASE("turan_hyper_lower")
    {
        CHECK(turan_hyper_lower(6) == 14);
        CHECK(turan_hyper_lower(7) == 23);
        CHECK(turan_hyper_lower(8) == static_cast<std::int64_t>(turan_hypergraph(8).hyperedges.size()));
        CHECK(turan_hyper_lower(8) == 36);
        for (int n = 3; n <= 21; ++n) {
            CHECK(turan_hyper_lower(n) == oracle::hyper_count(n / 3, (n + 1) / 3, (n + 2) / 3));
        }
    }

    TEST_CASE("naive K4 counting threshold is 26, not 18")
    {
        CHECK(remark5_counting_threshold() == 26);
        CHECK_FALSE(counting_rules_out_k4_cover(18));
        CHECK(counting_rules_out_k4_cover(26));
        for (int n = 1; n < 26; ++n) {
            CHECK(4 * k3_turan3(n) >= binomial(n, 3));
        }
    }
}
