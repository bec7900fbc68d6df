#pragma once

#include <cstdint>
#include <optional>

namespace ktcover::bounds {

/// Lovász: with k = C(n,2) - m missing edges and t the largest integer with
/// t^2 - t <= k, the edge clique cover number is at most k + t.
/// Requires 0 <= m <= C(n,2).
std::int64_t lovasz_bound(std::int64_t n, std::int64_t m);

/// (n - delta) + n(n - delta - 1)/2, rounded down when the second term is a
/// half-integer. Requires 0 <= delta <= n - 1.
std::int64_t mindeg_bound(std::int64_t n, std::int64_t delta);

/// The sharpened bound for minimum degree just above n/2:
/// n^2/4 - n/2 + 1/4 when delta = (n+1)/2 (n odd), n^2/4 - n + 2 when
/// delta = n/2 + 1 (n even), nullopt otherwise.
std::optional<std::int64_t> mindeg_bound_plus(std::int64_t n, std::int64_t delta);

/// floor(n^2 / 4).
std::int64_t egp_bound(std::int64_t n);

/// Number of triangles of T(n, 3), from the piecewise cubic.
std::int64_t k3_turan3(std::int64_t n);
/// floor(floor(2n/3)^2 / 4) = k3_turan3(n) - k3_turan3(n-1). Requires n >= 3.
std::int64_t k3_turan3_diff(std::int64_t n);

/// Number of t-cliques of T(n, t): the product of its t part sizes.
/// kt_turan(n, 1) = n.
std::int64_t kt_turan(std::int64_t n, std::int64_t t);

/// Hyperedge count of the three-part Turán hypergraph. Closed form
/// m^2(5m-3)/2 for n = 3m and m(5m^2+2m-1)/2 for n = 3m+1; for n = 3m+2 the
/// count is taken from the construction itself. Requires n >= 3.
std::int64_t turan_hyper_lower(std::int64_t n);

/// Whether 4 * k3_turan3(n) < C(n,3): k3_turan3(n) cliques of size at most 4
/// then cannot cover all triangles of K_n.
bool counting_rules_out_k4_cover(std::int64_t n);
/// Smallest n for which counting_rules_out_k4_cover holds.
std::int64_t remark5_counting_threshold();

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace ktcover::bounds
