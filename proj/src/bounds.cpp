#include "ktcover/bounds.hpp"

#include <stdexcept>
#include <string>

#include "ktcover/graph.hpp"

namespace ktcover::bounds {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::int64_t lovasz_bound(std::int64_t n, std::int64_t m)
{
    if (n < 0 || m < 0 || m > binomial(n, 2)) {
        throw std::invalid_argument("lovasz_bound: edge count " + std::to_string(m) +
                                    " out of range for n = " + std::to_string(n));
    }
    const std::int64_t k = binomial(n, 2) - m;
    std::int64_t t = 1;
    while ((t + 1) * t <= k) {
        ++t;
    }
    return k + t;
}

std::int64_t mindeg_bound(std::int64_t n, std::int64_t delta)
{
    if (n < 1 || delta < 0 || delta > n - 1) {
        throw std::invalid_argument("mindeg_bound: need 0 <= delta <= n - 1");
    }
    return (n - delta) + n * (n - delta - 1) / 2;
}

std::optional<std::int64_t> mindeg_bound_plus(std::int64_t n, std::int64_t delta)
{
    // Scaled by 4 to stay in integers.
    if (n % 2 == 1 && 2 * delta == n + 1) {
        return (n * n - 2 * n + 1) / 4;
    }
    if (n % 2 == 0 && 2 * delta == n + 2) {
        return (n * n - 4 * n + 8) / 4;
    }
    return std::nullopt;
}

std::int64_t egp_bound(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("egp_bound: n must be nonnegative");
    }
    return n * n / 4;
}

std::int64_t k3_turan3(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("k3_turan3: n must be nonnegative");
    }
    switch (n % 3) {
    case 0:
        return n * n * n / 27;
    case 1:
        return (n - 1) * (n - 1) * (n - 1) / 27 + (n - 1) * (n - 1) / 9;
    default:
        return (n + 1) * (n + 1) * (n + 1) / 27 - (n + 1) * (n + 1) / 9;
    }
}

std::int64_t k3_turan3_diff(std::int64_t n)
{
    if (n < 3) {
        throw std::invalid_argument("k3_turan3_diff requires n >= 3");
    }
    const std::int64_t a = 2 * n / 3;
    return a * a / 4;
}

std::int64_t kt_turan(std::int64_t n, std::int64_t t)
{
    if (n < 1 || t < 1) {
        throw std::invalid_argument("kt_turan requires n >= 1 and t >= 1");
    }
    if (t == 1) {
        return n;
    }
    std::int64_t product = 1;
    for (int size : turan_part_sizes(static_cast<int>(n), static_cast<int>(t))) {
        product *= size;
    }
    return product;
}

std::int64_t turan_hyper_lower(std::int64_t n)
{
    if (n < 3) {
        throw std::invalid_argument("turan_hyper_lower requires n >= 3");
    }
    const std::int64_t m = n / 3;
    switch (n % 3) {
    case 0:
        return m * m * (5 * m - 3) / 2;
    case 1:
        return m * (5 * m * m + 2 * m - 1) / 2;
    default:
        // The printed closed form for this residue is garbled; count the
        // construction instead.
        return static_cast<std::int64_t>(turan_hypergraph(static_cast<int>(n)).hyperedges.size());
    }
}

bool counting_rules_out_k4_cover(std::int64_t n) { return 4 * k3_turan3(n) < binomial(n, 3); }

std::int64_t remark5_counting_threshold()
{
    for (std::int64_t n = 1;; ++n) {
        if (counting_rules_out_k4_cover(n)) {
            return n;
        }
    }
}

} // namespace ktcover::bounds
