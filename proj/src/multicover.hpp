#pragma once

// Exact search engines behind the clique-engine oracles. They know nothing
// about graphs: covers are weighted set multicover instances, packings are
// maximum weight independent set instances.

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ktcover::detail {

using Bits = boost::dynamic_bitset<>;

struct MulticoverInstance {
    /// Positive demand per element.
    std::vector<std::int64_t> demand;
    /// For each set, the elements it covers.
    std::vector<Bits> sets;
    /// Optional element groups used for a stronger lower bound. The sets
    /// covering elements of one group must be disjoint from the sets covering
    /// elements of any other group; the engine checks this and drops the
    /// groups if it does not hold.
    std::vector<std::vector<int>> groups;
};

struct MulticoverSolution {
    std::int64_t cost = 0;
    std::vector<std::int64_t> multiplicity;
    std::uint64_t nodes = 0;
};

/// Minimum total multiplicity such that every element e lies in at least
/// demand[e] chosen set copies. Every element must lie in some set.
MulticoverSolution solve_multicover(const MulticoverInstance& instance);

struct IndependentSetInstance {
    std::vector<std::int64_t> weight;
    /// Symmetric, irreflexive conflict relation.
    std::vector<Bits> conflicts;
    /// A cover of the elements by conflict cliques, used for the upper bound.
    std::vector<Bits> cliques;
};

struct IndependentSetSolution {
    std::int64_t value = 0;
    Bits chosen;
};

IndependentSetSolution solve_independent_set(const IndependentSetInstance& instance);

} // namespace ktcover::detail
