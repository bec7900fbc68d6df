#pragma once

#include <cstdint>
#include <random>

namespace ktcover::detail {

// std::mt19937_64 output is specified by the standard; the distributions are
// not, so draws are derived from raw output here to keep generated graphs
// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

} // namespace ktcover::detail
