#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ktcover::verify {

struct SuiteOptions {
    /// Largest order examined; 0 picks the suite default.
    int n = 0;
    /// Sample size for randomized suites; 0 picks the suite default.
    int samples = 0;
    std::uint64_t seed = 1;
    /// Harness threads; 0 reads KTCOVER_THREADS (default 1).
    int threads = 0;
    bool unsafe_limits = false;
};

struct CriterionReport {
    std::string name;
    bool pass = true;
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    /// First few failures, then informational notes.
    std::vector<std::string> details;
    double seconds = 0;

    void fail(std::string why);
    void note(std::string what) { details.push_back(std::move(what)); }
};

struct SuiteReport {
    std::string suite;
    std::vector<CriterionReport> criteria;
    double seconds = 0;

    bool pass() const;
    nlohmann::json to_json(bool with_timings) const;
};

/// conjecture, theorem8, egp, duality, lovasz, reduction, semichordal,
/// hypergraph, formulas, remark5.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// KTCOVER_THREADS if set to a positive integer, else 1.
int env_threads();

/// Calls body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

} // namespace ktcover::verify
