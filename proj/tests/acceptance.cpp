// Runs every acceptance criterion at full size and prints one line each.

#include <cstdio>
#include <string>
#include <vector>

#include "ktcover/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* suite;
    const char* title;
    double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "duality", "strong duality on semichordal instances", 120},
    {2, "theorem8", "triangle cover bound on all graphs with n = 6", 300},
    {3, "egp", "edge clique cover bound for n = 4, 5", 10},
    {4, "formulas", "Turan count formulas", 10},
    {5, "lovasz", "greedy and min-degree edge cover bounds", 120},
    {6, "reduction", "gadget biconditional for n <= 5", 300},
    {7, "semichordal", "P3-elimination recognition", 300},
    {8, "hypergraph", "Turan 3-graph edge counts", 10},
    {9, "remark5", "naive K4 counting threshold", 10},
};

} // namespace

int main()
{
    ktcover::verify::SuiteOptions opts;
    opts.threads = ktcover::verify::env_threads();
    int failed = 0;
    for (const auto& c : kCriteria) {
        const auto report = ktcover::verify::run_suite(c.suite, opts);
        std::int64_t checked = 0;
        std::int64_t violations = 0;
        for (const auto& r : report.criteria) {
            checked += r.checked;
            violations += r.violations;
        }
        const bool in_time = report.seconds <= c.budget_seconds;
        const bool pass = report.pass() && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s criterion %d [%s] %s: checked=%lld violations=%lld time=%.2fs budget=%.0fs\n",
                    pass ? "PASS" : "FAIL", c.id, c.suite, c.title, static_cast<long long>(checked),
                    static_cast<long long>(violations), report.seconds, c.budget_seconds);
        if (!report.pass()) {
            for (const auto& r : report.criteria) {
                for (const auto& d : r.details) {
                    std::printf("    %s: %s\n", r.name.c_str(), d.c_str());
                }
            }
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed == 0 ? 0 : 1;
}
