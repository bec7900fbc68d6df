#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ktcover::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kBadInput = 2,
    kNone = 3,
    kSizeGuard = 4,
};

enum class Format { json, tsv, human };

struct RunConfig {
    std::string command;  ///< gen, cover, pack, order, bounds, reduce, verify
    std::string target;   ///< generator kind, verify suite
    std::string input;    ///< edge-list path, "-" for stdin
    std::string algorithm;
    std::string subsolver = "exact";
    std::string family = "p3";
    std::optional<std::string> weights;
    std::optional<std::string> ordering;
    std::optional<std::string> sidecar;
    std::optional<std::string> output;
    int t = 0;
    int n = 0;
    int n_min = 0;
    int k_parts = 0;
    double p = 0.5;
    std::optional<std::int64_t> budget;
    std::optional<std::uint64_t> seed;
    int samples = 0;
    int threads = 0;
    bool unsafe_limits = false;
    bool quiet = false;
    bool timings = false;
    Format format = Format::json;
};

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Usage errors exit with 2.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ktcover::cli
