#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktcover/bounds.hpp"
#include "ktcover/clique.hpp"
#include "ktcover/elimination.hpp"
#include "ktcover/errors.hpp"
#include "ktcover/graph.hpp"
#include "ktcover/greedy_covers.hpp"
#include "ktcover/io.hpp"
#include "ktcover/optpair.hpp"
#include "ktcover/reduction.hpp"
#include "ktcover/verify.hpp"

namespace ktcover::cli {
namespace {

using nlohmann::json;

// Thrown for results that do not exist (no ordering, infeasible input).
struct NoResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an emitted object fails its own feasibility check.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path)
{
    if (path.empty() || path == "-") {
        return io::read_edge_list(std::cin);
    }
    return io::read_edge_list_file(path);
}

WeightMap load_weights(const RunConfig& c)
{
    if (!c.weights) {
        return WeightMap::unit(c.t);
    }
    WeightMap w = io::read_weights_file(*c.weights);
    if (w.t() != c.t) {
        throw std::invalid_argument("weight file is for t = " + std::to_string(w.t()) + ", expected " +
                                    std::to_string(c.t));
    }
    return w;
}

Limits limits_of(const RunConfig& c) { return c.unsafe_limits ? Limits::unsafe() : Limits{}; }

Subsolver subsolver_of(const RunConfig& c)
{
    if (c.subsolver == "exact") {
        return Subsolver::exact;
    }
    if (c.subsolver == "greedy") {
        return Subsolver::greedy;
    }
    throw std::invalid_argument("unknown subsolver '" + c.subsolver + "'");
}

void require_t(const RunConfig& c, int min)
{
    if (c.t < min) {
        throw std::invalid_argument("--t must be at least " + std::to_string(min));
    }
}

void checked_cover(const Graph& g, int t, const WeightMap& w, const CoverSolution& f)
{
    if (auto report = check_cover(g, t, w, f); !report) {
        throw CheckFailed("emitted cover is infeasible: " + report.problems.front());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::uint64_t seed_of(const RunConfig& c)
{
    if (!c.seed) {
        throw std::invalid_argument("generator '" + c.target + "' needs --seed");
    }
    return *c.seed;
}

int cmd_gen(const RunConfig& c, std::ostream& out)
{
    std::ofstream file;
    std::ostream* dest = &out;
    if (c.output) {
        file.open(*c.output);
        if (!file) {
            throw std::invalid_argument("cannot write '" + *c.output + "'");
        }
        dest = &file;
    }
    if (c.target == "hyperturan") {
        io::write_hypergraph(*dest, turan_hypergraph(c.n));
        return kOk;
    }
    Graph g;
    if (c.target == "turan") {
        g = turan_graph(c.n, c.k_parts);
    } else if (c.target == "cycle") {
        g = cycle_graph(c.n);
    } else if (c.target == "complete") {
        g = complete_graph(c.n);
    } else if (c.target == "path") {
        g = path_graph(c.n);
    } else if (c.target == "wheel") {
        g = wheel_graph(c.n);
    } else if (c.target == "gnp") {
        g = random_gnp(c.n, c.p, seed_of(c));
    } else if (c.target == "chordal") {
        g = random_chordal(c.n, c.p, seed_of(c));
    } else {
        throw std::invalid_argument("unknown generator '" + c.target + "'");
    }
    io::write_edge_list(*dest, g);
    return kOk;
}

std::optional<EliminationOrdering> ordering_for(const RunConfig& c, const Graph& g)
{
    if (!c.ordering) {
        return find_p3_elimination(g);
    }
    std::ifstream in(*c.ordering);
    if (!in) {
        throw ParseError("cannot open '" + *c.ordering + "'", 0);
    }
    EliminationOrdering o{io::read_ordering(in), OrderingFamily::p3};
    if (!verify_p3_ordering(g, o.order)) {
        throw std::invalid_argument("supplied ordering is not a P3-elimination ordering");
    }
    return o;
}

int cmd_cover(const RunConfig& c, std::ostream& out)
{
    const Graph g = load_graph(c.input);
    const std::string& alg = c.algorithm;
    if (alg == "optpair") {
        require_t(c, 2);
        const WeightMap w = load_weights(c);
        const auto ordering = ordering_for(c, g);
        if (!ordering) {
            throw NoResult("no P3-elimination ordering");
        }
        const auto r = optpair(g, c.t, w, *ordering);
        if (auto cert = certify(r, g, c.t, w); !cert) {
            throw CheckFailed("certificate rejected: " + cert.problems.front());
        }
        json j = io::optpair_to_json(r, !c.quiet);
        j["ordering"] = ordering->order;
        emit(out, j);
        return kOk;
    }
    if (alg == "exact") {
        require_t(c, 1);
        const WeightMap w = load_weights(c);
        const auto r = exact_cover_number(g, c.t, w, limits_of(c));
        checked_cover(g, c.t, w, r.cover);
        emit(out, io::cover_to_json(r.cover));
        return kOk;
    }
    if (alg == "greedy-egp") {
        const auto r = greedy_lovasz_edge_cover(g);
        checked_cover(g, 2, WeightMap::unit(2), r.cover);
        json j = io::cover_to_json(r.cover);
        json layers = json::array();
        for (const auto& a : r.trace.layers) {
            layers.push_back(a.vertices());
        }
        j["ledger"] = {{"p", r.trace.p()},
                       {"layers", std::move(layers)},
                       {"bound", r.trace.ledger()},
                       {"lovasz_bound", bounds::lovasz_bound(g.order(), static_cast<std::int64_t>(g.edge_count()))}};
        emit(out, j);
        return kOk;
    }
    if (alg == "recursive-k3" || alg == "recursive-kt") {
        const int t = alg == "recursive-k3" ? 3 : c.t;
        if (alg == "recursive-kt") {
            require_t(c, 2);
        }
        const auto cover = recursive_kt_cover(g, t, subsolver_of(c), limits_of(c));
        checked_cover(g, t, WeightMap::unit(t), cover);
        json j = io::cover_to_json(cover);
        json ledger = {{"t", t},
                       {"subsolver", c.subsolver},
                       {"size", cover.cost()},
                       {"kt_count", count_kt(g, t)}};
        if (g.order() >= 1) {
            ledger["kt_turan"] = bounds::kt_turan(g.order(), t);
        }
        if (t == 3) {
            ledger["k3_turan3"] = bounds::k3_turan3(g.order());
        }
        j["ledger"] = std::move(ledger);
        emit(out, j);
        return kOk;
    }
    throw std::invalid_argument("unknown cover algorithm '" + alg + "'");
}

int cmd_pack(const RunConfig& c, std::ostream& out)
{
    if (c.algorithm != "exact") {
        throw std::invalid_argument("unknown packing algorithm '" + c.algorithm + "'");
    }
    require_t(c, 1);
    const Graph g = load_graph(c.input);
    const WeightMap w = load_weights(c);
    const auto r = exact_packing_number(g, c.t, w, limits_of(c));
    if (auto report = check_packing(g, c.t, r.packing); !report) {
        throw CheckFailed("emitted packing is infeasible: " + report.problems.front());
    }
    emit(out, io::packing_to_json(r.packing, w));
    return kOk;
}

int cmd_order(const RunConfig& c, std::ostream& out)
{
    const Graph g = load_graph(c.input);
    std::optional<std::vector<Vertex>> order;
    if (c.family == "p3") {
        if (auto o = find_p3_elimination(g)) {
            order = o->order;
        }
    } else if (c.family == "simplicial") {
        if (auto r = is_chordal(g); r.chordal) {
            order = r.ordering->order;
        }
    } else {
        throw std::invalid_argument("unknown ordering family '" + c.family + "'");
    }
    if (!order) {
        out << "NONE\n";
        return kNone;
    }
    io::write_ordering(out, *order);
    return kOk;
}

std::string or_dash(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_bounds(const RunConfig& c, std::ostream& out)
{
    if (c.n < 1) {
        throw std::invalid_argument("--n must be at least 1");
    }
    const int from = c.n_min > 0 ? c.n_min : 1;
    if (from > c.n) {
        throw std::invalid_argument("--from exceeds --n");
    }
    json rows = json::array();
    json degrees = json::array();
    for (int n = from; n <= c.n; ++n) {
        std::optional<std::int64_t> diff;
        if (n >= 3) {
            diff = bounds::k3_turan3_diff(n);
        }
        rows.push_back({{"n", n},
                        {"egp", bounds::egp_bound(n)},
                        {"k3_turan3", bounds::k3_turan3(n)},
                        {"diff", diff ? json(*diff) : json(nullptr)},
                        {"lovasz", bounds::lovasz_bound(n, 0)},
                        {"remark5", bounds::counting_rules_out_k4_cover(n)}});
    }
    const std::int64_t n = c.n;
    for (std::int64_t delta = 0; delta < n; ++delta) {
        const std::int64_t m_min = (n * delta + 1) / 2;
        const auto plus = bounds::mindeg_bound_plus(n, delta);
        degrees.push_back({{"delta", delta},
                           {"m_min", m_min},
                           {"lovasz", bounds::lovasz_bound(n, m_min)},
                           {"mindeg", bounds::mindeg_bound(n, delta)},
                           {"mindeg_plus", plus ? json(*plus) : json(nullptr)}});
    }
    if (c.format == Format::json) {
        emit(out, {{"table", rows}, {"min_degree", degrees}});
        return kOk;
    }
    out << "n\tegp\tk3_turan3\tdiff\tlovasz\tremark5\n";
    for (const auto& r : rows) {
        out << r["n"] << '\t' << r["egp"] << '\t' << r["k3_turan3"] << '\t'
            << (r["diff"].is_null() ? std::string("-") : r["diff"].dump()) << '\t' << r["lovasz"] << '\t'
            << (r["remark5"].get<bool>() ? 1 : 0) << '\n';
    }
    out << "\ndelta\tm_min\tlovasz\tmindeg\tmindeg_plus\n";
    for (std::int64_t delta = 0; delta < n; ++delta) {
        const auto& r = degrees[static_cast<std::size_t>(delta)];
        out << delta << '\t' << r["m_min"] << '\t' << r["lovasz"] << '\t' << r["mindeg"] << '\t'
            << or_dash(bounds::mindeg_bound_plus(n, delta)) << '\n';
    }
    return kOk;
}

int cmd_reduce(const RunConfig& c, std::ostream& out)
{
    require_t(c, 2);
    const Graph g = load_graph(c.input);
    const Gadget gadget = build_gadget(g, c.t);
    json side = {{"t", c.t},
                 {"n", g.order()},
                 {"s", gadget.s},
                 {"e", gadget.e},
                 {"new_vertices", {g.order(), g.order() + gadget.s - 1}},
                 {"budget", "k' = s*k + e"}};
    if (c.budget) {
        side["k"] = *c.budget;
        side["k_prime"] = gadget.budget(*c.budget);
    }
    io::write_edge_list(out, gadget.augmented);
    if (c.sidecar) {
        std::ofstream file(*c.sidecar);
        if (!file) {
            throw std::invalid_argument("cannot write '" + *c.sidecar + "'");
        }
        file << side.dump(2) << '\n';
    } else {
        out << "# " << side.dump() << '\n';
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    verify::SuiteOptions opts;
    opts.n = c.n;
    opts.samples = c.samples;
    opts.seed = c.seed.value_or(1);
    opts.threads = c.threads;
    opts.unsafe_limits = c.unsafe_limits;
    const auto report = verify::run_suite(c.target, opts);
    if (c.format == Format::human) {
        out << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << '\n';
        for (const auto& crit : report.criteria) {
            out << "  [" << (crit.pass ? "PASS" : "FAIL") << "] " << crit.name << " (" << crit.checked
                << " checked, " << crit.violations << " violations)\n";
            for (const auto& d : crit.details) {
                out << "      " << d << '\n';
            }
        }
    } else {
        emit(out, report.to_json(c.timings));
    }
    return report.pass() ? kOk : kCheckFailed;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.command == "gen") {
            return cmd_gen(config, out);
        }
        if (config.command == "cover") {
            return cmd_cover(config, out);
        }
        if (config.command == "pack") {
            return cmd_pack(config, out);
        }
        if (config.command == "order") {
            return cmd_order(config, out);
        }
        if (config.command == "bounds") {
            return cmd_bounds(config, out);
        }
        if (config.command == "reduce") {
            return cmd_reduce(config, out);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out);
        }
        err << "unknown command '" << config.command << "'\n";
        return kBadInput;
    } catch (const NoResult& e) {
        out << "NONE: " << e.what() << '\n';
        return kNone;
    } catch (const SizeLimitExceeded& e) {
        err << "size guard: " << e.what() << " (use --unsafe-limits to override)\n";
        return kSizeGuard;
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0) {
            err << " at line " << e.line();
        }
        err << ": " << e.what() << '\n';
        return kBadInput;
    } catch (const CheckFailed& e) {
        err << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kBadInput;
    } catch (const nlohmann::json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return kBadInput;
    }
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"K_t clique cover toolkit", "ktcover"};
    app.require_subcommand(1);
    std::string bounds_format = "tsv";
    std::string verify_format = "json";
    std::uint64_t seed = 0;

    auto add_limits = [&](CLI::App* sub) {
        sub->add_flag("--unsafe-limits", c.unsafe_limits, "Lift the size guards of the exact oracles");
    };

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("kind", c.target, "turan|cycle|complete|path|wheel|gnp|chordal|hyperturan")->required();
    gen->add_option("--n", c.n, "Order")->required();
    gen->add_option("--k", c.k_parts, "Parts (turan)");
    gen->add_option("--p", c.p, "Edge probability (gnp) or density (chordal)");
    auto* gen_seed = gen->add_option("--seed", seed, "Seed for randomized generators");
    gen->add_option("--out", c.output, "Write to a file instead of stdout");

    auto* cover = app.add_subcommand("cover", "Compute a clique cover");
    cover->add_option("input", c.input, "Edge-list file, - for stdin")->required();
    cover->add_option("--alg", c.algorithm, "optpair|greedy-egp|recursive-k3|recursive-kt|exact")->required();
    cover->add_option("--t", c.t, "Clique size");
    cover->add_option("--weights", c.weights, "Weight file");
    cover->add_option("--order", c.ordering, "Elimination ordering file");
    cover->add_option("--subsolver", c.subsolver, "exact|greedy");
    cover->add_flag("--quiet", c.quiet, "Omit the optpair trace");
    add_limits(cover);

    auto* pack = app.add_subcommand("pack", "Compute a maximum packing");
    pack->add_option("input", c.input, "Edge-list file, - for stdin")->required();
    pack->add_option("--alg", c.algorithm, "exact")->default_val("exact");
    pack->add_option("--t", c.t, "Clique size")->required();
    pack->add_option("--weights", c.weights, "Weight file");
    add_limits(pack);

    auto* order = app.add_subcommand("order", "Find an elimination ordering");
    order->add_option("input", c.input, "Edge-list file, - for stdin")->required();
    order->add_option("--family", c.family, "p3|simplicial");

    auto* bnd = app.add_subcommand("bounds", "Print bound tables");
    bnd->add_option("--n", c.n, "Largest n")->required();
    bnd->add_option("--from", c.n_min, "Smallest n of the first table");
    bnd->add_option("--format", bounds_format, "tsv|json");

    auto* reduce = app.add_subcommand("reduce", "Build the hardness gadget");
    reduce->add_option("input", c.input, "Edge-list file, - for stdin")->required();
    reduce->add_option("--t", c.t, "Clique size of the target problem")->required();
    reduce->add_option("--k", c.budget, "Budget of the source instance");
    reduce->add_option("--sidecar", c.sidecar, "Write the JSON sidecar to a file");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", c.target, "Suite name")->required();
    ver->add_option("--n", c.n, "Largest order");
    ver->add_option("--samples", c.samples, "Sample size");
    auto* ver_seed = ver->add_option("--seed", seed, "Seed");
    ver->add_option("--threads", c.threads, "Worker threads (default KTCOVER_THREADS or 1)");
    ver->add_option("--format", verify_format, "json|human");
    ver->add_flag("--timings", c.timings, "Include timings in the report");
    add_limits(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadInput;
    }

    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
    }
    if (gen_seed->count() > 0 || ver_seed->count() > 0) {
        c.seed = seed;
    }
    const std::string& format = c.command == "bounds" ? bounds_format : verify_format;
    if (format == "json") {
        c.format = Format::json;
    } else if (format == "tsv") {
        c.format = Format::tsv;
    } else if (format == "human") {
        c.format = Format::human;
    } else {
        err << "unknown format '" << format << "'\n";
        return kBadInput;
    }
    return run(c, out, err);
}

} // namespace ktcover::cli
