#include "ktcover/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ktcover/errors.hpp"

namespace ktcover::io {
namespace {

// Yields (line number, tokens) for each non-blank, non-comment line.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') {
                continue;
            }
            tokens.clear();
            std::istringstream ss(line);
            for (std::string tok; ss >> tok;) {
                tokens.push_back(tok);
            }
            return true;
        }
        return false;
    }

    int line() const noexcept { return line_no_; }

    long long integer(const std::string& tok) const
    {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'", line_no_);
        }
        if (used != tok.size()) {
            throw ParseError("expected an integer, got '" + tok + "'", line_no_);
        }
        return v;
    }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
    }
    return in;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok.size() != 3 || tok[0] != "p") {
        throw ParseError("expected header 'p <n> <m>'", reader.line());
    }
    const long long n = reader.integer(tok[1]);
    const long long m = reader.integer(tok[2]);
    if (n < 0 || m < 0) {
        throw ParseError("negative size in header", reader.line());
    }
    Graph g(static_cast<int>(n));
    long long seen = 0;
    while (reader.next(tok)) {
        if (tok.size() != 2) {
            throw ParseError("expected '<u> <v>'", reader.line());
        }
        const long long u = reader.integer(tok[0]);
        const long long v = reader.integer(tok[1]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("vertex id out of range", reader.line());
        }
        if (u == v) {
            throw ParseError("self loop", reader.line());
        }
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw ParseError("duplicate edge", reader.line());
        }
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++seen;
    }
    if (seen != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(seen),
                         reader.line());
    }
    return g;
}

Graph read_edge_list_file(const std::string& path)
{
    auto in = open(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Hypergraph3 read_hypergraph(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok.size() != 3 || tok[0] != "h3") {
        throw ParseError("expected header 'h3 <n> <m>'", reader.line());
    }
    Hypergraph3 h;
    const long long n = reader.integer(tok[1]);
    const long long m = reader.integer(tok[2]);
    if (n < 0 || m < 0) {
        throw ParseError("negative size in header", reader.line());
    }
    h.n = static_cast<int>(n);
    while (reader.next(tok)) {
        if (tok.size() != 3) {
            throw ParseError("expected '<u> <v> <w>'", reader.line());
        }
        std::array<Vertex, 3> e{};
        for (int i = 0; i < 3; ++i) {
            const long long x = reader.integer(tok[i]);
            if (x < 0 || x >= n) {
                throw ParseError("vertex id out of range", reader.line());
            }
            e[i] = static_cast<Vertex>(x);
        }
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) {
            throw ParseError("hyperedge with repeated vertex", reader.line());
        }
        if (std::find(h.hyperedges.begin(), h.hyperedges.end(), e) != h.hyperedges.end()) {
            throw ParseError("duplicate hyperedge", reader.line());
        }
        h.hyperedges.push_back(e);
    }
    if (static_cast<long long>(h.hyperedges.size()) != m) {
        throw ParseError("header announces " + std::to_string(m) + " hyperedges, found " +
                             std::to_string(h.hyperedges.size()),
                         reader.line());
    }
    std::sort(h.hyperedges.begin(), h.hyperedges.end());
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h)
{
    out << "h3 " << h.n << ' ' << h.hyperedges.size() << '\n';
    for (const auto& e : h.hyperedges) {
        out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    }
}

WeightMap read_weights(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok.size() != 3 || tok[0] != "w") {
        throw ParseError("expected header 'w <t> <default>'", reader.line());
    }
    const long long t = reader.integer(tok[1]);
    const long long def = reader.integer(tok[2]);
    if (t < 1 || def < 0) {
        throw ParseError("header needs t >= 1 and a nonnegative default", reader.line());
    }
    WeightMap w(static_cast<int>(t), def);
    while (reader.next(tok)) {
        if (static_cast<long long>(tok.size()) != t + 1) {
            throw ParseError("expected " + std::to_string(t) + " vertex ids and a weight",
                             reader.line());
        }
        std::vector<Vertex> vs;
        for (long long i = 0; i < t; ++i) {
            const long long x = reader.integer(tok[i]);
            if (x < 0) {
                throw ParseError("negative vertex id", reader.line());
            }
            vs.push_back(static_cast<Vertex>(x));
        }
        if (!std::is_sorted(vs.begin(), vs.end())) {
            throw ParseError("vertex ids must be sorted", reader.line());
        }
        const long long weight = reader.integer(tok[t]);
        if (weight < 0) {
            throw ParseError("negative weight", reader.line());
        }
        try {
            w.set(Clique(std::move(vs)), weight);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), reader.line());
        }
    }
    return w;
}

WeightMap read_weights_file(const std::string& path)
{
    auto in = open(path);
    return read_weights(in);
}

void write_weights(std::ostream& out, const WeightMap& w)
{
    out << "w " << w.t() << ' ' << w.default_weight() << '\n';
    for (const auto& [k, wk] : w.explicit_weights()) {
        for (Vertex v : k) {
            out << v << ' ';
        }
        out << wk << '\n';
    }
}

std::vector<Vertex> read_ordering(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> tok;
    std::vector<Vertex> order;
    while (reader.next(tok)) {
        for (const auto& s : tok) {
            const long long v = reader.integer(s);
            if (v < 0) {
                throw ParseError("negative vertex id", reader.line());
            }
            order.push_back(static_cast<Vertex>(v));
        }
    }
    return order;
}

void write_ordering(std::ostream& out, const std::vector<Vertex>& order)
{
    for (std::size_t i = 0; i < order.size(); ++i) {
        out << (i ? " " : "") << order[i];
    }
    out << '\n';
}

nlohmann::json clique_to_json(const Clique& c) { return c.vertices(); }

nlohmann::json cover_to_json(const CoverSolution& f)
{
    nlohmann::json cliques = nlohmann::json::array();
    for (const auto& [k, m] : f.entries()) {
        cliques.push_back({{"vertices", k.vertices()}, {"mult", m}});
    }
    return {{"cost", f.cost()}, {"cliques", std::move(cliques)}};
}

nlohmann::json packing_to_json(const PackingSolution& y, const WeightMap& w)
{
    nlohmann::json cliques = nlohmann::json::array();
    for (const auto& k : y.cliques()) {
        cliques.push_back({{"vertices", k.vertices()}, {"mult", 1}});
    }
    return {{"value", y.value(w)}, {"cliques", std::move(cliques)}};
}

CoverSolution cover_from_json(const nlohmann::json& j)
{
    CoverSolution f;
    for (const auto& entry : j.at("cliques")) {
        f.add(Clique(entry.at("vertices").get<std::vector<Vertex>>()), entry.at("mult").get<std::int64_t>());
    }
    if (j.contains("cost") && j.at("cost").get<std::int64_t>() != f.cost()) {
        throw ParseError("cover cost does not match its multiplicities", 0);
    }
    return f;
}

PackingSolution packing_from_json(const nlohmann::json& j)
{
    PackingSolution y;
    for (const auto& entry : j.at("cliques")) {
        if (entry.value("mult", 1) != 1) {
            throw ParseError("packing multiplicities must be 1", 0);
        }
        y.select(Clique(entry.at("vertices").get<std::vector<Vertex>>()));
    }
    return y;
}

nlohmann::json optpair_to_json(const OptpairResult& r, bool with_trace)
{
    nlohmann::json j;
    j["cost"] = r.cost;
    j["value"] = r.value;
    j["cover"] = cover_to_json(r.cover);
    nlohmann::json packed = nlohmann::json::array();
    for (const auto& k : r.packing.cliques()) {
        packed.push_back({{"vertices", k.vertices()}, {"mult", 1}});
    }
    j["packing"] = {{"value", r.value}, {"cliques", std::move(packed)}};
    if (with_trace) {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& level : r.trace) {
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& c : level.components) {
                comps.push_back({{"q", c.q.vertices()},
                                 {"z", c.z.vertices()},
                                 {"t_i", c.t_i},
                                 {"packed", c.packed}});
            }
            nlohmann::json res = nlohmann::json::array();
            for (const auto& x : level.residuals) {
                res.push_back({{"k", x.k.vertices()}, {"before", x.before}, {"after", x.after}});
            }
            levels.push_back({{"v", level.v}, {"components", std::move(comps)}, {"residuals", std::move(res)}});
        }
        j["trace"] = std::move(levels);
    }
    return j;
}

} // namespace ktcover::io
