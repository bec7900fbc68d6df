#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ktcover/clique.hpp"
#include "ktcover/elimination.hpp"
#include "ktcover/graph.hpp"
#include "ktcover/optpair.hpp"

namespace ktcover::io {

// Text formats. Blank lines and lines starting with '#' are ignored
// everywhere. Malformed input throws ParseError with the offending line.

/// "p <n> <m>" then m lines "<u> <v>" (0-based ids).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// "h3 <n> <m>" then m lines "<u> <v> <w>".
Hypergraph3 read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph3& h);

/// "w <t> <default>" then lines "<v1> ... <vt> <w>".
WeightMap read_weights(std::istream& in);
WeightMap read_weights_file(const std::string& path);
void write_weights(std::ostream& out, const WeightMap& w);

/// Whitespace-separated vertex ids.
std::vector<Vertex> read_ordering(std::istream& in);
void write_ordering(std::ostream& out, const std::vector<Vertex>& order);

// JSON.

nlohmann::json cover_to_json(const CoverSolution& f);
nlohmann::json packing_to_json(const PackingSolution& y, const WeightMap& w);
CoverSolution cover_from_json(const nlohmann::json& j);
PackingSolution packing_from_json(const nlohmann::json& j);
nlohmann::json optpair_to_json(const OptpairResult& r, bool with_trace);
nlohmann::json clique_to_json(const Clique& c);

} // namespace ktcover::io
