#include <doctest.h>

#include <sstream>

#include "ktcover/errors.hpp"
#include "ktcover/io.hpp"

using namespace ktcover;

namespace {

int parse_error_line(const std::string& text)
{
    std::istringstream in(text);
    try {
        io::read_edge_list(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("edge list round trip")
    {
        const Graph g = random_gnp(9, 0.5, 4);
        std::ostringstream out;
        io::write_edge_list(out, g);
        std::istringstream in(out.str());
        CHECK(io::read_edge_list(in) == g);
    }

    TEST_CASE("comments and blank lines are skipped")
    {
        std::istringstream in("# a triangle\n\np 3 3\n0 1\n# middle\n1 2\n\n0 2\n");
        CHECK(io::read_edge_list(in) == complete_graph(3));
    }

    TEST_CASE("malformed edge lists report the line")
    {
        CHECK(parse_error_line("") == 0);
        CHECK(parse_error_line("q 3 1\n0 1\n") == 1);
        CHECK(parse_error_line("p 3 1\n0 3\n") == 2);
        CHECK(parse_error_line("p 3 2\n0 1\n1 1\n") == 3);
        CHECK(parse_error_line("p 3 2\n0 1\n1 0\n") == 3);
        CHECK(parse_error_line("p 3 2\n0 1\n") == 2);
        CHECK(parse_error_line("p 3 1\n0 x\n") == 2);
        CHECK(parse_error_line("p 3 1\n0 1 2\n") == 2);
    }

    TEST_CASE("hypergraph round trip")
    {
        const auto h = turan_hypergraph(8);
        std::ostringstream out;
        io::write_hypergraph(out, h);
        std::istringstream in(out.str());
        const auto back = io::read_hypergraph(in);
        CHECK(back.n == h.n);
        CHECK(back.hyperedges == h.hyperedges);
        std::istringstream dup("h3 4 2\n0 1 2\n2 1 0\n");
        CHECK_THROWS_AS(io::read_hypergraph(dup), ParseError);
    }

    TEST_CASE("weight files")
    {
        std::istringstream in("w 2 0\n0 1 2\n0 2 3\n1 2 5\n");
        const WeightMap w = io::read_weights(in);
        CHECK(w.t() == 2);
        CHECK(w(Clique({0, 1})) == 2);
        CHECK(w(Clique({1, 2})) == 5);
        CHECK(w(Clique({1, 3})) == 0);
        std::ostringstream out;
        io::write_weights(out, w);
        CHECK(out.str() == "w 2 0\n0 1 2\n0 2 3\n1 2 5\n");

        std::istringstream unsorted("w 2 1\n1 0 2\n");
        CHECK_THROWS_AS(io::read_weights(unsorted), ParseError);
        std::istringstream negative("w 2 1\n0 1 -2\n");
        CHECK_THROWS_AS(io::read_weights(negative), ParseError);
        std::istringstream arity("w 3 1\n0 1 2\n");
        CHECK_THROWS_AS(io::read_weights(arity), ParseError);
    }

    TEST_CASE("orderings")
    {
        std::istringstream in("3 1\n0 2\n");
        CHECK(io::read_ordering(in) == std::vector<Vertex>{3, 1, 0, 2});
        std::ostringstream out;
        io::write_ordering(out, {2, 0, 1});
        CHECK(out.str() == "2 0 1\n");
    }

    TEST_CASE("cover and packing JSON")
    {
        CoverSolution f;
        f.add(Clique({0, 1, 2}), 3);
        f.add(Clique({1, 2}), 2);
        const auto j = io::cover_to_json(f);
        CHECK(j["cost"] == 5);
        CHECK(j["cliques"][0]["vertices"] == nlohmann::json::array({0, 1, 2}));
        CHECK(j["cliques"][0]["mult"] == 3);
        CHECK(j["cliques"][1]["vertices"] == nlohmann::json::array({1, 2}));
        CHECK(j["cliques"][1]["mult"] == 2);
        CHECK(io::cover_from_json(j) == f);

        PackingSolution y;
        y.select(Clique({1, 2}));
        const auto p = io::packing_to_json(y, WeightMap::unit(2));
        CHECK(p["value"] == 1);
        CHECK(io::packing_from_json(p) == y);

        auto bad = j;
        bad["cost"] = 4;
        CHECK_THROWS_AS(io::cover_from_json(bad), ParseError);
    }
}
