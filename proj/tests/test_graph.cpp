#include <doctest.h>

#include <sstream>

#include <k4count/graph.hpp>

#include "testutil.hpp"

using namespace k4count;

TEST_CASE("edges are normalized, sorted, and deduplicated on access paths") {
    Graph g(5, {{3, 1}, {0, 4}, {1, 0}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 3}});
    CHECK(g.neighbors(1) == std::vector<int>{0, 3});
    CHECK(g.neighbors(2).empty());
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.degrees() == std::vector<int>{2, 2, 0, 1, 1});
    CHECK(g.min_degree() == 0);
}

TEST_CASE("construction rejects loops, duplicates, and out-of-range endpoints") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_NOTHROW(Graph(0, {}));
}

TEST_CASE("parse accepts header, comments, and blank lines") {
    std::string text =
        "# a comment\n"
        "\n"
        "p 4 3\n"
        "0 1\n"
        "# another\n"
        "1 2   \n"
        "2 3\n";
    Graph g = parse_graph(text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("parse without header sizes the graph from the largest id") {
    Graph g = parse_graph("0 1\n5 2\n");
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse reports the offending line number") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("p 3 1\n0 1 2\n") == 2);
    CHECK(line_of("p 3 1\nnope\n") == 2);
    CHECK(line_of("p 3 1\n1 1\n") == 2);
    CHECK(line_of("p 3 2\n0 1\n# x\n1 0\n") == 4);
    CHECK(line_of("p 3 1\n0 7\n") == 2);
    CHECK(line_of("p 3 1\n-2 1\n") == 2);
    CHECK(line_of("0 1\np 3 1\n") == 2);
    CHECK(line_of("p x 1\n0 1\n") == 1);
    CHECK(line_of("p 3 -1\n") == 1);
}

TEST_CASE("parse enforces the declared edge count") {
    CHECK_THROWS_AS(parse_graph("p 3 2\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 3 1\n0 1\n1 2\n"), parse_error);
    CHECK_NOTHROW(parse_graph("p 4 0\n"));
    CHECK(parse_graph("p 4 0\n").vertex_count() == 4);
}

TEST_CASE("edge list text round-trips through the parser") {
    Graph g = wheel(7);
    Graph back = parse_graph(g.to_edge_list());
    CHECK(back == g);

    Graph empty(3, {});
    CHECK(parse_graph(empty.to_edge_list()) == empty);
}

TEST_CASE("delete_vertex keeps the id space and isolates the victim") {
    Graph g = wheel(5);
    Graph h = g.delete_vertex(0);
    CHECK(h.vertex_count() == 5);
    CHECK(h.degree(0) == 0);
    CHECK(h.edge_count() == 4);
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK_THROWS_AS(g.delete_vertex(9), std::invalid_argument);
}

TEST_CASE("connectivity helpers agree with small known graphs") {
    CHECK(is_connected(wheel(6)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));  // no vertex pair to disconnect

    auto ids = connected_component_ids(Graph(5, {{0, 1}, {3, 4}}));
    CHECK(ids[0] == ids[1]);
    CHECK(ids[3] == ids[4]);
    CHECK(ids[0] != ids[3]);
    CHECK(ids[2] != ids[0]);
    CHECK(ids[2] != ids[3]);
}
