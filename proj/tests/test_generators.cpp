#include <doctest.h>

#include <set>

#include <k4count/connectivity.hpp>
#include <k4count/cycles.hpp>
#include <k4count/generators.hpp>

#include "testutil.hpp"

using namespace k4count;

TEST_CASE("rejection sampling stays in range and is deterministic") {
    Rng a(42), b(42);
    for (int i = 0; i < 200; ++i) {
        auto bound = std::uint64_t(1) + (i % 7) * 13;
        auto x = a.below(bound);
        CHECK(x < bound);
        CHECK(x == b.below(bound));
    }
    CHECK_THROWS_AS(a.below(0), std::invalid_argument);
}

TEST_CASE("fixed families have the right shape") {
    Graph w = wheel(6);
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 10);
    CHECK(w.degree(0) == 5);
    for (int v = 1; v < 6; ++v) CHECK(w.degree(v) == 3);
    CHECK(wheel(4) == complete(4));
    CHECK_THROWS_AS(wheel(3), std::invalid_argument);

    Graph k5 = complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.min_degree() == 4);
    CHECK(complete(1).vertex_count() == 1);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);

    Graph b = complete_bipartite(2, 3);
    CHECK(b.vertex_count() == 5);
    CHECK(b.edge_count() == 6);
    CHECK(b.degree(0) == 3);
    CHECK(b.degree(2) == 2);
    CHECK_FALSE(b.has_edge(0, 1));
    CHECK_FALSE(b.has_edge(2, 3));
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);

    Graph c = cycle_graph(5);
    CHECK(c.vertex_count() == 5);
    CHECK(c.edge_count() == 5);
    CHECK(c.min_degree() == 2);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    CHECK(prism().vertex_count() == 6);
    CHECK(prism().edge_count() == 9);
    CHECK(prism().min_degree() == 3);
}

TEST_CASE("gadget chains") {
    for (int cells = 1; cells <= 5; ++cells) {
        GadgetChain gc = gadget_chain(cells);
        CHECK(gc.cells == cells);
        CHECK(gc.graph.vertex_count() == 3 * cells + 1);
        CHECK(gc.graph.edge_count() == 4 * cells);
        CHECK(gc.endpoints.first == 0);
        CHECK(gc.endpoints.second == cells);
        CHECK(int(gc.junctions.size()) == cells + 1);
        CHECK(gc.graph.degree(gc.endpoints.first) == 2);
        CHECK(gc.graph.degree(gc.endpoints.second) == 2);
        for (int j = 1; j < cells; ++j) CHECK(gc.graph.degree(j) == 4);

        CHECK(count_cycles(gc.graph).count == std::uint64_t(cells));
        auto paths = count_st_paths(gc.graph, gc.endpoints.first, gc.endpoints.second);
        CHECK(paths.count == (std::uint64_t(1) << cells));
    }
    CHECK_THROWS_AS(gadget_chain(0), std::invalid_argument);
}

TEST_CASE("random 2-connected graphs hit their targets") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 5 + int(seed % 7);
        int ears = 1 + int(seed % 6);
        int max_ears = n * (n - 1) / 2 - n + 1;
        if (ears > max_ears) ears = max_ears;
        Graph g = random_2connected(n, ears, seed);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n + ears - 1);
        CHECK(is_k_connected(g, 2));
    }

    Graph ring = random_2connected(7, 1, 5);
    CHECK(ring.edge_count() == 7);
    CHECK(count_cycles(ring).count == 1);

    CHECK(random_2connected(5, 3, 9) == random_2connected(5, 3, 9));
    CHECK_THROWS_AS(random_2connected(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_2connected(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_2connected(4, 20, 1), std::invalid_argument);
}

TEST_CASE("random 3-connected graphs are 3-connected at the requested size") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        int n = 4 + int(seed % 5);
        Graph g = random_3connected(n, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_k_connected(g, 3));
    }
    CHECK(random_3connected(4, 1) == complete(4));
    CHECK(random_3connected(7, 3) == random_3connected(7, 3));
    CHECK_THROWS_AS(random_3connected(3, 1), std::invalid_argument);
}

TEST_CASE("different seeds usually give different graphs") {
    int distinct = 0;
    std::set<std::string> seen;
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        seen.insert(random_3connected(8, seed).to_edge_list());
    distinct = int(seen.size());
    CHECK(distinct >= 2);
}
