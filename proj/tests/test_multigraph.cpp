#include <doctest.h>

#include "fixtures.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/multigraph.hpp"

using namespace ktrail;

TEST_CASE("degree counts loops twice") {
    auto c3 = fixtures::cycle(3);
    for (VertexId v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

    MultiGraph loop(2, {{0, 0}, {0, 1}});
    CHECK(loop.degree(0) == 3);
    CHECK(loop.degree(1) == 1);
    MultiGraph lonely_loop = MultiGraph::unchecked(1, {{0, 0}});
    CHECK(lonely_loop.degree(0) == 2);

    auto fig = fixtures::worked_graph();
    CHECK(fig.degree(6) == 3);
    CHECK(fig.degrees() == std::vector<std::size_t>{3, 4, 4, 3, 4, 1, 3});
    CHECK_THROWS_AS(fig.degree(7), UsageError);
}

TEST_CASE("constructor enforces the scope rules") {
    CHECK_THROWS_AS(MultiGraph(1, {}), UsageError);
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), UsageError);
    CHECK_NOTHROW(MultiGraph::unchecked(1, {}));
}

TEST_CASE("parallel edges stay distinct") {
    MultiGraph g(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(g.num_edges() == 3);
    CHECK(g.degree(0) == 3);
    CHECK(g.incidences(0).size() == 3);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(fixtures::cycle(3)));
    CHECK_FALSE(is_connected(MultiGraph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(fixtures::worked_graph()));
    CHECK_FALSE(is_connected(MultiGraph(3, {{0, 1}, {2, 2}})));
    CHECK(is_connected_spanning(fixtures::cycle(4), {0, 1, 2}));
    CHECK_FALSE(is_connected_spanning(fixtures::cycle(4), {0, 2}));
}

TEST_CASE("handshake on random multigraphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        std::size_t n = 2 + seed % 7;
        std::size_t m = n - 1 + seed % 9;
        MultiGraph g = gen_random_multigraph(n, m, 0.3, 0.3, seed);
        std::size_t sum = 0;
        for (std::size_t d : g.degrees()) sum += d;
        CHECK(sum == 2 * g.num_edges());
        CHECK(is_connected(g));
    }
}

TEST_CASE("parse examples") {
    auto single = parse_graph("p ktrail 2 1\ne 0 1");
    CHECK(single.graph.num_vertices() == 2);
    CHECK(single.graph.num_edges() == 1);
    CHECK_FALSE(single.weights.has_value());

    auto weighted = parse_graph("p ktrail 2 1\ne 0 1 -3\n");
    REQUIRE(weighted.weights.has_value());
    CHECK((*weighted.weights)[0] == -3);

    auto commented = parse_graph("# a comment\np ktrail 3 2 # trailing\n\ne 0 1\ne 2 2\n");
    CHECK(commented.graph.edge(1).is_loop());
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("p ktrail 1 0") == 1);
    CHECK(line_of("p ktrail 2 1\ne 0 2") == 2);
    CHECK(line_of("p ktrail 2 2\ne 0 1") == 2);
    CHECK(line_of("p ktrail 2 1\ne 0 1\ne 1 0") == 3);
    CHECK(line_of("\n\np graph 2 1\ne 0 1") == 3);
    CHECK(line_of("p ktrail 2 2\ne 0 1 4\ne 1 0") == 3);
    CHECK(line_of("p ktrail 2 1\nx 0 1") == 2);
    CHECK(line_of("p ktrail 2 1\np ktrail 2 1\ne 0 1") == 2);
    CHECK(line_of("p ktrail 2 1\ne 0 1 abc") == 2);
    CHECK(line_of("e 0 1") == 1);
    CHECK(line_of("") == 0);
}

TEST_CASE("parse and render round-trip") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::size_t n = 2 + seed % 7;
        std::size_t m = n - 1 + (seed / 7) % (17 - n);
        MultiGraph g = gen_random_multigraph(n, m, 0.2 + 0.1 * (seed % 3), 0.2 + 0.1 * (seed % 4), seed);
        auto back = parse_graph(render_graph(g));
        REQUIRE(back.graph == g);
        CHECK_FALSE(back.weights.has_value());

        WeightedMultiGraph wg = gen_random_weights(g, -5, 5, seed);
        auto wback = parse_graph(render_graph(wg));
        REQUIRE(wback.weights.has_value());
        CHECK(wback.graph == g);
        CHECK(*wback.weights == wg.weight);
    }
}

TEST_CASE("dot export keeps parallels and loops") {
    MultiGraph g(2, {{0, 1}, {0, 1}, {1, 1}});
    std::string dot = render_dot(g);
    auto count = [&](const std::string& needle) {
        std::size_t c = 0;
        for (std::size_t p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++c;
        return c;
    };
    CHECK(count("0 -- 1") == 2);
    CHECK(count("1 -- 1") == 1);
}

TEST_CASE("trees and odd vertices") {
    CHECK(is_tree(fixtures::path(4)));
    CHECK_FALSE(is_tree(fixtures::cycle(4)));
    CHECK(count_odd_degree_vertices(fixtures::star(3)) == 4);
    CHECK(count_odd_degree_vertices(fixtures::cycle(5)) == 0);
    auto sub = spanning_subgraph(fixtures::cycle(4), {2, 0});
    CHECK(sub.num_edges() == 2);
    CHECK(sub.edge(0).u == 2);
}
