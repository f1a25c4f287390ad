#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "ktrail/containment.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/recognition.hpp"

using namespace ktrail;

namespace {

std::vector<EdgeId> all_edges(const MultiGraph& g) {
    std::vector<EdgeId> e(g.num_edges());
    std::iota(e.begin(), e.end(), EdgeId{0});
    return e;
}

PreimageWitness subgraph_witness(const MultiGraph& g, const std::vector<EdgeId>& u, std::size_t k) {
    auto sub = spanning_subgraph(g, u);
    auto r = is_k_trail(sub, k);
    REQUIRE(r.yes);
    return from_subgraph_ids(*r.witness, u);
}

}  // namespace

TEST_CASE("bridges and shortest cycles") {
    CHECK(bridges(fixtures::path(4)).size() == 3);
    CHECK(bridges(fixtures::cycle(4)).empty());
    auto paw = fixtures::paw();
    CHECK(bridges(paw).size() == 1);

    auto ex = fixtures::worked_graph();
    auto c = shortest_cycle(ex, all_edges(ex));
    REQUIRE(c.has_value());
    CHECK(c->edges.size() == 1);  // the loop
    CHECK_FALSE(shortest_cycle(fixtures::path(4), all_edges(fixtures::path(4))).has_value());
    MultiGraph par(2, {{0, 1}, {0, 1}});
    CHECK(shortest_cycle(par, {0, 1})->edges.size() == 2);
}

TEST_CASE("absorbing cycles") {
    MultiGraph par(2, {{0, 1}, {0, 1}, {0, 1}});
    auto wit = subgraph_witness(par, {0}, 2);
    auto res = absorb_cycle(par, {0}, wit, Cycle{{0, 1}, {1, 2}}, 2);
    CHECK(res.edges.size() == 3);
    CHECK(verify_witness(par, res.witness, 2));
    CHECK_THROWS_AS(absorb_cycle(par, {0}, wit, Cycle{{0, 1}, {0, 1}}, 2), UsageError);

    auto c3 = fixtures::cycle(3);
    auto pw = subgraph_witness(c3, {0, 1}, 2);
    auto cyc = shortest_cycle(c3, {2});
    CHECK_FALSE(cyc.has_value());
    Cycle tri{{0, 1, 2}, {0, 1, 2}};
    CHECK_THROWS_AS(absorb_cycle(c3, {0, 1}, pw, tri, 2), UsageError);
}

TEST_CASE("extension examples") {
    auto c4 = fixtures::cycle(4);
    auto full = subgraph_witness(c4, all_edges(c4), 2);
    auto same = extend_to_full_trail(c4, all_edges(c4), full, 2);
    CHECK(same.cycles_absorbed == 0);
    CHECK(same.leaves_attached == 0);
    CHECK(verify_witness(c4, same.witness, 2));

    auto k4 = fixtures::complete(4);
    std::vector<EdgeId> ham;
    for (EdgeId e = 0; e < k4.num_edges(); ++e) {
        auto [a, b] = k4.edge(e);
        if (b == a + 1) ham.push_back(e);
    }
    REQUIRE(ham.size() == 3);
    auto ext = extend_to_full_trail(k4, ham, subgraph_witness(k4, ham, 2), 2);
    CHECK(verify_witness(k4, ext.witness, 3));

    auto paw = fixtures::paw();
    auto ans = oracle_contains_k_trail(paw, 2);
    REQUIRE(ans.contains);
    auto pext = extend_to_full_trail(paw, ans.subset, *ans.witness, 2);
    CHECK(verify_witness(paw, pext.witness, 3));
}

TEST_CASE("containment oracle examples") {
    CHECK(oracle_contains_k_trail(fixtures::cycle(4), 2).contains);
    CHECK_FALSE(oracle_contains_k_trail(fixtures::star(3), 2).contains);
    auto ex = oracle_contains_k_trail(fixtures::worked_graph(), 3);
    CHECK(ex.contains);
    REQUIRE(ex.witness.has_value());
    CHECK(verify_subgraph_witness(fixtures::worked_graph(), ex.subset, *ex.witness, 3));
    CHECK_THROWS_AS(oracle_contains_k_trail(fixtures::complete(7), 2, 10), SizeGuardError);
}

TEST_CASE("random tree plus one cycle: the cycle is absorbed at the same bound") {
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 3 + seed % 5;
        auto tree = gen_random_multigraph(n, n - 1, 0, 0, seed);
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), VertexId{0});
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t len = 1 + rng() % n;

        std::vector<Edge> edges = tree.edges();
        Cycle c;
        for (std::size_t i = 0; i < len; ++i) {
            c.vertices.push_back(order[i]);
            c.edges.push_back(static_cast<EdgeId>(edges.size() + i));
        }
        for (std::size_t i = 0; i < len; ++i) edges.push_back({order[i], order[(i + 1) % len]});
        MultiGraph g(n, edges);

        std::vector<EdgeId> u(n - 1);
        std::iota(u.begin(), u.end(), EdgeId{0});
        std::size_t k = std::max<std::size_t>(2, tree.max_degree());
        auto wit = from_subgraph_ids(identity_witness(tree), u);
        REQUIRE(verify_subgraph_witness(g, u, wit, k));
        auto res = absorb_cycle(g, u, wit, c, k);
        CHECK(res.edges.size() == g.num_edges());
        CHECK(verify_witness(g, res.witness, k));
    }
}

TEST_CASE("extension on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        std::size_t n = 2 + seed % 4;
        auto g = gen_random_multigraph(n, n - 1 + seed % 5, 0.2, 0.25, seed);
        for (std::size_t k = 1; k <= 3; ++k) {
            auto ans = oracle_contains_k_trail(g, k);
            if (!ans.contains) continue;
            CHECK(is_k_trail(g, k + 1).yes);
            auto ext = extend_to_full_trail(g, ans.subset, *ans.witness, k);
            CHECK(verify_witness(g, ext.witness, k + 1));
        }
    }
}
