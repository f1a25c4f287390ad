#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/preimage.hpp"

using namespace ktrail;

namespace {

PreimageWitness make(std::size_t nodes, std::vector<Edge> edges, std::vector<VertexId> phi, std::vector<EdgeId> map) {
    return PreimageWitness{MultiGraph::unchecked(nodes, std::move(edges)), std::move(phi), std::move(map)};
}

std::multiset<std::size_t> fiber_degrees(const PreimageWitness& w, VertexId v) {
    std::multiset<std::size_t> out;
    for (VertexId x : fiber(w, v)) out.insert(w.h.degree(x));
    return out;
}

// All multiplicity vectors of tree preimages of C3 (4 nodes, 3 edges), by brute force.
std::set<MultiplicityVector> c3_tree_multiplicities() {
    MultiGraph c3 = fixtures::cycle(3);
    std::set<MultiplicityVector> out;
    for (int code = 0; code < 81; ++code) {
        std::vector<VertexId> phi(4);
        for (int i = 0, c = code; i < 4; ++i, c /= 3) phi[i] = static_cast<VertexId>(c % 3);
        auto lambda = multiplicities(PreimageWitness{MultiGraph::unchecked(4, {}), phi, {}}, 3);
        if (std::count(lambda.begin(), lambda.end(), 0u)) continue;
        // every edge picks one node pair over its endpoints
        for (int pick = 0; pick < 4096; ++pick) {
            std::vector<Edge> h;
            bool ok = true;
            for (int e = 0, c = pick; e < 3 && ok; ++e, c /= 16) {
                VertexId a = static_cast<VertexId>(c % 4), b = static_cast<VertexId>(c / 4 % 4);
                const Edge& ge = c3.edge(e);
                ok = phi[a] == ge.u && phi[b] == ge.v;
                h.push_back({a, b});
            }
            if (!ok) continue;
            PreimageWitness w{MultiGraph::unchecked(4, h), phi, {0, 1, 2}};
            if (verify_witness(c3, w, 4) && is_tree(w.h)) out.insert(lambda);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("verify_witness on the worked-example witnesses") {
    auto g = fixtures::worked_graph();
    auto h2 = fixtures::worked_h2();
    CHECK(verify_witness(g, h2, 3));
    CHECK(h2.max_node_degree() == 3);
    CHECK(multiplicities(h2, 7) == MultiplicityVector{1, 2, 2, 1, 2, 1, 2});

    auto h1 = fixtures::worked_h1();
    CHECK(verify_witness(g, h1, 4));
    CHECK_FALSE(verify_witness(g, h1, 3));
    CHECK(multiplicities(h1, 7) == MultiplicityVector{1, 1, 2, 1, 2, 1, 2});
    CHECK_FALSE(is_tree(h1.h));
}

TEST_CASE("verify_witness rejects broken witnesses with a reason") {
    auto c3 = fixtures::cycle(3);
    auto id = identity_witness(c3);
    CHECK(verify_witness(c3, id, 2));
    auto low = verify_witness(c3, id, 1);
    CHECK_FALSE(low);
    CHECK(low.reason.find("degree") != std::string::npos);

    auto not_onto = id;
    not_onto.phi[2] = 0;
    CHECK_FALSE(verify_witness(c3, not_onto, 2));

    auto not_bijective = id;
    not_bijective.edge_map[1] = 0;
    CHECK_FALSE(verify_witness(c3, not_bijective, 2));

    auto wrong_ends = id;
    wrong_ends.edge_map = {1, 2, 0};
    CHECK_FALSE(verify_witness(c3, wrong_ends, 2));

    auto disconnected = make(4, {{0, 1}, {2, 3}, {2, 3}}, {0, 1, 1, 2}, {0, 1, 2});
    auto r = verify_witness(fixtures::cycle(3), disconnected, 3);
    CHECK_FALSE(r);
}

TEST_CASE("identity witness is valid at the maximum degree") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = gen_random_multigraph(2 + seed % 5, 4 + seed % 5, 0.3, 0.3, seed);
        CHECK(verify_witness(g, identity_witness(g), g.max_degree()));
    }
}

TEST_CASE("split_into_tree") {
    SUBCASE("tree input is a fixpoint") {
        auto p = fixtures::path(5);
        auto id = identity_witness(p);
        CHECK(split_into_tree(p, id) == id);
    }
    SUBCASE("C3 becomes a 4-path with one doubled vertex") {
        auto c3 = fixtures::cycle(3);
        auto t = split_into_tree(c3, identity_witness(c3));
        CHECK(t.num_nodes() == 4);
        CHECK(is_tree(t.h));
        CHECK(t.max_node_degree() == 2);
        CHECK(verify_witness(c3, t, 2));
        auto allowed = c3_tree_multiplicities();
        CHECK(allowed == std::set<MultiplicityVector>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
        CHECK(allowed.count(multiplicities(t, 3)) == 1);
    }
    SUBCASE("worked-example witness H1 splits into 12 nodes") {
        auto g = fixtures::worked_graph();
        auto t = split_into_tree(g, fixtures::worked_h1());
        CHECK(t.num_nodes() == 12);
        CHECK(is_tree(t.h));
        CHECK(verify_witness(g, t, 4));
    }
    SUBCASE("invalid input") {
        auto c3 = fixtures::cycle(3);
        auto bad = identity_witness(c3);
        bad.edge_map = {0, 0, 1};
        CHECK_THROWS_AS(split_into_tree(c3, bad), UsageError);
    }
}

TEST_CASE("merge_to_multiplicity") {
    auto c3 = fixtures::cycle(3);
    auto t = split_into_tree(c3, identity_witness(c3));
    CHECK(merge_to_multiplicity(c3, t, multiplicities(t, 3)) == t);

    auto merged = merge_to_multiplicity(c3, t, {1, 1, 1});
    CHECK(merged.num_nodes() == 3);
    CHECK(verify_witness(c3, merged, 2));
    for (EdgeId f = 0; f < 3; ++f) {
        const Edge& he = merged.h.edge(f);
        const Edge& ge = c3.edge(merged.edge_map[f]);
        CHECK(std::minmax(merged.phi[he.u], merged.phi[he.v]) == std::minmax(ge.u, ge.v));
    }

    auto g = fixtures::worked_graph();
    auto h2 = fixtures::worked_h2();
    auto to_h1 = merge_to_multiplicity(g, h2, multiplicities(fixtures::worked_h1(), 7));
    CHECK(verify_witness(g, to_h1, to_h1.max_node_degree()));
    CHECK(multiplicities(to_h1, 7)[1] == 1);
    CHECK(to_h1.h.num_edges() == 11);

    CHECK_THROWS_AS(merge_to_multiplicity(c3, t, {2, 2, 2}), UsageError);
    CHECK_THROWS_AS(merge_to_multiplicity(c3, t, {0, 1, 1}), UsageError);
}

TEST_CASE("balance_degrees") {
    SUBCASE("already balanced") {
        auto p = fixtures::path(4);
        BalanceStats stats;
        auto w = balance_degrees(p, identity_witness(p), &stats);
        CHECK(w == identity_witness(p));
        CHECK(stats.moves == 0);
    }
    SUBCASE("degree 4 split as (3,1) becomes (2,2)") {
        MultiGraph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}});
        // nodes: a=0, b=1 over vertex 0; nodes 2..5 over vertices 1..4
        auto w = make(6, {{0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}}, {0, 0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
        REQUIRE(verify_witness(g, w, 3));
        REQUIRE(is_tree(w.h));
        auto b = balance_degrees(g, w);
        CHECK(fiber_degrees(b, 0) == std::multiset<std::size_t>{2, 2});
        CHECK(verify_witness(g, b, 2));
        CHECK(is_tree(b.h));
    }
    SUBCASE("degree 7 over three nodes becomes (3,2,2)") {
        std::vector<Edge> ge;
        for (VertexId i = 1; i <= 7; ++i) ge.push_back({0, i});
        ge.push_back({5, 6});
        ge.push_back({6, 7});
        MultiGraph g(8, ge);
        // nodes 0,1,2 over vertex 0; node 2+i over vertex i
        auto w = make(10, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 8}, {2, 9}, {7, 8}, {8, 9}},
                      {0, 0, 0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
        REQUIRE(verify_witness(g, w, 5));
        REQUIRE(is_tree(w.h));
        BalanceStats stats;
        auto b = balance_degrees(g, w, &stats);
        CHECK(fiber_degrees(b, 0) == std::multiset<std::size_t>{2, 2, 3});
        CHECK(stats.moves <= stats.initial_potential);
        CHECK(verify_witness(g, b, 3));
    }
    SUBCASE("non-tree input") {
        auto c3 = fixtures::cycle(3);
        CHECK_THROWS_AS(balance_degrees(c3, identity_witness(c3)), UsageError);
    }
}

TEST_CASE("random pipeline keeps witnesses valid") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 2 + seed % 5;
        auto g = gen_random_multigraph(n, n - 1 + seed % 6, 0.25, 0.25, seed);
        auto t = split_into_tree(g, identity_witness(g));
        REQUIRE(t.num_nodes() == g.num_edges() + 1);
        CHECK(verify_witness(g, t, t.max_node_degree()));
        CHECK(t.max_node_degree() <= g.max_degree());
        auto lambda = multiplicities(t, n);
        for (std::size_t v = 0; v < n; ++v) CHECK(lambda[v] >= 1);

        BalanceStats stats;
        auto b = balance_degrees(g, t, &stats);
        CHECK(verify_witness(g, b, b.max_node_degree()));
        CHECK(stats.moves <= stats.initial_potential);
        CHECK(multiplicities(b, n) == lambda);
        for (VertexId v = 0; v < n; ++v) {
            std::size_t lo = g.degree(v) / lambda[v], hi = (g.degree(v) + lambda[v] - 1) / lambda[v];
            for (VertexId w : fiber(b, v)) CHECK((b.h.degree(w) == lo || b.h.degree(w) == hi));
        }

        // random intermediate target, then all ones
        MultiplicityVector target(n);
        for (std::size_t v = 0; v < n; ++v) target[v] = 1 + rng() % lambda[v];
        auto mid = merge_to_multiplicity(g, b, target);
        CHECK(multiplicities(mid, n) == target);
        CHECK(verify_witness(g, mid, mid.max_node_degree()));
        auto ones = merge_to_multiplicity(g, mid, MultiplicityVector(n, 1));
        REQUIRE(ones.num_nodes() == n);
        std::multiset<std::pair<VertexId, VertexId>> from_h, from_g;
        for (EdgeId f = 0; f < ones.h.num_edges(); ++f) {
            from_h.insert(std::minmax(ones.phi[ones.h.edge(f).u], ones.phi[ones.h.edge(f).v]));
        }
        for (const Edge& e : g.edges()) from_g.insert(std::minmax(e.u, e.v));
        CHECK(from_h == from_g);
    }
}

TEST_CASE("subgraph witnesses keep G edge ids") {
    auto c4 = fixtures::cycle(4);
    std::vector<EdgeId> u = {0, 1, 2};
    auto sub = spanning_subgraph(c4, u);
    auto local = identity_witness(sub);
    auto global = from_subgraph_ids(local, u);
    CHECK(verify_subgraph_witness(c4, u, global, 2));
    CHECK(to_subgraph_ids(global, u) == local);
    CHECK_FALSE(verify_subgraph_witness(c4, {0, 1, 3}, global, 2));
}
