#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/oracles.hpp"

using namespace ktrail;

namespace {

std::size_t count_trees(const MultiGraph& g) {
    return enumerate_spanning_trees(g, [](const std::vector<EdgeId>&) { return true; });
}

}  // namespace

TEST_CASE("spanning tree counts") {
    CHECK(count_trees(fixtures::cycle(3)) == 3);
    CHECK(count_trees(fixtures::path(5)) == 1);
    CHECK(count_trees(MultiGraph(2, {{0, 1}, {0, 1}})) == 2);
    CHECK(count_trees(MultiGraph(2, {{0, 0}, {0, 1}})) == 1);
    CHECK(count_trees(fixtures::complete(4)) == 16);
    CHECK(count_trees(fixtures::complete(5)) == 125);
    CHECK(count_trees(MultiGraph(4, {{0, 1}, {2, 3}})) == 0);

    std::size_t seen = 0;
    enumerate_spanning_trees(fixtures::complete(5), [&](const std::vector<EdgeId>&) { return ++seen < 10; });
    CHECK(seen == 10);

    std::set<std::vector<EdgeId>> distinct;
    enumerate_spanning_trees(fixtures::complete(4), [&](const std::vector<EdgeId>& t) {
        CHECK(t.size() == 3);
        CHECK(is_connected_spanning(fixtures::complete(4), t));
        distinct.insert(t);
        return true;
    });
    CHECK(distinct.size() == 16);

    CHECK_THROWS_AS(count_trees(fixtures::cycle(20)), SizeGuardError);
}

TEST_CASE("contracted auxiliary graph of C3") {
    AuxGraph aux(fixtures::cycle(3));
    auto c = contract_matching(aux);
    CHECK(c.graph.num_vertices() == 3);
    CHECK(c.graph.num_edges() == 3);
    CHECK(count_trees(c.graph) == 3);
    for (EdgeId e : c.origin) CHECK_FALSE(aux.is_matching_edge(e));
}

TEST_CASE("oracle values") {
    for (std::size_t n = 3; n <= 6; ++n) CHECK(oracle_min_k(fixtures::cycle(n)) == 2);
    CHECK(oracle_min_k(fixtures::star(3)) == 3);
    CHECK(oracle_min_k(fixtures::single_edge()) == 1);
    CHECK(oracle_min_k(fixtures::path(4)) == 2);
    CHECK(oracle_feasible_split(fixtures::cycle(3), {1, 0, 0}));
    CHECK_FALSE(oracle_feasible_split(fixtures::cycle(3), {1, 1, 1}));
    CHECK(oracle_feasible_split(fixtures::worked_graph(), {0, 1, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(oracle_min_k(fixtures::complete(7)), SizeGuardError);
}

TEST_CASE("hamiltonian paths") {
    CHECK(has_hamiltonian_path(fixtures::path(5)));
    CHECK(has_hamiltonian_path(fixtures::complete(4)));
    CHECK_FALSE(has_hamiltonian_path(fixtures::star(3)));
    CHECK(has_hamiltonian_path(fixtures::k33()));
    CHECK_FALSE(has_hamiltonian_path(MultiGraph(4, {{0, 1}, {2, 3}})));
    for (const auto& g : all_cubic_graphs(8)) CHECK(has_hamiltonian_path(g) == is_connected(g));
}

TEST_CASE("exhaustive separation") {
    std::vector<std::pair<std::size_t, std::size_t>> tri{{0, 1}, {1, 2}, {2, 0}};
    CHECK(exhaustive_separation(3, tri, {1, 1, 1}).violation == 1);
    CHECK(exhaustive_separation(3, tri, {1, 1, 1}).set.size() == 3);
    auto none = exhaustive_separation(3, tri, {1, 1, 0});
    CHECK(none.violation <= 0);
}
