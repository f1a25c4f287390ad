#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/matroids.hpp"
#include "ktrail/oracles.hpp"

using namespace ktrail;

namespace {

std::size_t exhaustive_common(const GraphicMatroid& m1, const PartitionMatroid& m2) {
    const std::size_t n = m1.ground_size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) set.push_back(i);
        }
        if (set.size() > best && m1.is_independent(set) && m2.is_independent(set)) best = set.size();
    }
    return best;
}

// alpha vectors of every spanning tree of G' containing the matching edges
std::vector<std::vector<std::size_t>> all_alphas(const AuxGraph& aux) {
    ContractedAux c = contract_matching(aux);
    std::vector<std::vector<std::size_t>> out;
    enumerate_spanning_trees(c.graph, [&](const std::vector<EdgeId>& tree) {
        std::vector<std::size_t> alpha(aux.base().num_vertices(), 0);
        for (EdgeId i : tree) ++alpha[aux.clique_owner(c.origin[i])];
        out.push_back(std::move(alpha));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("partition matroid") {
    PartitionMatroid m({0, 0, 1, 1, 1}, {1, 2});
    CHECK(m.rank({0, 1, 2, 3, 4}) == 3);
    CHECK(m.is_independent({0, 2, 3}));
    CHECK_FALSE(m.is_independent({0, 1}));
    CHECK_THROWS_AS(PartitionMatroid({2}, {1, 1}), UsageError);
}

TEST_CASE("graphic matroid after contraction") {
    auto c3 = build_aux(fixtures::cycle(3));
    auto m1 = contracted_clique_matroid(c3);
    CHECK(m1.ground_size() == 3);
    CHECK(m1.num_super_vertices() == 3);
    CHECK(m1.full_rank() == 2);
    CHECK_FALSE(m1.is_independent({0, 1, 2}));
    CHECK(m1.is_independent({0, 2}));
}

TEST_CASE("intersection examples") {
    auto aux = build_aux(fixtures::cycle(3));
    auto m1 = contracted_clique_matroid(aux);

    auto zero = matroid_intersection(m1, clique_partition_matroid(aux, {0, 0, 0}));
    CHECK(zero.common.empty());

    auto vacuous = matroid_intersection(m1, clique_partition_matroid(aux, {5, 5, 5}));
    CHECK(vacuous.common.size() == m1.full_rank());

    auto m2 = clique_partition_matroid(aux, {0, 1, 1});
    auto res = matroid_intersection(m1, m2);
    CHECK(res.common.size() == 2);
    CHECK(exhaustive_common(m1, m2) == 2);
    CHECK(res.rank1_unreached + res.rank2_reached == res.common.size());

    PartitionMatroid wrong({0}, {1});
    CHECK_THROWS_AS(matroid_intersection(m1, wrong), UsageError);
}

TEST_CASE("intersection matches exhaustive search") {
    std::mt19937_64 rng(3);
    std::size_t tested = 0;
    for (std::uint64_t seed = 0; tested < 300; ++seed) {
        std::size_t n = 2 + seed % 4;
        auto g = gen_random_multigraph(n, n - 1 + seed % 5, 0.25, 0.3, seed);
        auto aux = build_aux(g);
        if (aux.num_clique_edges() > 14) continue;
        ++tested;
        std::vector<std::size_t> cap(n);
        for (VertexId v = 0; v < n; ++v) cap[v] = rng() % (g.degree(v) + 1);
        auto m1 = contracted_clique_matroid(aux);
        auto m2 = clique_partition_matroid(aux, cap);
        auto res = matroid_intersection(m1, m2);
        CHECK(m1.is_independent(res.common));
        CHECK(m2.is_independent(res.common));
        CHECK(res.common.size() == exhaustive_common(m1, m2));
        std::vector<std::size_t> reached, unreached;
        for (std::size_t i = 0; i < m1.ground_size(); ++i) (res.reachable[i] ? reached : unreached).push_back(i);
        CHECK(m1.rank(unreached) + m2.rank(reached) == res.common.size());
    }
}

TEST_CASE("max_weight_basis_alpha") {
    auto c3 = build_aux(fixtures::cycle(3));
    auto zero = max_weight_basis_alpha(c3, {0, 0, 0});
    CHECK(zero.alpha[0] + zero.alpha[1] + zero.alpha[2] == 2);
    CHECK(is_spanning_tree(c3, zero.tree.edges));
    CHECK(zero.tree.contains_all_matching(c3));

    auto one = max_weight_basis_alpha(c3, {1, 0, 0});
    CHECK(one.alpha[0] == 1);

    auto neg = max_weight_basis_alpha(c3, {-1, -1, -1});
    CHECK(neg.alpha[0] + neg.alpha[1] + neg.alpha[2] == 2);

    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 2 + seed % 4;
        auto g = gen_random_multigraph(n, n - 1 + seed % 4, 0.2, 0.3, seed);
        auto aux = build_aux(g);
        std::vector<Rational> w(n);
        for (auto& x : w) x = make_rational(static_cast<std::int64_t>(rng() % 7) - 3, 1 + rng() % 3);
        auto best = max_weight_basis_alpha(aux, w);
        auto value = [&](const std::vector<std::size_t>& alpha) {
            Rational s = 0;
            for (VertexId v = 0; v < n; ++v) s += w[v] * static_cast<long>(alpha[v]);
            return s;
        };
        Rational top = value(best.alpha);
        std::size_t sum = 0;
        for (std::size_t a : best.alpha) sum += a;
        CHECK(sum + 1 == g.num_edges());
        for (const auto& alpha : all_alphas(aux)) CHECK(value(alpha) <= top);
        CHECK(alpha_of(aux, best.tree) == best.alpha);
    }
}

TEST_CASE("max_weight_split") {
    auto c3 = build_aux(fixtures::cycle(3));
    auto ones = max_weight_split(c3, {1, 1, 1});
    CHECK(ones.mu[0] + ones.mu[1] + ones.mu[2] == 1);

    auto tree = build_aux(fixtures::star(4));
    auto t = max_weight_split(tree, std::vector<Rational>(5, Rational(1)));
    for (std::size_t m : t.mu) CHECK(m == 0);

    CHECK_THROWS_AS(max_weight_split(c3, {1, -1, 0}), UsageError);

    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 2 + seed % 5;
        std::size_t m = n - 1 + seed % 5;
        auto g = gen_random_multigraph(n, m, 0.25, 0.25, seed);
        auto aux = build_aux(g);
        auto s = max_weight_split(aux, std::vector<Rational>(n, Rational(1)));
        std::size_t sum = 0;
        for (std::size_t x : s.mu) sum += x;
        CHECK(sum == g.num_edges() - g.num_vertices() + 1);

        if (aux.num_clique_edges() > 16) continue;
        std::vector<Rational> c(n);
        for (auto& x : c) x = static_cast<long>(rng() % 4);
        auto opt = max_weight_split(aux, c);
        Rational top = 0;
        for (VertexId v = 0; v < n; ++v) top += c[v] * static_cast<long>(opt.mu[v]);
        for (const auto& alpha : all_alphas(aux)) {
            Rational val = 0;
            for (VertexId v = 0; v < n; ++v) val += c[v] * static_cast<long>(g.degree(v) - 1 - alpha[v]);
            CHECK(val <= top);
        }
    }
}
