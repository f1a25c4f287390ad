#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ktrail/multigraph.hpp"

namespace ktrail {

/// Attaches k-2 fresh pendant vertices to every vertex of a simple cubic
/// graph (k = 2 returns the input). Pendants of vertex v get ids
/// n + v*(k-2) + i and their edges follow the original ones.
MultiGraph gen_hardness_gadget(const MultiGraph& cubic, std::size_t k);

/// Ring v_1..v_n with single edges v_1v_2 and v_nv_1, doubled edges
/// v_iv_{i+1} for 2 <= i <= n-1, and pendants bringing every ring vertex to
/// degree 2k-1. Ring vertex v_i has id i-1; pendants follow. Uniform weight.
WeightedMultiGraph gen_gap_instance(std::size_t k, std::size_t n, std::int64_t weight);

/// Connected multigraph: random spanning-tree scaffold, then m-n+1 extra
/// edges, each a loop with probability loop_p, else a copy of an existing
/// edge with probability parallel_p, else a random pair of distinct vertices.
MultiGraph gen_random_multigraph(std::size_t n, std::size_t m, double loop_p, double parallel_p,
                                 std::uint64_t seed);

/// Random integer weights in [lo, hi] aligned with g's edges.
WeightedMultiGraph gen_random_weights(const MultiGraph& g, std::int64_t lo, std::int64_t hi, std::uint64_t seed);

/// All simple 3-regular graphs on n vertices (n even), one per isomorphism
/// class, including disconnected ones.
std::vector<MultiGraph> all_cubic_graphs(std::size_t n);

/// Every loop-free-or-not connected multigraph with exactly n vertices and m
/// edges, one per isomorphism class. Loops allowed when `loops` is set.
std::vector<MultiGraph> all_connected_multigraphs(std::size_t n, std::size_t m, bool loops);

bool is_simple_cubic(const MultiGraph& g);

}  // namespace ktrail
