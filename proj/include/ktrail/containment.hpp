#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace ktrail {

/// Closed walk v_0 e_0 v_1 e_1 ... v_{l-1} e_{l-1} v_0; edge i joins
/// vertices[i] and vertices[(i+1) % l]. A loop is a cycle of length 1.
struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Shortest cycle among `allowed` edges (loops first, then parallel pairs,
/// then BFS per edge); ties go to the smallest edge ids.
std::optional<Cycle> shortest_cycle(const MultiGraph& g, const std::vector<EdgeId>& allowed);

/// A witness for the spanning subgraph (V, edges); edge_map holds G-edge ids.
struct SubgraphWitness {
    std::vector<EdgeId> edges;
    PreimageWitness witness;
};

/// Adds the edges of `cycle` (edge-disjoint from U) to a k-trail witness of
/// (V, U) and rebalances so the bound k still holds. Requires k >= 2.
SubgraphWitness absorb_cycle(const MultiGraph& g, const std::vector<EdgeId>& u, const PreimageWitness& wit,
                             const Cycle& cycle, std::size_t k);

struct Extension {
    PreimageWitness witness;  // witness for all of G with bound k + 1
    std::size_t cycles_absorbed = 0;
    std::size_t leaves_attached = 0;
    /// nodes that gained an edge while attaching forest leaves
    std::vector<VertexId> touched;
};

/// Turns a k-trail witness of a connected spanning subgraph (V, U) into a
/// (k+1)-trail witness of G.
Extension extend_to_full_trail(const MultiGraph& g, const std::vector<EdgeId>& u, const PreimageWitness& wit,
                               std::size_t k);

struct ContainmentAnswer {
    bool contains = false;
    std::vector<EdgeId> subset;  // sorted; a minimum-size witness set when contains
    std::optional<PreimageWitness> witness;
    std::size_t subsets_tested = 0;
};

/// Exhaustive search over connected spanning edge subsets, smallest first.
/// Bridges of G belong to every such subset, so only the remaining edges are
/// enumerated; more than `max_free_edges` of them raises SizeGuardError.
ContainmentAnswer oracle_contains_k_trail(const MultiGraph& g, std::size_t k, std::size_t max_free_edges = 20);

/// Edges whose removal disconnects g.
std::vector<EdgeId> bridges(const MultiGraph& g);

}  // namespace ktrail
