#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ktrail/multigraph.hpp"

namespace ktrail {

/// Certificate that G is the homomorphic image of a connected graph H.
///
/// `phi[w]` is the G-vertex node w maps onto; `edge_map[f]` is the G-edge
/// that H-edge f is sent to. The edge map is carried explicitly because phi
/// alone cannot tell which parallel H-edge covers which parallel G-edge.
struct PreimageWitness {
    MultiGraph h = MultiGraph::unchecked(0, {});
    std::vector<VertexId> phi;
    std::vector<EdgeId> edge_map;

    std::size_t num_nodes() const noexcept { return h.num_vertices(); }
    std::size_t max_node_degree() const { return h.max_degree(); }

    bool operator==(const PreimageWitness&) const = default;
};

/// lambda(v) = |phi^-1(v)|. The split vector is lambda - 1.
using MultiplicityVector = std::vector<std::size_t>;
using SplitVector = std::vector<std::size_t>;

MultiplicityVector multiplicities(const PreimageWitness& wit, std::size_t num_vertices);

/// Nodes over v in increasing id order.
std::vector<VertexId> fiber(const PreimageWitness& wit, VertexId v);

struct WitnessCheck {
    bool ok = false;
    std::string reason;  // empty when ok

    explicit operator bool() const noexcept { return ok; }
};

/// Checks onto-ness, the edge bijection, endpoint agreement, connectivity of
/// H, and the degree bound k.
WitnessCheck verify_witness(const MultiGraph& g, const PreimageWitness& wit, std::size_t k);

/// H = G, phi = id.
PreimageWitness identity_witness(const MultiGraph& g);

/// Splits nodes along cycle edges until H is a tree with |E|+1 nodes.
/// Max degree never increases.
PreimageWitness split_into_tree(const MultiGraph& g, const PreimageWitness& wit);

/// Merges nodes inside fibers until every fiber has the target size.
/// Requires 1 <= target <= current multiplicities.
PreimageWitness merge_to_multiplicity(const MultiGraph& g, const PreimageWitness& wit,
                                      const MultiplicityVector& target);

struct BalanceStats {
    std::size_t moves = 0;
    std::size_t initial_potential = 0;  // sum of squared node degrees before balancing
};

/// Moves tree edges between nodes of the same fiber until node degrees in
/// each fiber differ by at most one. Requires a tree witness.
PreimageWitness balance_degrees(const MultiGraph& g, const PreimageWitness& wit,
                                BalanceStats* stats = nullptr);

// Witnesses of a spanning subgraph (V, U) keep G-edge ids in edge_map.
// These helpers move between that form and the renumbered subgraph
// spanning_subgraph(g, U), where edge i is U[i].

PreimageWitness to_subgraph_ids(const PreimageWitness& wit, const std::vector<EdgeId>& subset);
PreimageWitness from_subgraph_ids(const PreimageWitness& wit, const std::vector<EdgeId>& subset);

/// verify_witness against (V, subset).
WitnessCheck verify_subgraph_witness(const MultiGraph& g, const std::vector<EdgeId>& subset,
                                     const PreimageWitness& wit, std::size_t k);

}  // namespace ktrail
