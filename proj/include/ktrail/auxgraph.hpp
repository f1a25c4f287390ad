#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace ktrail {

using SlotId = std::uint32_t;

/// The slot graph G' of a multigraph G.
///
/// Every edge endpoint of G becomes a slot; the slots of v form V'_v, so
/// |V'_v| = deg(v) and a loop contributes two slots. Edges of G' are
///   - ids 0..m-1: the matching edges (E-bar), edge i joining the two slots of G-edge i;
///   - ids m..   : the clique edges K_v on each V'_v, grouped by v.
/// Slots are numbered vertex by vertex, in incidence order inside a vertex.
class AuxGraph {
public:
    explicit AuxGraph(MultiGraph g);

    const MultiGraph& base() const noexcept { return g_; }
    const MultiGraph& gprime() const noexcept { return gprime_; }

    std::size_t num_slots() const noexcept { return slot_vertex_.size(); }
    std::size_t num_matching_edges() const noexcept { return g_.num_edges(); }
    std::size_t num_clique_edges() const noexcept { return gprime_.num_edges() - g_.num_edges(); }

    VertexId slot_vertex(SlotId s) const { return slot_vertex_.at(s); }
    EdgeId slot_origin(SlotId s) const { return slot_edge_.at(s); }

    /// Slots of G-edge e: [0] sits at e.u, [1] at e.v.
    const std::array<SlotId, 2>& edge_slots(EdgeId e) const { return edge_slots_.at(e); }

    /// V'_v as a contiguous slot range.
    SlotId first_slot(VertexId v) const { return slot_begin_.at(v); }
    std::size_t slot_count(VertexId v) const { return slot_begin_.at(v + 1) - slot_begin_.at(v); }

    bool is_matching_edge(EdgeId e) const noexcept { return e < g_.num_edges(); }
    /// Vertex whose clique contains G'-edge e; requires !is_matching_edge(e).
    VertexId clique_owner(EdgeId e) const { return clique_owner_.at(e - g_.num_edges()); }
    /// Ids of the K_v edges.
    std::vector<EdgeId> clique_edges(VertexId v) const;
    /// The K_v edge joining two distinct slots of the same vertex.
    EdgeId clique_edge_between(SlotId a, SlotId b) const;

private:
    MultiGraph g_;
    MultiGraph gprime_ = MultiGraph::unchecked(0, {});
    std::vector<VertexId> slot_vertex_;
    std::vector<EdgeId> slot_edge_;
    std::vector<std::array<SlotId, 2>> edge_slots_;
    std::vector<SlotId> slot_begin_;
    std::vector<EdgeId> clique_begin_;
    std::vector<VertexId> clique_owner_;
};

/// Requires g connected.
AuxGraph build_aux(const MultiGraph& g);

/// Spanning tree of G' as a sorted list of G'-edge ids.
struct AuxTree {
    std::vector<EdgeId> edges;

    bool contains_all_matching(const AuxGraph& aux) const;
};

bool is_spanning_tree(const AuxGraph& aux, const std::vector<EdgeId>& edges);

/// alpha_T(v) = |T ∩ K_v|.
std::vector<std::size_t> alpha_of(const AuxGraph& aux, const AuxTree& t);

/// Result of contracting the clique components of T.
///
/// `witness` certifies the subgraph (V, image_edges); its edge_map holds
/// G-edge ids. With E-bar inside T, image_edges is 0..m-1 and the witness
/// certifies G itself.
struct AuxPreimage {
    PreimageWitness witness;
    std::vector<EdgeId> image_edges;
    /// node of H each slot was contracted into
    std::vector<VertexId> slot_node;
};

AuxPreimage tree_to_witness(const AuxGraph& aux, const AuxTree& t);

/// Inverse of tree_to_witness for tree witnesses of all of G.
AuxTree witness_to_tree(const AuxGraph& aux, const PreimageWitness& wit);

/// G' in the graph text format followed by "# slot s -> v (edge e)" comments.
std::string render_aux_dump(const AuxGraph& aux);

/// DOT with one cluster per V'_v; matching edges bold. Tree edges, if given, are highlighted.
std::string render_aux_dot(const AuxGraph& aux, const AuxTree* highlight = nullptr);

}  // namespace ktrail
