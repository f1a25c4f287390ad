#include "ktrail/recognition.hpp"

#include <algorithm>

#include "ktrail/errors.hpp"

namespace ktrail {

SplitFeasibility feasible_split(const MultiGraph& g, const SplitVector& mu) {
    if (mu.size() != g.num_vertices()) throw UsageError("split vector needs one entry per vertex");
    AuxGraph aux = build_aux(g);

    SplitFeasibility out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (mu[v] + 1 > g.degree(v)) return out;
    }
    out.capacity.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.capacity[v] = g.degree(v) - 1 - mu[v];

    GraphicMatroid m1 = contracted_clique_matroid(aux);
    PartitionMatroid m2 = clique_partition_matroid(aux, out.capacity);
    IntersectionResult res = matroid_intersection(m1, m2);
    out.feasible = res.common.size() + 1 == g.num_edges();
    if (out.feasible) {
        AuxTree t;
        for (EdgeId e = 0; e < g.num_edges(); ++e) t.edges.push_back(e);
        for (std::size_t i : res.common) t.edges.push_back(m1.element_edge(i));
        std::sort(t.edges.begin(), t.edges.end());
        if (!is_spanning_tree(aux, t.edges)) throw InvariantViolation("intersection did not yield a spanning tree");
        out.tree = std::move(t);
    }
    out.intersection = std::move(res);
    return out;
}

RecognitionResult is_k_trail(const MultiGraph& g, std::size_t k) {
    if (k < 1) throw UsageError("k must be at least 1");
    if (!is_connected(g)) throw UsageError("recognition requires a connected graph");

    RecognitionResult out;
    out.k = k;
    out.mu.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.mu[v] = (g.degree(v) + k - 1) / k - 1;

    SplitFeasibility split = feasible_split(g, out.mu);
    out.capacity = split.capacity;
    if (!split.feasible) {
        out.deficiency = std::move(split.intersection);
        return out;
    }
    AuxGraph aux(g);
    PreimageWitness tree_wit = tree_to_witness(aux, *split.tree).witness;
    PreimageWitness balanced = balance_degrees(g, tree_wit);
    auto check = verify_witness(g, balanced, k);
    if (!check) throw InvariantViolation("recognition witness failed verification: " + check.reason);
    out.yes = true;
    out.witness = std::move(balanced);
    return out;
}

std::size_t min_trail_k(const MultiGraph& g) {
    if (!is_connected(g)) throw UsageError("recognition requires a connected graph");
    const std::size_t top = std::max<std::size_t>(1, g.max_degree());
    for (std::size_t k = 1; k <= top; ++k) {
        if (is_k_trail(g, k).yes) return k;
    }
    throw InvariantViolation("graph is not a trail at its maximum degree");
}

}  // namespace ktrail
