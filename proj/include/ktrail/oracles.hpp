#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ktrail/auxgraph.hpp"
#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"
#include "ktrail/rational.hpp"

namespace ktrail {

/// G'/E-bar: one vertex per G-edge, one edge per clique edge of G' whose
/// slots lie on different G-edges. `origin[i]` is the G'-edge id of edge i.
struct ContractedAux {
    MultiGraph graph = MultiGraph::unchecked(0, {});
    std::vector<EdgeId> origin;
};

ContractedAux contract_matching(const AuxGraph& aux);

/// Calls `visit` with every spanning tree of g (sorted edge ids) exactly
/// once, by contraction and deletion. Stops early when `visit` returns
/// false. Returns the number of trees visited. Graphs with more than
/// `max_vertices` vertices raise SizeGuardError.
std::size_t enumerate_spanning_trees(const MultiGraph& g, const std::function<bool(const std::vector<EdgeId>&)>& visit,
                                     std::size_t max_vertices = 16);

/// Smallest k such that some spanning tree T of G' containing E-bar has every
/// component of (V'_v, T ∩ K_v) of size at most k.
std::size_t oracle_min_k(const MultiGraph& g, std::size_t max_edges = 16);

/// Whether some spanning tree T of G' containing E-bar has at least mu(v)+1
/// components in (V'_v, T ∩ K_v) for every v.
bool oracle_feasible_split(const MultiGraph& g, const SplitVector& mu, std::size_t max_edges = 16);

/// Hamiltonian path by dynamic programming over vertex subsets.
bool has_hamiltonian_path(const MultiGraph& g);

struct ExhaustiveCut {
    std::vector<std::size_t> set;
    Rational violation;  // max over |S| >= 2 of x(E(S)) - |S| + 1
};

/// Reference separation over every vertex subset; at most 20 vertices.
ExhaustiveCut exhaustive_separation(std::size_t num_vertices,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const std::vector<Rational>& x);

}  // namespace ktrail
