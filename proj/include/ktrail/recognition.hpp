#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ktrail/auxgraph.hpp"
#include "ktrail/matroids.hpp"
#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace ktrail {

struct SplitFeasibility {
    bool feasible = false;
    /// Spanning tree of G' containing E-bar with alpha_T <= deg - 1 - mu (when feasible).
    std::optional<AuxTree> tree;
    /// deg(v) - 1 - mu(v); empty if some mu(v) already exceeds deg(v) - 1.
    std::vector<std::size_t> capacity;
    /// Maximum common independent set and its maximality cut.
    std::optional<IntersectionResult> intersection;
};

/// Decides whether mu + 1 is a feasible multiplicity vector. Requires g connected.
SplitFeasibility feasible_split(const MultiGraph& g, const SplitVector& mu);

struct RecognitionResult {
    bool yes = false;
    std::size_t k = 0;
    SplitVector mu;  // ceil(deg / k) - 1
    /// Tree witness with max degree <= k when yes.
    std::optional<PreimageWitness> witness;
    /// On no: the capacities under which the intersection fell short, and its cut.
    std::vector<std::size_t> capacity;
    std::optional<IntersectionResult> deficiency;
};

/// Requires g connected and k >= 1.
RecognitionResult is_k_trail(const MultiGraph& g, std::size_t k);

/// Smallest k with is_k_trail(g, k); scans k = 1..max degree.
std::size_t min_trail_k(const MultiGraph& g);

}  // namespace ktrail
