#pragma once

#include <cstddef>
#include <vector>

#include "ktrail/auxgraph.hpp"
#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"
#include "ktrail/rational.hpp"

namespace ktrail {

/// Graphic matroid of a multigraph after contracting some edges. Elements
/// are indexed 0..ground_size()-1 and refer to `ground[i]` in the graph.
class GraphicMatroid {
public:
    GraphicMatroid(const MultiGraph& g, const std::vector<EdgeId>& contracted, std::vector<EdgeId> ground);

    std::size_t ground_size() const noexcept { return ends_.size(); }
    EdgeId element_edge(std::size_t i) const { return ground_.at(i); }

    /// Endpoints of element i in the contracted graph (component labels).
    const std::pair<std::size_t, std::size_t>& ends(std::size_t i) const { return ends_.at(i); }
    std::size_t num_super_vertices() const noexcept { return super_vertices_; }

    bool is_independent(const std::vector<std::size_t>& elements) const;
    std::size_t rank(const std::vector<std::size_t>& elements) const;
    /// Rank of the whole ground set.
    std::size_t full_rank() const;

private:
    std::vector<EdgeId> ground_;
    std::vector<std::pair<std::size_t, std::size_t>> ends_;
    std::size_t super_vertices_ = 0;
};

class PartitionMatroid {
public:
    PartitionMatroid(std::vector<std::size_t> part_of, std::vector<std::size_t> capacity);

    std::size_t ground_size() const noexcept { return part_of_.size(); }
    std::size_t part_of(std::size_t i) const { return part_of_.at(i); }
    std::size_t capacity(std::size_t part) const { return capacity_.at(part); }
    std::size_t num_parts() const noexcept { return capacity_.size(); }

    bool is_independent(const std::vector<std::size_t>& elements) const;
    std::size_t rank(const std::vector<std::size_t>& elements) const;

private:
    std::vector<std::size_t> part_of_;
    std::vector<std::size_t> capacity_;
};

/// Maximum common independent set together with the exchange-graph cut that
/// proves maximality: |common| = r1(ground \ reachable) + r2(reachable).
struct IntersectionResult {
    std::vector<std::size_t> common;
    std::vector<bool> reachable;
    std::size_t rank1_unreached = 0;
    std::size_t rank2_reached = 0;
};

IntersectionResult matroid_intersection(const GraphicMatroid& m1, const PartitionMatroid& m2);

/// Graphic matroid of G'/E-bar with ground set K (all clique edges in id order).
GraphicMatroid contracted_clique_matroid(const AuxGraph& aux);
/// Partition of K into the K_v with the given per-vertex capacities.
PartitionMatroid clique_partition_matroid(const AuxGraph& aux, const std::vector<std::size_t>& capacity);

/// alpha_T(v) = |T ∩ K_v| for spanning trees T containing E-bar.
using AlphaVector = std::vector<std::size_t>;

struct AlphaBasis {
    AlphaVector alpha;
    AuxTree tree;
};

/// Maximises sum_v weight(v) * alpha_T(v) over spanning trees T ⊇ E-bar by
/// greedy: every K_v edge gets weight(v); ties broken by smaller edge id.
AlphaBasis max_weight_basis_alpha(const AuxGraph& aux, const std::vector<Rational>& weight);

struct SplitOptimum {
    SplitVector mu;
    AuxTree tree;
};

/// Maximises c·mu over feasible split vectors (c >= 0) via mu = deg - 1 - alpha_T
/// for a minimum-weight basis alpha_T.
SplitOptimum max_weight_split(const AuxGraph& aux, const std::vector<Rational>& c);

}  // namespace ktrail
