#include "ktrail/matroids.hpp"

#include <algorithm>
#include <numeric>

#include "ktrail/errors.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

GraphicMatroid::GraphicMatroid(const MultiGraph& g, const std::vector<EdgeId>& contracted, std::vector<EdgeId> ground)
    : ground_(std::move(ground)) {
    UnionFind uf(g.num_vertices());
    for (EdgeId e : contracted) uf.unite(g.edge(e).u, g.edge(e).v);
    std::vector<std::size_t> label(g.num_vertices(), g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::size_t r = uf.find(v);
        if (label[r] == g.num_vertices()) label[r] = super_vertices_++;
    }
    ends_.reserve(ground_.size());
    for (EdgeId e : ground_) {
        ends_.emplace_back(label[uf.find(g.edge(e).u)], label[uf.find(g.edge(e).v)]);
    }
}

std::size_t GraphicMatroid::rank(const std::vector<std::size_t>& elements) const {
    UnionFind uf(super_vertices_);
    std::size_t r = 0;
    for (std::size_t i : elements) r += uf.unite(ends_.at(i).first, ends_.at(i).second) ? 1 : 0;
    return r;
}

bool GraphicMatroid::is_independent(const std::vector<std::size_t>& elements) const {
    return rank(elements) == elements.size();
}

std::size_t GraphicMatroid::full_rank() const {
    std::vector<std::size_t> all(ground_size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return rank(all);
}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> part_of, std::vector<std::size_t> capacity)
    : part_of_(std::move(part_of)), capacity_(std::move(capacity)) {
    for (std::size_t p : part_of_) {
        if (p >= capacity_.size()) throw UsageError("partition matroid element refers to an unknown part");
    }
}

std::size_t PartitionMatroid::rank(const std::vector<std::size_t>& elements) const {
    std::vector<std::size_t> count(capacity_.size(), 0);
    for (std::size_t i : elements) ++count[part_of_.at(i)];
    std::size_t r = 0;
    for (std::size_t p = 0; p < count.size(); ++p) r += std::min(count[p], capacity_[p]);
    return r;
}

bool PartitionMatroid::is_independent(const std::vector<std::size_t>& elements) const {
    return rank(elements) == elements.size();
}

namespace {

// Super-vertices on the forest path between a and b; empty if not connected.
// Returns the element ids of the path edges.
std::vector<std::size_t> forest_path(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
                                     std::size_t a, std::size_t b, std::vector<std::size_t>& via_elem,
                                     std::vector<std::size_t>& prev) {
    const std::size_t none = adj.size();
    std::fill(prev.begin(), prev.end(), none);
    std::vector<std::size_t> queue{a};
    prev[a] = a;
    for (std::size_t i = 0; i < queue.size() && prev[b] == none; ++i) {
        std::size_t x = queue[i];
        for (auto [y, elem] : adj[x]) {
            if (prev[y] == none) {
                prev[y] = x;
                via_elem[y] = elem;
                queue.push_back(y);
            }
        }
    }
    std::vector<std::size_t> path;
    if (prev[b] == none) return path;
    for (std::size_t x = b; x != a; x = prev[x]) path.push_back(via_elem[x]);
    return path;
}

}  // namespace

IntersectionResult matroid_intersection(const GraphicMatroid& m1, const PartitionMatroid& m2) {
    if (m1.ground_size() != m2.ground_size()) throw UsageError("matroid ground sets differ in size");
    const std::size_t n = m1.ground_size();
    const std::size_t none = n;
    std::vector<bool> in_set(n, false);
    std::vector<std::size_t> part_count(m2.num_parts(), 0);

    std::vector<std::size_t> via_elem(m1.num_super_vertices()), prev(m1.num_super_vertices());
    std::vector<bool> visited(n);
    while (true) {
        // exchange graph for the current common independent set
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(m1.num_super_vertices());
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_set[i]) continue;
            auto [a, b] = m1.ends(i);
            forest[a].emplace_back(b, i);
            forest[b].emplace_back(a, i);
        }
        std::vector<std::vector<std::size_t>> arcs(n);
        std::vector<bool> source(n, false), sink(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            if (in_set[x]) continue;
            auto [a, b] = m1.ends(x);
            if (a != b) {
                auto path = forest_path(forest, a, b, via_elem, prev);
                if (path.empty()) {
                    source[x] = true;
                } else {
                    for (std::size_t y : path) arcs[y].push_back(x);  // I - y + x stays a forest
                }
            }
            const std::size_t p = m2.part_of(x);
            if (part_count[p] < m2.capacity(p)) {
                sink[x] = true;
            } else {
                for (std::size_t y = 0; y < n; ++y) {
                    if (in_set[y] && m2.part_of(y) == p) arcs[x].push_back(y);
                }
            }
        }

        std::vector<std::size_t> pred(n, none);
        std::fill(visited.begin(), visited.end(), false);
        std::vector<std::size_t> queue;
        for (std::size_t x = 0; x < n; ++x) {
            if (source[x]) {
                visited[x] = true;
                queue.push_back(x);
            }
        }
        std::size_t end = none;
        for (std::size_t i = 0; i < queue.size() && end == none; ++i) {
            std::size_t x = queue[i];
            if (sink[x]) {
                end = x;
                break;
            }
            for (std::size_t y : arcs[x]) {
                if (!visited[y]) {
                    visited[y] = true;
                    pred[y] = x;
                    queue.push_back(y);
                }
            }
        }

        if (end == none) {
            IntersectionResult res;
            for (std::size_t i = 0; i < n; ++i) {
                if (in_set[i]) res.common.push_back(i);
            }
            res.reachable = visited;
            std::vector<std::size_t> reached, unreached;
            for (std::size_t i = 0; i < n; ++i) (visited[i] ? reached : unreached).push_back(i);
            res.rank1_unreached = m1.rank(unreached);
            res.rank2_reached = m2.rank(reached);
            if (res.rank1_unreached + res.rank2_reached != res.common.size()) {
                throw InvariantViolation("matroid intersection cut does not certify maximality");
            }
            return res;
        }
        for (std::size_t x = end; x != none; x = pred[x]) {
            const std::size_t p = m2.part_of(x);
            if (in_set[x]) {
                --part_count[p];
            } else {
                ++part_count[p];
            }
            in_set[x] = !in_set[x];
        }
    }
}

GraphicMatroid contracted_clique_matroid(const AuxGraph& aux) {
    std::vector<EdgeId> matching(aux.num_matching_edges());
    std::iota(matching.begin(), matching.end(), EdgeId{0});
    std::vector<EdgeId> ground(aux.num_clique_edges());
    std::iota(ground.begin(), ground.end(), static_cast<EdgeId>(aux.num_matching_edges()));
    return GraphicMatroid(aux.gprime(), matching, std::move(ground));
}

PartitionMatroid clique_partition_matroid(const AuxGraph& aux, const std::vector<std::size_t>& capacity) {
    if (capacity.size() != aux.base().num_vertices()) throw UsageError("one capacity per vertex required");
    std::vector<std::size_t> part(aux.num_clique_edges());
    for (std::size_t i = 0; i < part.size(); ++i) {
        part[i] = aux.clique_owner(static_cast<EdgeId>(aux.num_matching_edges() + i));
    }
    return PartitionMatroid(std::move(part), capacity);
}

AlphaBasis max_weight_basis_alpha(const AuxGraph& aux, const std::vector<Rational>& weight) {
    const MultiGraph& g = aux.base();
    if (weight.size() != g.num_vertices()) throw UsageError("one weight per vertex required");
    std::vector<EdgeId> order(aux.num_clique_edges());
    std::iota(order.begin(), order.end(), static_cast<EdgeId>(aux.num_matching_edges()));
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return weight[aux.clique_owner(a)] > weight[aux.clique_owner(b)];
    });

    UnionFind uf(aux.num_slots());
    AlphaBasis out;
    out.alpha.assign(g.num_vertices(), 0);
    for (EdgeId e = 0; e < aux.num_matching_edges(); ++e) {
        uf.unite(aux.gprime().edge(e).u, aux.gprime().edge(e).v);
        out.tree.edges.push_back(e);
    }
    for (EdgeId e : order) {
        if (uf.unite(aux.gprime().edge(e).u, aux.gprime().edge(e).v)) {
            out.tree.edges.push_back(e);
            ++out.alpha[aux.clique_owner(e)];
        }
    }
    std::sort(out.tree.edges.begin(), out.tree.edges.end());
    return out;
}

SplitOptimum max_weight_split(const AuxGraph& aux, const std::vector<Rational>& c) {
    std::vector<Rational> neg(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (c[v] < 0) throw UsageError("max_weight_split needs a nonnegative objective");
        neg[v] = -c[v];
    }
    AlphaBasis basis = max_weight_basis_alpha(aux, neg);
    SplitOptimum out;
    out.mu.resize(c.size());
    for (VertexId v = 0; v < c.size(); ++v) {
        out.mu[v] = aux.base().degree(v) - 1 - basis.alpha[v];
    }
    out.tree = std::move(basis.tree);
    return out;
}

}  // namespace ktrail
