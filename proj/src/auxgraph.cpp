#include "ktrail/auxgraph.hpp"

#include <algorithm>
#include <sstream>

#include "ktrail/errors.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

AuxGraph::AuxGraph(MultiGraph g) : g_(std::move(g)) {
    const std::size_t n = g_.num_vertices();
    const std::size_t m = g_.num_edges();
    edge_slots_.assign(m, {0, 0});
    std::vector<int> seen(m, 0);
    slot_begin_.reserve(n + 1);
    for (VertexId v = 0; v < n; ++v) {
        slot_begin_.push_back(static_cast<SlotId>(slot_vertex_.size()));
        for (const Incidence& inc : g_.incidences(v)) {
            SlotId s = static_cast<SlotId>(slot_vertex_.size());
            slot_vertex_.push_back(v);
            slot_edge_.push_back(inc.edge);
            const Edge& e = g_.edge(inc.edge);
            // a loop is seen twice at v; the first visit takes the u side
            int side = e.is_loop() ? seen[inc.edge]++ : (e.u == v ? 0 : 1);
            edge_slots_[inc.edge][side] = s;
        }
    }
    slot_begin_.push_back(static_cast<SlotId>(slot_vertex_.size()));

    std::vector<Edge> edges;
    edges.reserve(m);
    for (EdgeId e = 0; e < m; ++e) edges.push_back({edge_slots_[e][0], edge_slots_[e][1]});
    clique_begin_.reserve(n + 1);
    for (VertexId v = 0; v < n; ++v) {
        clique_begin_.push_back(static_cast<EdgeId>(edges.size()));
        for (SlotId a = slot_begin_[v]; a < slot_begin_[v + 1]; ++a) {
            for (SlotId b = a + 1; b < slot_begin_[v + 1]; ++b) {
                edges.push_back({a, b});
                clique_owner_.push_back(v);
            }
        }
    }
    clique_begin_.push_back(static_cast<EdgeId>(edges.size()));
    gprime_ = MultiGraph::unchecked(slot_vertex_.size(), std::move(edges));
}

std::vector<EdgeId> AuxGraph::clique_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = clique_begin_.at(v); e < clique_begin_.at(v + 1); ++e) out.push_back(e);
    return out;
}

EdgeId AuxGraph::clique_edge_between(SlotId a, SlotId b) const {
    if (a == b || slot_vertex(a) != slot_vertex(b)) {
        throw UsageError("slots " + std::to_string(a) + " and " + std::to_string(b) + " share no clique edge");
    }
    if (a > b) std::swap(a, b);
    const VertexId v = slot_vertex(a);
    const std::size_t d = slot_count(v);
    const std::size_t i = a - slot_begin_[v];
    const std::size_t j = b - slot_begin_[v];
    // row-major index of (i, j), i < j, in the strict upper triangle of a d x d matrix
    const std::size_t idx = i * (2 * d - i - 1) / 2 + (j - i - 1);
    return static_cast<EdgeId>(clique_begin_[v] + idx);
}

AuxGraph build_aux(const MultiGraph& g) {
    if (!is_connected(g)) throw UsageError("auxiliary graph requires a connected graph");
    return AuxGraph(g);
}

bool AuxTree::contains_all_matching(const AuxGraph& aux) const {
    std::size_t count = 0;
    for (EdgeId e : edges) count += aux.is_matching_edge(e) ? 1 : 0;
    return count == aux.num_matching_edges();
}

bool is_spanning_tree(const AuxGraph& aux, const std::vector<EdgeId>& edges) {
    if (edges.size() + 1 != aux.num_slots()) return false;
    UnionFind uf(aux.num_slots());
    for (EdgeId e : edges) {
        if (e >= aux.gprime().num_edges()) return false;
        if (!uf.unite(aux.gprime().edge(e).u, aux.gprime().edge(e).v)) return false;
    }
    return uf.num_sets() == 1;
}

std::vector<std::size_t> alpha_of(const AuxGraph& aux, const AuxTree& t) {
    std::vector<std::size_t> alpha(aux.base().num_vertices(), 0);
    for (EdgeId e : t.edges) {
        if (!aux.is_matching_edge(e)) ++alpha[aux.clique_owner(e)];
    }
    return alpha;
}

AuxPreimage tree_to_witness(const AuxGraph& aux, const AuxTree& t) {
    if (!is_spanning_tree(aux, t.edges)) throw UsageError("tree_to_witness: edge set is not a spanning tree of G'");

    UnionFind uf(aux.num_slots());
    std::vector<EdgeId> image;
    for (EdgeId e : t.edges) {
        if (aux.is_matching_edge(e)) {
            image.push_back(e);
        } else {
            uf.unite(aux.gprime().edge(e).u, aux.gprime().edge(e).v);
        }
    }
    std::sort(image.begin(), image.end());

    // nodes in order of their smallest slot
    const VertexId none = static_cast<VertexId>(aux.num_slots());
    std::vector<VertexId> root_node(aux.num_slots(), none);
    std::vector<VertexId> slot_node(aux.num_slots());
    std::vector<VertexId> phi;
    for (SlotId s = 0; s < aux.num_slots(); ++s) {
        std::size_t r = uf.find(s);
        if (root_node[r] == none) {
            root_node[r] = static_cast<VertexId>(phi.size());
            phi.push_back(aux.slot_vertex(s));
        }
        slot_node[s] = root_node[r];
    }

    std::vector<Edge> hedges;
    std::vector<EdgeId> edge_map;
    for (std::size_t i = 0; i < image.size(); ++i) {
        const auto& slots = aux.edge_slots(image[i]);
        hedges.push_back({slot_node[slots[0]], slot_node[slots[1]]});
        edge_map.push_back(image[i]);
    }
    AuxPreimage out;
    out.witness = PreimageWitness{MultiGraph::unchecked(phi.size(), std::move(hedges)), std::move(phi),
                                  std::move(edge_map)};
    out.image_edges = std::move(image);
    out.slot_node = std::move(slot_node);
    return out;
}

AuxTree witness_to_tree(const AuxGraph& aux, const PreimageWitness& wit) {
    const MultiGraph& g = aux.base();
    auto check = verify_witness(g, wit, wit.h.max_degree());
    if (!check) throw UsageError("witness_to_tree: invalid witness: " + check.reason);
    if (!is_tree(wit.h)) throw UsageError("witness_to_tree requires a tree witness");

    std::vector<std::vector<SlotId>> node_slots(wit.num_nodes());
    for (EdgeId f = 0; f < wit.h.num_edges(); ++f) {
        const Edge& hf = wit.h.edge(f);
        const EdgeId e = wit.edge_map[f];
        const auto& slots = aux.edge_slots(e);
        bool straight = g.edge(e).is_loop() || wit.phi[hf.u] == g.edge(e).u;
        node_slots[hf.u].push_back(straight ? slots[0] : slots[1]);
        node_slots[hf.v].push_back(straight ? slots[1] : slots[0]);
    }

    AuxTree t;
    for (EdgeId e = 0; e < g.num_edges(); ++e) t.edges.push_back(e);
    for (auto& slots : node_slots) {
        std::sort(slots.begin(), slots.end());
        for (std::size_t i = 1; i < slots.size(); ++i) {
            t.edges.push_back(aux.clique_edge_between(slots[i - 1], slots[i]));
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    if (!is_spanning_tree(aux, t.edges)) throw InvariantViolation("witness_to_tree produced a non-tree");
    return t;
}

std::string render_aux_dump(const AuxGraph& aux) {
    std::ostringstream os;
    os << render_graph(aux.gprime());
    os << "# edges 0.." << aux.num_matching_edges() << " (exclusive) are the matching edges\n";
    for (SlotId s = 0; s < aux.num_slots(); ++s) {
        os << "# slot " << s << " -> " << aux.slot_vertex(s) << " (edge " << aux.slot_origin(s) << ")\n";
    }
    return os.str();
}

std::string render_aux_dot(const AuxGraph& aux, const AuxTree* highlight) {
    std::vector<bool> in_tree(aux.gprime().num_edges(), false);
    if (highlight) {
        for (EdgeId e : highlight->edges) in_tree.at(e) = true;
    }
    std::ostringstream os;
    os << "graph aux {\n";
    for (VertexId v = 0; v < aux.base().num_vertices(); ++v) {
        os << "  subgraph cluster_" << v << " {\n    label=\"" << v << "\"; style=dashed;\n";
        for (std::size_t i = 0; i < aux.slot_count(v); ++i) {
            SlotId s = aux.first_slot(v) + static_cast<SlotId>(i);
            os << "    s" << s << " [label=\"" << v << "_e" << aux.slot_origin(s) << "\"];\n";
        }
        os << "  }\n";
    }
    for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
        const Edge& x = aux.gprime().edge(e);
        os << "  s" << x.u << " -- s" << x.v << " [";
        os << (aux.is_matching_edge(e) ? "style=bold" : "style=solid, color=gray");
        if (in_tree[e]) os << ", penwidth=3, color=black";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ktrail
