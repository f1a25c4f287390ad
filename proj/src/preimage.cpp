#include "ktrail/preimage.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "ktrail/errors.hpp"

namespace ktrail {

MultiplicityVector multiplicities(const PreimageWitness& wit, std::size_t num_vertices) {
    MultiplicityVector lambda(num_vertices, 0);
    for (VertexId v : wit.phi) {
        if (v < num_vertices) ++lambda[v];
    }
    return lambda;
}

std::vector<VertexId> fiber(const PreimageWitness& wit, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w = 0; w < wit.phi.size(); ++w) {
        if (wit.phi[w] == v) out.push_back(w);
    }
    return out;
}

namespace {

WitnessCheck fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

WitnessCheck verify_witness(const MultiGraph& g, const PreimageWitness& wit, std::size_t k) {
    const std::size_t nodes = wit.h.num_vertices();
    if (wit.phi.size() != nodes) return fail("phi size differs from node count");
    if (wit.edge_map.size() != wit.h.num_edges()) return fail("edge_map size differs from H edge count");
    if (wit.h.num_edges() != g.num_edges()) return fail("H and G have different edge counts");

    std::vector<bool> hit(g.num_vertices(), false);
    for (VertexId w = 0; w < nodes; ++w) {
        if (wit.phi[w] >= g.num_vertices()) return fail("phi maps node " + std::to_string(w) + " outside V");
        hit[wit.phi[w]] = true;
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!hit[v]) return fail("phi is not onto: vertex " + std::to_string(v) + " has no preimage");
    }

    std::vector<bool> used(g.num_edges(), false);
    for (EdgeId f = 0; f < wit.h.num_edges(); ++f) {
        EdgeId e = wit.edge_map[f];
        if (e >= g.num_edges()) return fail("edge_map sends H-edge " + std::to_string(f) + " outside E");
        if (used[e]) return fail("edge_map is not injective at G-edge " + std::to_string(e));
        used[e] = true;
        VertexId a = wit.phi[wit.h.edge(f).u];
        VertexId b = wit.phi[wit.h.edge(f).v];
        VertexId x = g.edge(e).u;
        VertexId y = g.edge(e).v;
        if (!((a == x && b == y) || (a == y && b == x))) {
            return fail("H-edge " + std::to_string(f) + " does not map onto the endpoints of G-edge " +
                        std::to_string(e));
        }
    }

    if (nodes == 0 || !is_connected(wit.h)) return fail("H is not connected");
    if (wit.h.max_degree() > k) {
        return fail("H has max degree " + std::to_string(wit.h.max_degree()) + " > " + std::to_string(k));
    }
    return {true, {}};
}

PreimageWitness identity_witness(const MultiGraph& g) {
    PreimageWitness wit;
    wit.h = MultiGraph::unchecked(g.num_vertices(), g.edges());
    wit.phi.resize(g.num_vertices());
    std::iota(wit.phi.begin(), wit.phi.end(), VertexId{0});
    wit.edge_map.resize(g.num_edges());
    std::iota(wit.edge_map.begin(), wit.edge_map.end(), EdgeId{0});
    return wit;
}

namespace {

void require_valid(const MultiGraph& g, const PreimageWitness& wit) {
    auto check = verify_witness(g, wit, wit.h.max_degree());
    if (!check) throw UsageError("invalid witness: " + check.reason);
}

struct NonTreeEdge {
    EdgeId edge;
    VertexId from;  // node the DFS was expanding
    VertexId to;    // already-visited endpoint
};

// First edge outside the DFS tree rooted at node 0, scanning incidences in order.
std::optional<NonTreeEdge> first_non_tree_edge(const MultiGraph& h) {
    const std::size_t n = h.num_vertices();
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> parent_edge(n, h.num_edges());
    std::vector<std::size_t> cursor(n, 0);
    std::vector<bool> tree_edge(h.num_edges(), false);
    std::vector<VertexId> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        VertexId a = stack.back();
        const auto& inc = h.incidences(a);
        if (cursor[a] == inc.size()) {
            stack.pop_back();
            continue;
        }
        auto [f, b] = inc[cursor[a]++];
        if (tree_edge[f]) continue;
        if (visited[b]) return NonTreeEdge{f, a, b};
        visited[b] = true;
        tree_edge[f] = true;
        parent_edge[b] = f;
        stack.push_back(b);
    }
    return std::nullopt;
}

}  // namespace

PreimageWitness split_into_tree(const MultiGraph& g, const PreimageWitness& wit) {
    require_valid(g, wit);
    std::vector<Edge> edges = wit.h.edges();
    std::vector<VertexId> phi = wit.phi;
    MultiGraph h = wit.h;
    while (auto cyc = first_non_tree_edge(h)) {
        // Detach the cycle edge from `to` and hang it on a fresh copy of `to`.
        VertexId fresh = static_cast<VertexId>(phi.size());
        phi.push_back(phi[cyc->to]);
        edges[cyc->edge] = Edge{cyc->from, fresh};
        h = MultiGraph::unchecked(phi.size(), edges);
    }
    PreimageWitness out{std::move(h), std::move(phi), wit.edge_map};
    if (out.num_nodes() != g.num_edges() + 1) {
        throw InvariantViolation("split_into_tree produced a tree with the wrong node count");
    }
    return out;
}

PreimageWitness merge_to_multiplicity(const MultiGraph& g, const PreimageWitness& wit,
                                      const MultiplicityVector& target) {
    require_valid(g, wit);
    if (target.size() != g.num_vertices()) throw UsageError("target multiplicity vector has wrong size");
    auto current = multiplicities(wit, g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (target[v] < 1) throw UsageError("target multiplicity must be at least 1");
        if (target[v] > current[v]) {
            throw UsageError("target multiplicity " + std::to_string(target[v]) + " exceeds current " +
                             std::to_string(current[v]) + " at vertex " + std::to_string(v));
        }
    }

    // rep[w] = node w is merged into; merging always keeps the smaller id.
    std::vector<VertexId> rep(wit.num_nodes());
    std::iota(rep.begin(), rep.end(), VertexId{0});
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto nodes = fiber(wit, v);
        std::size_t surplus = current[v] - target[v];
        for (std::size_t i = 1; i <= surplus; ++i) rep[nodes[i]] = nodes[0];
    }
    std::vector<VertexId> new_id(wit.num_nodes(), 0);
    std::vector<VertexId> phi;
    for (VertexId w = 0; w < wit.num_nodes(); ++w) {
        if (rep[w] == w) {
            new_id[w] = static_cast<VertexId>(phi.size());
            phi.push_back(wit.phi[w]);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(wit.h.num_edges());
    for (const Edge& f : wit.h.edges()) edges.push_back({new_id[rep[f.u]], new_id[rep[f.v]]});
    return PreimageWitness{MultiGraph::unchecked(phi.size(), std::move(edges)), std::move(phi), wit.edge_map};
}

namespace {

// parent[x] = next node on the path from x to root.
std::vector<VertexId> parents_towards(const MultiGraph& tree, VertexId root) {
    const VertexId none = static_cast<VertexId>(tree.num_vertices());
    std::vector<VertexId> parent(tree.num_vertices(), none);
    std::vector<VertexId> queue{root};
    parent[root] = root;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId a = queue[i];
        for (auto [f, b] : tree.incidences(a)) {
            if (parent[b] == none) {
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    return parent;
}

struct Move {
    EdgeId edge;
    VertexId from;
    VertexId to;
};

std::optional<Move> find_balancing_move(const MultiGraph& g, const PreimageWitness& wit) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto nodes = fiber(wit, v);
        for (VertexId w : nodes) {
            for (VertexId w2 : nodes) {
                if (wit.h.degree(w) < wit.h.degree(w2) + 2) continue;
                auto parent = parents_towards(wit.h, w2);
                VertexId on_path = parent[w];
                std::optional<Incidence> best;
                for (const Incidence& inc : wit.h.incidences(w)) {
                    if (inc.neighbor == on_path) continue;
                    if (!best || inc.neighbor < best->neighbor) best = inc;
                }
                if (!best) throw InvariantViolation("no off-path neighbour for a balancing move");
                return Move{best->edge, w, w2};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

PreimageWitness balance_degrees(const MultiGraph& g, const PreimageWitness& wit, BalanceStats* stats) {
    require_valid(g, wit);
    if (!is_tree(wit.h)) throw UsageError("balance_degrees requires a tree witness");

    std::size_t potential = 0;
    for (std::size_t d : wit.h.degrees()) potential += d * d;
    if (stats) *stats = {0, potential};

    PreimageWitness cur = wit;
    std::vector<Edge> edges = cur.h.edges();
    std::size_t moves = 0;
    while (auto mv = find_balancing_move(g, cur)) {
        Edge& e = edges[mv->edge];
        if (e.u == mv->from) {
            e.u = mv->to;
        } else {
            e.v = mv->to;
        }
        cur.h = MultiGraph::unchecked(cur.phi.size(), edges);
        if (++moves > potential) throw InvariantViolation("balancing exceeded its potential bound");
    }
    if (stats) stats->moves = moves;
    return cur;
}

PreimageWitness to_subgraph_ids(const PreimageWitness& wit, const std::vector<EdgeId>& subset) {
    EdgeId top = 0;
    for (EdgeId e : subset) top = std::max(top, e);
    const EdgeId none = static_cast<EdgeId>(subset.size());
    std::vector<EdgeId> pos(static_cast<std::size_t>(top) + 1, none);
    for (EdgeId i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
    PreimageWitness out = wit;
    for (EdgeId& e : out.edge_map) {
        if (e >= pos.size() || pos[e] == none) {
            throw UsageError("witness maps onto edge " + std::to_string(e) + " outside the subgraph");
        }
        e = pos[e];
    }
    return out;
}

PreimageWitness from_subgraph_ids(const PreimageWitness& wit, const std::vector<EdgeId>& subset) {
    PreimageWitness out = wit;
    for (EdgeId& e : out.edge_map) e = subset.at(e);
    return out;
}

WitnessCheck verify_subgraph_witness(const MultiGraph& g, const std::vector<EdgeId>& subset,
                                     const PreimageWitness& wit, std::size_t k) {
    for (EdgeId e : subset) {
        if (e >= g.num_edges()) return fail("subgraph edge " + std::to_string(e) + " outside E");
    }
    PreimageWitness local;
    try {
        local = to_subgraph_ids(wit, subset);
    } catch (const UsageError& err) {
        return fail(err.what());
    }
    return verify_witness(spanning_subgraph(g, subset), local, k);
}

}  // namespace ktrail
