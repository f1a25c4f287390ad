#include "ktrail/containment.hpp"

#include <algorithm>
#include <map>

#include "ktrail/errors.hpp"
#include "ktrail/recognition.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

std::optional<Cycle> shortest_cycle(const MultiGraph& g, const std::vector<EdgeId>& allowed) {
    std::vector<EdgeId> sorted = allowed;
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId e : sorted) {
        if (g.edge(e).is_loop()) return Cycle{{g.edge(e).u}, {e}};
    }
    std::map<std::pair<VertexId, VertexId>, EdgeId> first_between;
    for (EdgeId e : sorted) {
        const Edge& x = g.edge(e);
        auto key = std::minmax(x.u, x.v);
        auto [it, fresh] = first_between.emplace(key, e);
        if (!fresh) return Cycle{{x.u, x.v}, {it->second, e}};
    }

    // simple graph from here on: close each edge by a shortest path avoiding it
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId e : sorted) {
        adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
        adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
    }
    std::optional<Cycle> best;
    for (EdgeId e : sorted) {
        const VertexId a = g.edge(e).u, b = g.edge(e).v;
        std::vector<VertexId> prev(n, static_cast<VertexId>(n));
        std::vector<EdgeId> via(n);
        std::vector<VertexId> queue{b};
        prev[b] = b;
        for (std::size_t i = 0; i < queue.size() && prev[a] == n; ++i) {
            for (auto [y, f] : adj[queue[i]]) {
                if (f == e || prev[y] != n) continue;
                prev[y] = queue[i];
                via[y] = f;
                queue.push_back(y);
            }
        }
        if (prev[a] == n) continue;
        // walk a -> ... -> b backwards gives the cycle a, b, ..., a
        Cycle c{{a}, {e}};
        std::vector<VertexId> path_vertices;
        std::vector<EdgeId> path_edges;
        for (VertexId x = a; x != b; x = prev[x]) {
            path_edges.push_back(via[x]);
            path_vertices.push_back(prev[x]);
        }
        // path_vertices runs from a's neighbour towards b; reverse to start at b
        std::reverse(path_vertices.begin(), path_vertices.end());
        std::reverse(path_edges.begin(), path_edges.end());
        for (VertexId x : path_vertices) c.vertices.push_back(x);
        for (EdgeId f : path_edges) c.edges.push_back(f);
        if (!best || c.edges.size() < best->edges.size()) best = std::move(c);
    }
    return best;
}

namespace {

void require_cycle(const MultiGraph& g, const std::vector<EdgeId>& u, const Cycle& c) {
    const std::size_t l = c.edges.size();
    if (l == 0 || c.vertices.size() != l) throw UsageError("cycle needs one vertex per edge");
    std::vector<bool> used(g.num_edges(), false);
    for (EdgeId e : u) used.at(e) = true;
    std::vector<bool> seen_vertex(g.num_vertices(), false);
    for (std::size_t i = 0; i < l; ++i) {
        const EdgeId e = c.edges[i];
        if (e >= g.num_edges()) throw UsageError("cycle edge out of range");
        if (used[e]) throw UsageError("cycle edge " + std::to_string(e) + " is already used");
        used[e] = true;
        const VertexId a = c.vertices[i], b = c.vertices[(i + 1) % l];
        const Edge& x = g.edge(e);
        if (!((x.u == a && x.v == b) || (x.u == b && x.v == a))) {
            throw UsageError("cycle edge " + std::to_string(e) + " does not join consecutive cycle vertices");
        }
        if (seen_vertex.at(a)) throw UsageError("cycle repeats a vertex");
        seen_vertex[a] = true;
    }
}

VertexId min_degree_node(const std::vector<std::size_t>& degree, const std::vector<VertexId>& phi, VertexId v,
                         std::size_t limit) {
    VertexId best = static_cast<VertexId>(limit);
    for (VertexId w = 0; w < limit; ++w) {
        if (phi[w] == v && (best == limit || degree[w] < degree[best])) best = w;
    }
    if (best == limit) throw InvariantViolation("empty fiber");
    return best;
}

std::vector<std::size_t> node_degrees(std::size_t nodes, const std::vector<Edge>& edges) {
    std::vector<std::size_t> deg(nodes, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

}  // namespace

SubgraphWitness absorb_cycle(const MultiGraph& g, const std::vector<EdgeId>& u, const PreimageWitness& wit,
                             const Cycle& cycle, std::size_t k) {
    if (k < 2) throw UsageError("absorbing a cycle needs k >= 2");
    require_cycle(g, u, cycle);
    auto check = verify_subgraph_witness(g, u, wit, k);
    if (!check) throw UsageError("absorb_cycle: invalid witness: " + check.reason);

    PreimageWitness tree = split_into_tree(spanning_subgraph(g, u), to_subgraph_ids(wit, u));

    std::vector<EdgeId> grown = u;
    grown.insert(grown.end(), cycle.edges.begin(), cycle.edges.end());

    const std::size_t l = cycle.edges.size();
    const std::size_t old_nodes = tree.num_nodes();
    std::vector<VertexId> phi = tree.phi;
    std::vector<Edge> edges = tree.h.edges();
    std::vector<EdgeId> edge_map = tree.edge_map;
    for (std::size_t i = 0; i < l; ++i) phi.push_back(cycle.vertices[i]);
    std::vector<std::size_t> deg = node_degrees(phi.size(), edges);
    for (std::size_t i = 0; i < l; ++i) {
        const VertexId w = min_degree_node(deg, phi, cycle.vertices[i], old_nodes);
        const VertexId fresh = static_cast<VertexId>(old_nodes + (i + 1) % l);
        edges.push_back({w, fresh});
        edge_map.push_back(static_cast<EdgeId>(u.size() + i));
        ++deg[w];
        ++deg[fresh];
    }
    PreimageWitness grown_wit{MultiGraph::unchecked(phi.size(), std::move(edges)), std::move(phi), std::move(edge_map)};
    MultiGraph sub = spanning_subgraph(g, grown);
    PreimageWitness balanced = balance_degrees(sub, grown_wit);
    auto after = verify_witness(sub, balanced, k);
    if (!after) throw InvariantViolation("absorb_cycle lost the degree bound: " + after.reason);
    return SubgraphWitness{grown, from_subgraph_ids(balanced, grown)};
}

Extension extend_to_full_trail(const MultiGraph& g, const std::vector<EdgeId>& u, const PreimageWitness& wit,
                               std::size_t k) {
    if (k < 1) throw UsageError("k must be at least 1");
    if (!is_connected_spanning(g, u)) throw UsageError("subgraph is not connected and spanning");
    auto check = verify_subgraph_witness(g, u, wit, k);
    if (!check) throw UsageError("extend_to_full_trail: invalid witness: " + check.reason);

    Extension out;
    if (k == 1) {
        // a 1-trail is a single edge, so G lives on two vertices and every
        // such connected multigraph has at most two odd vertices
        RecognitionResult r = is_k_trail(g, 2);
        if (!r.yes) throw InvariantViolation("two-vertex multigraph is not a 2-trail");
        out.witness = std::move(*r.witness);
        return out;
    }

    std::vector<EdgeId> cur = u;
    PreimageWitness cur_wit = wit;
    auto remaining = [&]() {
        std::vector<bool> used(g.num_edges(), false);
        for (EdgeId e : cur) used[e] = true;
        std::vector<EdgeId> rest;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (!used[e]) rest.push_back(e);
        }
        return rest;
    };

    while (auto cycle = shortest_cycle(g, remaining())) {
        SubgraphWitness next = absorb_cycle(g, cur, cur_wit, *cycle, k);
        cur = std::move(next.edges);
        cur_wit = std::move(next.witness);
        ++out.cycles_absorbed;
    }
    if (!is_tree(cur_wit.h)) {
        cur_wit = from_subgraph_ids(split_into_tree(spanning_subgraph(g, cur), to_subgraph_ids(cur_wit, cur)), cur);
    }

    // leaf phase on the forest E \ U
    std::vector<VertexId> phi = cur_wit.phi;
    std::vector<Edge> edges = cur_wit.h.edges();
    std::vector<EdgeId> edge_map = cur_wit.edge_map;
    std::vector<std::size_t> deg = node_degrees(phi.size(), edges);
    std::vector<EdgeId> rest = remaining();
    std::vector<bool> gone(g.num_edges(), true);
    for (EdgeId e : rest) gone[e] = false;
    std::size_t left = rest.size();
    while (left > 0) {
        std::vector<std::size_t> forest_deg(g.num_vertices(), 0);
        std::vector<EdgeId> only(g.num_vertices(), 0);
        for (EdgeId e : rest) {
            if (gone[e]) continue;
            ++forest_deg[g.edge(e).u];
            ++forest_deg[g.edge(e).v];
            only[g.edge(e).u] = only[g.edge(e).v] = e;
        }
        VertexId leaf = 0;
        while (leaf < g.num_vertices() && forest_deg[leaf] != 1) ++leaf;
        if (leaf == g.num_vertices()) throw InvariantViolation("remaining edges do not form a forest");
        const EdgeId e = only[leaf];
        const VertexId other = g.edge(e).other(leaf);
        const VertexId attach = min_degree_node(deg, phi, leaf, phi.size());
        const VertexId fresh = static_cast<VertexId>(phi.size());
        phi.push_back(other);
        deg.push_back(1);
        ++deg[attach];
        edges.push_back({attach, fresh});
        edge_map.push_back(e);
        out.touched.push_back(attach);
        gone[e] = true;
        --left;
        ++out.leaves_attached;
    }
    out.witness = PreimageWitness{MultiGraph::unchecked(phi.size(), std::move(edges)), std::move(phi),
                                  std::move(edge_map)};
    auto final_check = verify_witness(g, out.witness, k + 1);
    if (!final_check) throw InvariantViolation("extension failed verification: " + final_check.reason);
    for (VertexId w = 0; w < out.witness.num_nodes(); ++w) {
        if (out.witness.h.degree(w) == k + 1 &&
            std::find(out.touched.begin(), out.touched.end(), w) == out.touched.end()) {
            throw InvariantViolation("a node reached degree k+1 outside the leaf phase");
        }
    }
    return out;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.edge(e).is_loop()) continue;
        UnionFind uf(g.num_vertices());
        for (EdgeId f = 0; f < g.num_edges(); ++f) {
            if (f != e) uf.unite(g.edge(f).u, g.edge(f).v);
        }
        if (uf.find(g.edge(e).u) != uf.find(g.edge(e).v)) out.push_back(e);
    }
    return out;
}

ContainmentAnswer oracle_contains_k_trail(const MultiGraph& g, std::size_t k, std::size_t max_free_edges) {
    if (k < 1) throw UsageError("k must be at least 1");
    ContainmentAnswer out;
    if (!is_connected(g)) return out;
    const std::vector<EdgeId> forced = bridges(g);
    std::vector<bool> is_forced(g.num_edges(), false);
    for (EdgeId e : forced) is_forced[e] = true;
    std::vector<EdgeId> free;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!is_forced[e]) free.push_back(e);
    }
    if (free.size() > max_free_edges) {
        throw SizeGuardError("containment oracle: " + std::to_string(free.size()) + " non-bridge edges exceed the guard of " +
                             std::to_string(max_free_edges));
    }
    const std::size_t need = g.num_vertices() - 1;
    const std::size_t start = need > forced.size() ? need - forced.size() : 0;
    for (std::size_t size = start; size <= free.size(); ++size) {
        // lexicographic combinations of `size` free edges
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<EdgeId> subset = forced;
            for (std::size_t i : idx) subset.push_back(free[i]);
            std::sort(subset.begin(), subset.end());
            if (is_connected_spanning(g, subset)) {
                ++out.subsets_tested;
                MultiGraph sub = spanning_subgraph(g, subset);
                RecognitionResult r = is_k_trail(sub, k);
                if (r.yes) {
                    out.contains = true;
                    out.witness = from_subgraph_ids(*r.witness, subset);
                    out.subset = std::move(subset);
                    return out;
                }
            }
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == free.size() - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

}  // namespace ktrail
