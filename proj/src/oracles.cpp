#include "ktrail/oracles.hpp"

#include <algorithm>

#include "ktrail/errors.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

ContractedAux contract_matching(const AuxGraph& aux) {
    ContractedAux out;
    std::vector<Edge> edges;
    for (EdgeId e = static_cast<EdgeId>(aux.num_matching_edges()); e < aux.gprime().num_edges(); ++e) {
        const Edge& x = aux.gprime().edge(e);
        const EdgeId a = aux.slot_origin(x.u), b = aux.slot_origin(x.v);
        if (a == b) continue;  // the two slots of a loop: a self-loop after contraction
        edges.push_back({a, b});
        out.origin.push_back(e);
    }
    out.graph = MultiGraph::unchecked(aux.num_matching_edges(), std::move(edges));
    return out;
}

namespace {

bool connectable(const UnionFind& base, const MultiGraph& g, std::size_t from) {
    UnionFind uf = base;
    for (EdgeId e = static_cast<EdgeId>(from); e < g.num_edges(); ++e) uf.unite(g.edge(e).u, g.edge(e).v);
    return uf.num_sets() == 1;
}

struct TreeWalker {
    const MultiGraph& g;
    const std::function<bool(const std::vector<EdgeId>&)>& visit;
    std::vector<EdgeId> chosen;
    std::size_t count = 0;

    // returns false once the visitor asked to stop
    bool run(std::size_t i, const UnionFind& uf) {
        if (chosen.size() + 1 == g.num_vertices()) {
            ++count;
            return visit(chosen);
        }
        if (i == g.num_edges()) return true;
        UnionFind probe = uf;
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        if (probe.find(e.u) != probe.find(e.v)) {
            UnionFind with = uf;
            with.unite(e.u, e.v);
            chosen.push_back(static_cast<EdgeId>(i));
            bool go = run(i + 1, with);
            chosen.pop_back();
            if (!go) return false;
        }
        if (connectable(uf, g, i + 1)) return run(i + 1, uf);
        return true;
    }
};

// Search over spanning trees of G'/E-bar that keeps per-vertex clique state
// and lets a rule veto adding a clique edge.
class CliqueTreeSearch {
public:
    using Rule = std::function<bool(VertexId v, std::size_t merged_size, std::size_t count_after)>;

    CliqueTreeSearch(const AuxGraph& aux, Rule rule) : aux_(aux), c_(contract_matching(aux)), rule_(std::move(rule)) {}

    bool exists() {
        if (c_.graph.num_vertices() == 0) return false;
        UnionFind super(c_.graph.num_vertices());
        UnionFind slots(aux_.num_slots());
        std::vector<std::size_t> size(aux_.num_slots(), 1);
        std::vector<std::size_t> count(aux_.base().num_vertices(), 0);
        return run(0, 0, super, slots, size, count);
    }

private:
    bool run(std::size_t i, std::size_t chosen, const UnionFind& super, const UnionFind& slots,
             const std::vector<std::size_t>& size, const std::vector<std::size_t>& count) {
        if (chosen + 1 == c_.graph.num_vertices()) return true;
        if (i == c_.graph.num_edges()) return false;
        const Edge& e = c_.graph.edge(static_cast<EdgeId>(i));
        UnionFind sp = super;
        if (sp.find(e.u) != sp.find(e.v)) {
            const Edge& ge = aux_.gprime().edge(c_.origin[i]);
            const VertexId v = aux_.slot_vertex(ge.u);
            UnionFind sl = slots;
            const std::size_t merged = size[sl.find(ge.u)] + size[sl.find(ge.v)];
            if (rule_(v, merged, count[v] + 1)) {
                sp.unite(e.u, e.v);
                sl.unite(ge.u, ge.v);
                std::vector<std::size_t> sz = size;
                sz[sl.find(ge.u)] = merged;
                std::vector<std::size_t> cnt = count;
                ++cnt[v];
                if (run(i + 1, chosen + 1, sp, sl, sz, cnt)) return true;
            }
        }
        if (connectable(super, c_.graph, i + 1)) return run(i + 1, chosen, super, slots, size, count);
        return false;
    }

    const AuxGraph& aux_;
    ContractedAux c_;
    Rule rule_;
};

}  // namespace

std::size_t enumerate_spanning_trees(const MultiGraph& g, const std::function<bool(const std::vector<EdgeId>&)>& visit,
                                     std::size_t max_vertices) {
    if (g.num_vertices() > max_vertices) {
        throw SizeGuardError("tree enumeration limited to " + std::to_string(max_vertices) + " vertices");
    }
    if (g.num_vertices() == 0) return 0;
    UnionFind uf(g.num_vertices());
    if (!connectable(uf, g, 0)) return 0;
    TreeWalker w{g, visit, {}, 0};
    w.run(0, uf);
    return w.count;
}

std::size_t oracle_min_k(const MultiGraph& g, std::size_t max_edges) {
    if (g.num_edges() > max_edges) throw SizeGuardError("min-k oracle limited to " + std::to_string(max_edges) + " edges");
    if (!is_connected(g)) throw UsageError("oracle needs a connected graph");
    const AuxGraph aux(g);
    for (std::size_t k = 1; k <= g.max_degree(); ++k) {
        CliqueTreeSearch search(aux, [k](VertexId, std::size_t merged, std::size_t) { return merged <= k; });
        if (search.exists()) return k;
    }
    throw InvariantViolation("no spanning tree found within the maximum degree");
}

bool oracle_feasible_split(const MultiGraph& g, const SplitVector& mu, std::size_t max_edges) {
    if (g.num_edges() > max_edges) throw SizeGuardError("split oracle limited to " + std::to_string(max_edges) + " edges");
    if (!is_connected(g)) throw UsageError("oracle needs a connected graph");
    if (mu.size() != g.num_vertices()) throw UsageError("split vector needs one entry per vertex");
    std::vector<std::size_t> cap(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (mu[v] + 1 > g.degree(v)) return false;
        cap[v] = g.degree(v) - 1 - mu[v];
    }
    const AuxGraph aux(g);
    CliqueTreeSearch search(aux, [&cap](VertexId v, std::size_t, std::size_t count) { return count <= cap[v]; });
    return search.exists();
}

bool has_hamiltonian_path(const MultiGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 20) throw SizeGuardError("Hamiltonian path oracle limited to 20 vertices");
    if (n == 0) return false;
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    // reach[mask] = set of end vertices of paths covering exactly mask
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    for (std::size_t v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        if (!reach[mask]) continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (!(reach[mask] >> v & 1)) continue;
            std::uint32_t next = adj[v] & ~static_cast<std::uint32_t>(mask);
            for (std::size_t u = 0; u < n; ++u) {
                if (next >> u & 1) reach[mask | (std::size_t{1} << u)] |= 1u << u;
            }
        }
    }
    return reach[full] != 0;
}

ExhaustiveCut exhaustive_separation(std::size_t num_vertices,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const std::vector<Rational>& x) {
    if (num_vertices > 20) throw SizeGuardError("exhaustive separation limited to 20 vertices");
    ExhaustiveCut best;
    best.violation = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << num_vertices); ++mask) {
        const long size = __builtin_popcountll(mask);
        if (size < 2) continue;
        Rational inside = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((mask >> edges[i].first & 1) && (mask >> edges[i].second & 1)) inside += x[i];
        }
        Rational v = inside - size + 1;
        if (v > best.violation) {
            best.violation = v;
            best.set.clear();
            for (std::size_t s = 0; s < num_vertices; ++s) {
                if (mask >> s & 1) best.set.push_back(s);
            }
        }
    }
    return best;
}

}  // namespace ktrail
