#include "ktrail/instances.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "ktrail/errors.hpp"

namespace ktrail {

bool is_simple_cubic(const MultiGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 3) return false;
    }
    std::vector<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return false;
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

MultiGraph gen_hardness_gadget(const MultiGraph& cubic, std::size_t k) {
    if (k < 2) throw UsageError("gadget needs k >= 2");
    if (!is_simple_cubic(cubic)) throw UsageError("gadget input must be a simple cubic graph");
    const std::size_t n = cubic.num_vertices();
    const std::size_t extra = k - 2;
    std::vector<Edge> edges = cubic.edges();
    for (VertexId v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < extra; ++i) {
            edges.push_back({v, static_cast<VertexId>(n + v * extra + i)});
        }
    }
    return MultiGraph(n + n * extra, std::move(edges));
}

WeightedMultiGraph gen_gap_instance(std::size_t k, std::size_t n, std::int64_t weight) {
    if (k < 3) throw UsageError("gap instance needs k >= 3");
    if (n < k) throw UsageError("gap instance needs n >= k");
    std::vector<Edge> edges;
    std::vector<std::size_t> ring_degree(n, 0);
    auto add = [&](VertexId a, VertexId b) {
        edges.push_back({a, b});
        ++ring_degree[a];
        ++ring_degree[b];
    };
    add(0, 1);
    for (VertexId i = 1; i + 1 < n; ++i) {
        add(i, i + 1);
        add(i, i + 1);
    }
    add(static_cast<VertexId>(n - 1), 0);

    std::size_t next = n;
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t pendants = 2 * k - 1 - ring_degree[v];
        // cross-check against the closed-form counts per ring position
        std::size_t expected = (v == 0) ? 2 * k - 3 : (v == 1 || v == n - 1) ? 2 * k - 4 : 2 * k - 5;
        if (pendants != expected) throw InvariantViolation("gap instance pendant count mismatch");
        for (std::size_t i = 0; i < pendants; ++i) edges.push_back({v, static_cast<VertexId>(next++)});
    }
    MultiGraph g(next, std::move(edges));
    std::vector<std::int64_t> w(g.num_edges(), weight);
    return WeightedMultiGraph(std::move(g), std::move(w));
}

MultiGraph gen_random_multigraph(std::size_t n, std::size_t m, double loop_p, double parallel_p,
                                 std::uint64_t seed) {
    if (n < 2) throw UsageError("random multigraph needs n >= 2");
    if (m + 1 < n) throw UsageError("random multigraph needs m >= n - 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };

    std::vector<VertexId> label(n);
    for (VertexId v = 0; v < n; ++v) label[v] = v;
    std::shuffle(label.begin(), label.end(), rng);

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({label[pick(i)], label[i]});
    while (edges.size() < m) {
        if (coin(rng) < loop_p) {
            VertexId v = static_cast<VertexId>(pick(n));
            edges.push_back({v, v});
        } else if (coin(rng) < parallel_p) {
            edges.push_back(edges[pick(edges.size())]);
        } else {
            VertexId a = static_cast<VertexId>(pick(n));
            VertexId b = static_cast<VertexId>(pick(n - 1));
            if (b >= a) ++b;
            edges.push_back({a, b});
        }
    }
    return MultiGraph(n, std::move(edges));
}

WeightedMultiGraph gen_random_weights(const MultiGraph& g, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
    if (lo > hi) throw UsageError("empty weight range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<std::int64_t> w(g.num_edges());
    for (auto& x : w) x = dist(rng);
    return WeightedMultiGraph(g, std::move(w));
}

namespace {

using CountMatrix = std::vector<std::vector<std::size_t>>;

CountMatrix count_matrix(const MultiGraph& g) {
    CountMatrix a(g.num_vertices(), std::vector<std::size_t>(g.num_vertices(), 0));
    for (const Edge& e : g.edges()) {
        ++a[e.u][e.v];
        if (!e.is_loop()) ++a[e.v][e.u];
    }
    return a;
}

// Vertex invariant: degree, loop count, sorted multiplicities to neighbours.
using VertexSignature = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;

std::vector<VertexSignature> signatures(const CountMatrix& a) {
    std::vector<VertexSignature> sig;
    for (std::size_t v = 0; v < a.size(); ++v) {
        std::size_t deg = 2 * a[v][v];
        std::vector<std::size_t> mult;
        for (std::size_t u = 0; u < a.size(); ++u) {
            if (u == v) continue;
            deg += a[v][u];
            if (a[v][u]) mult.push_back(a[v][u]);
        }
        std::sort(mult.begin(), mult.end());
        sig.emplace_back(deg, a[v][v], std::move(mult));
    }
    return sig;
}

bool extend_iso(const CountMatrix& a, const CountMatrix& b, const std::vector<VertexSignature>& sa,
                const std::vector<VertexSignature>& sb, std::vector<std::size_t>& map, std::vector<bool>& used,
                std::size_t v) {
    if (v == a.size()) return true;
    for (std::size_t x = 0; x < b.size(); ++x) {
        if (used[x] || sa[v] != sb[x]) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = a[v][u] == b[x][map[u]];
        if (!ok) continue;
        map[v] = x;
        used[x] = true;
        if (extend_iso(a, b, sa, sb, map, used, v + 1)) return true;
        used[x] = false;
    }
    return false;
}

struct Representative {
    CountMatrix counts;
    std::vector<VertexSignature> sig;
};

// Keeps one graph per isomorphism class, bucketed by the sorted signature list.
class IsoClasses {
public:
    bool insert(const MultiGraph& g) {
        Representative r{count_matrix(g), {}};
        r.sig = signatures(r.counts);
        auto key = r.sig;
        std::sort(key.begin(), key.end());
        auto& bucket = buckets_[key];
        for (const Representative& other : bucket) {
            std::vector<std::size_t> map(g.num_vertices());
            std::vector<bool> used(g.num_vertices(), false);
            if (extend_iso(r.counts, other.counts, r.sig, other.sig, map, used, 0)) return false;
        }
        bucket.push_back(std::move(r));
        return true;
    }

private:
    std::map<std::vector<VertexSignature>, std::vector<Representative>> buckets_;
};

void cubic_search(std::size_t n, std::vector<std::size_t>& deg, std::vector<std::vector<bool>>& adj,
                  std::vector<Edge>& edges, IsoClasses& classes, std::vector<MultiGraph>& out) {
    std::size_t v = 0;
    while (v < n && deg[v] == 3) ++v;
    if (v == n) {
        MultiGraph g(n, edges);
        if (classes.insert(g)) out.push_back(std::move(g));
        return;
    }
    // neighbours of v are added in increasing order so each labelled graph appears once
    std::size_t lowest = v + 1;
    for (const Edge& e : edges) {
        if (e.u == v) lowest = std::max<std::size_t>(lowest, e.v + 1);
    }
    for (std::size_t u = lowest; u < n; ++u) {
        if (deg[u] == 3 || adj[v][u]) continue;
        adj[v][u] = adj[u][v] = true;
        ++deg[u];
        ++deg[v];
        edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u)});
        cubic_search(n, deg, adj, edges, classes, out);
        edges.pop_back();
        --deg[u];
        --deg[v];
        adj[v][u] = adj[u][v] = false;
    }
}

}  // namespace

std::vector<MultiGraph> all_cubic_graphs(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw UsageError("cubic graphs need an even n >= 4");
    std::vector<std::size_t> deg(n, 0);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    IsoClasses classes;
    std::vector<MultiGraph> out;
    cubic_search(n, deg, adj, edges, classes, out);
    return out;
}

std::vector<MultiGraph> all_connected_multigraphs(std::size_t n, std::size_t m, bool loops) {
    if (n < 2) throw UsageError("multigraphs need n >= 2");
    std::vector<Edge> kinds;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a; b < n; ++b) {
            if (a != b || loops) kinds.push_back({a, b});
        }
    }
    IsoClasses classes;
    std::vector<MultiGraph> out;
    std::vector<std::size_t> pick(m, 0);
    // every multiset of m edge kinds, as a non-decreasing index sequence
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t i : pick) edges.push_back(kinds[i]);
        MultiGraph g(n, std::move(edges));
        if (is_connected(g) && classes.insert(g)) out.push_back(std::move(g));
        std::size_t pos = m;
        while (pos > 0 && pick[pos - 1] + 1 == kinds.size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t i = pos; i < m; ++i) pick[i] = pick[pos - 1];
    }
    return out;
}

}  // namespace ktrail
