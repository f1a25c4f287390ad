#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ktrail {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    bool is_loop() const noexcept { return u == v; }
    bool operator==(const Edge&) const = default;
    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

/// An incidence of an edge at a vertex. A loop contributes two incidences.
struct Incidence {
    EdgeId edge;
    VertexId neighbor;

    bool operator==(const Incidence&) const = default;
};

/// Undirected multigraph with loops and parallel edges. Vertices and edges
/// carry dense ids; parallel edges are never merged. Immutable once built.
class MultiGraph {
public:
    /// Requires n >= 2 and every endpoint < n.
    MultiGraph(std::size_t n, std::vector<Edge> edges);

    /// Same as the constructor but without the n >= 2 scope rule; used for
    /// preimage graphs and auxiliary structures that may legitimately be tiny.
    static MultiGraph unchecked(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Loops count twice.
    std::size_t degree(VertexId v) const;
    std::vector<std::size_t> degrees() const;
    std::size_t max_degree() const;

    /// Incidences of v in edge-id order; a loop appears twice in a row.
    const std::vector<Incidence>& incidences(VertexId v) const;

    bool operator==(const MultiGraph&) const = default;

private:
    MultiGraph() = default;
    void build_adjacency();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

/// Integer edge weights aligned with edge ids.
struct WeightedMultiGraph {
    MultiGraph graph;
    std::vector<std::int64_t> weight;

    WeightedMultiGraph(MultiGraph g, std::vector<std::int64_t> w);

    std::int64_t total_weight(const std::vector<EdgeId>& edges) const;
};

bool is_connected(const MultiGraph& g);

/// Connectivity of the spanning subgraph (V, edges).
bool is_connected_spanning(const MultiGraph& g, const std::vector<EdgeId>& edges);

bool is_tree(const MultiGraph& g);

/// Subgraph (V, edges) with edges renumbered 0..|edges|-1 in the given order.
MultiGraph spanning_subgraph(const MultiGraph& g, const std::vector<EdgeId>& edges);

std::size_t count_odd_degree_vertices(const MultiGraph& g);

// Text format: "p ktrail <n> <m>" then m lines "e <u> <v> [w]". '#' starts a comment.

/// Parsed file; `weights` is set iff every edge line carries a weight.
struct ParsedGraph {
    MultiGraph graph;
    std::optional<std::vector<std::int64_t>> weights;
};

ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);
WeightedMultiGraph require_weighted(ParsedGraph parsed);

std::string render_graph(const MultiGraph& g);
std::string render_graph(const WeightedMultiGraph& g);

/// DOT export; parallel edges stay parallel, loops become self-edges.
std::string render_dot(const MultiGraph& g, std::string_view name = "G");

}  // namespace ktrail
