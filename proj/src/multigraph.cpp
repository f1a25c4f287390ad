#include "ktrail/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ktrail/errors.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw UsageError("multigraph needs at least 2 vertices");
    build_adjacency();
}

MultiGraph MultiGraph::unchecked(std::size_t n, std::vector<Edge> edges) {
    MultiGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void MultiGraph::build_adjacency() {
    adj_.assign(n_, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        if (u >= n_ || v >= n_) {
            throw UsageError("edge " + std::to_string(e) + " references a vertex outside 0.." +
                             std::to_string(n_ == 0 ? 0 : n_ - 1));
        }
        adj_[u].push_back({e, v});
        adj_[v].push_back({e, u});
    }
}

std::size_t MultiGraph::degree(VertexId v) const { return incidences(v).size(); }

std::vector<std::size_t> MultiGraph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (VertexId v = 0; v < n_; ++v) d[v] = adj_[v].size();
    return d;
}

std::size_t MultiGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& a : adj_) best = std::max(best, a.size());
    return best;
}

const std::vector<Incidence>& MultiGraph::incidences(VertexId v) const {
    if (v >= n_) throw UsageError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

WeightedMultiGraph::WeightedMultiGraph(MultiGraph g, std::vector<std::int64_t> w)
    : graph(std::move(g)), weight(std::move(w)) {
    if (weight.size() != graph.num_edges()) throw UsageError("one weight per edge required");
}

std::int64_t WeightedMultiGraph::total_weight(const std::vector<EdgeId>& edges) const {
    std::int64_t s = 0;
    for (EdgeId e : edges) s += weight.at(e);
    return s;
}

bool is_connected_spanning(const MultiGraph& g, const std::vector<EdgeId>& edges) {
    UnionFind uf(g.num_vertices());
    for (EdgeId e : edges) uf.unite(g.edge(e).u, g.edge(e).v);
    return uf.num_sets() <= 1;
}

bool is_connected(const MultiGraph& g) {
    std::vector<EdgeId> all(g.num_edges());
    std::iota(all.begin(), all.end(), EdgeId{0});
    return is_connected_spanning(g, all);
}

bool is_tree(const MultiGraph& g) {
    return g.num_vertices() >= 1 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

MultiGraph spanning_subgraph(const MultiGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<Edge> sub;
    sub.reserve(edges.size());
    for (EdgeId e : edges) sub.push_back(g.edge(e));
    return MultiGraph::unchecked(g.num_vertices(), std::move(sub));
}

std::size_t count_odd_degree_vertices(const MultiGraph& g) {
    std::size_t odd = 0;
    for (std::size_t d : g.degrees()) odd += d % 2;
    return odd;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
    Int value{};
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::vector<std::int64_t> weights;
    std::size_t weighted_lines = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_tokens(line);
        if (tok.empty()) continue;

        if (tok[0] == "p") {
            if (n) throw ParseError(line_no, "duplicate header");
            if (tok.size() != 4 || tok[1] != "ktrail") {
                throw ParseError(line_no, "header must be 'p ktrail <n> <m>'");
            }
            n = parse_int<std::size_t>(tok[2], line_no, "vertex count");
            m = parse_int<std::size_t>(tok[3], line_no, "edge count");
            if (*n < 2) throw ParseError(line_no, "graph needs at least 2 vertices");
        } else if (tok[0] == "e") {
            if (!n) throw ParseError(line_no, "edge before header");
            if (tok.size() != 3 && tok.size() != 4) {
                throw ParseError(line_no, "edge line must be 'e <u> <v> [w]'");
            }
            auto u = parse_int<std::size_t>(tok[1], line_no, "vertex");
            auto v = parse_int<std::size_t>(tok[2], line_no, "vertex");
            if (u >= *n || v >= *n) throw ParseError(line_no, "dangling vertex index");
            if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header declares");
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            if (tok.size() == 4) {
                weights.push_back(parse_int<std::int64_t>(tok[3], line_no, "weight"));
                ++weighted_lines;
            } else {
                weights.push_back(0);
            }
            if (weighted_lines != 0 && weighted_lines != edges.size()) {
                throw ParseError(line_no, "either every edge carries a weight or none does");
            }
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n) throw ParseError(0, "missing header");
    if (edges.size() != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    ParsedGraph out{MultiGraph(*n, std::move(edges)), std::nullopt};
    if (weighted_lines > 0) out.weights = std::move(weights);
    return out;
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

WeightedMultiGraph require_weighted(ParsedGraph parsed) {
    if (!parsed.weights) throw UsageError("graph file carries no edge weights");
    return WeightedMultiGraph(std::move(parsed.graph), std::move(*parsed.weights));
}

namespace {

std::string render_impl(const MultiGraph& g, const std::vector<std::int64_t>* w) {
    std::ostringstream os;
    os << "p ktrail " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        os << "e " << g.edge(e).u << ' ' << g.edge(e).v;
        if (w) os << ' ' << (*w)[e];
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_graph(const MultiGraph& g) { return render_impl(g, nullptr); }

std::string render_graph(const WeightedMultiGraph& g) { return render_impl(g.graph, &g.weight); }

std::string render_dot(const MultiGraph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        os << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [id=" << e << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ktrail
