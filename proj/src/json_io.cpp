#include "ktrail/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "ktrail/errors.hpp"

namespace ktrail {

nlohmann::json witness_to_json(const PreimageWitness& wit) {
    nlohmann::json nodes = nlohmann::json::array();
    for (VertexId w = 0; w < wit.num_nodes(); ++w) nodes.push_back({{"id", w}, {"image", wit.phi[w]}});
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId f = 0; f < wit.h.num_edges(); ++f) {
        edges.push_back({{"id", f}, {"u", wit.h.edge(f).u}, {"v", wit.h.edge(f).v}, {"image_edge", wit.edge_map[f]}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

namespace {

std::uint32_t field(const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_unsigned()) {
        throw ParseError(0, std::string("witness entry lacks a nonnegative integer '") + key + "'");
    }
    return obj[key].get<std::uint32_t>();
}

}  // namespace

PreimageWitness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j["nodes"].is_array() ||
        !j["edges"].is_array()) {
        throw ParseError(0, "witness needs 'nodes' and 'edges' arrays");
    }
    const auto& nodes = j["nodes"];
    const auto& edges = j["edges"];
    std::vector<VertexId> phi(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    for (const auto& n : nodes) {
        std::uint32_t id = field(n, "id");
        if (id >= nodes.size() || seen[id]) throw ParseError(0, "node ids must be 0..N-1 without repeats");
        seen[id] = true;
        phi[id] = field(n, "image");
    }
    std::vector<Edge> h(edges.size());
    std::vector<EdgeId> map(edges.size());
    std::vector<bool> seen_edge(edges.size(), false);
    for (const auto& e : edges) {
        std::uint32_t id = field(e, "id");
        if (id >= edges.size() || seen_edge[id]) throw ParseError(0, "edge ids must be 0..M-1 without repeats");
        seen_edge[id] = true;
        h[id] = {field(e, "u"), field(e, "v")};
        if (h[id].u >= nodes.size() || h[id].v >= nodes.size()) throw ParseError(0, "witness edge uses an unknown node");
        map[id] = field(e, "image_edge");
    }
    return PreimageWitness{MultiGraph::unchecked(phi.size(), std::move(h)), std::move(phi), std::move(map)};
}

std::vector<EdgeId> subgraph_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = j.is_object() && j.contains("edges") ? j["edges"] : j;
    if (!arr.is_array()) throw ParseError(0, "subgraph must be an array of edge ids or {\"edges\": [...]}");
    std::vector<EdgeId> out;
    for (const auto& x : arr) {
        if (!x.is_number_unsigned()) throw ParseError(0, "subgraph edge ids must be nonnegative integers");
        out.push_back(x.get<EdgeId>());
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ParseError(0, "subgraph lists an edge twice");
    return out;
}

nlohmann::json subgraph_to_json(const std::vector<EdgeId>& edges) { return {{"edges", edges}}; }

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

}  // namespace ktrail
