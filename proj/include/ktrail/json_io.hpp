#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace ktrail {

// Witness layout: {"nodes":[{"id":0,"image":3},...], "edges":[{"id":0,"u":0,"v":1,"image_edge":5},...]}

nlohmann::json witness_to_json(const PreimageWitness& wit);
/// Throws ParseError (line 0) on missing fields or non-dense ids.
PreimageWitness witness_from_json(const nlohmann::json& j);

/// Accepts {"edges":[...]} or a bare array of edge ids; returns them sorted.
std::vector<EdgeId> subgraph_from_json(const nlohmann::json& j);
nlohmann::json subgraph_to_json(const std::vector<EdgeId>& edges);

nlohmann::json read_json_file(const std::string& path);

}  // namespace ktrail
