#pragma once

#include <nlohmann/json.hpp>

#include "polytree/planar_tree.hpp"

namespace polytree {

/// {"n": int, "vertices": [{"id": string, "label": int|null, "rotation": [ids]}]}
/// Vertex ids are written as "v<index>".
nlohmann::json tree_to_json(const PlanarTree& t);

/// Accepts any string ids; throws std::invalid_argument on malformed input.
/// The result is not validated.
PlanarTree tree_from_json(const nlohmann::json& j);

}  // namespace polytree
