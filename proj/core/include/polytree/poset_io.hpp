#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "polytree/poset.hpp"

namespace polytree {

/// {"elements": [keys...], "covers": [[i, j], ...]}
nlohmann::json poset_to_json(const FinitePoset& p);
/// Throws std::invalid_argument on malformed input or an invalid cover set.
FinitePoset poset_from_json(const nlohmann::json& j);

/// Hasse diagram in Graphviz syntax, drawn bottom to top.
std::string poset_to_dot(const FinitePoset& p, const std::string& graph_name = "poset");

}  // namespace polytree
