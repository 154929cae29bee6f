#include "polytree/tree_io.hpp"

#include <stdexcept>
#include <unordered_map>

namespace polytree {

nlohmann::json tree_to_json(const PlanarTree& t) {
  auto id = [](VertexId v) { return "v" + std::to_string(v); };
  nlohmann::json vertices = nlohmann::json::array();
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    nlohmann::json rotation = nlohmann::json::array();
    for (VertexId w : t.rotation(v)) rotation.push_back(id(w));
    vertices.push_back({{"id", id(v)},
                        {"label", t.is_marked(v) ? nlohmann::json(t.label(v)) : nlohmann::json(nullptr)},
                        {"rotation", std::move(rotation)}});
  }
  return {{"n", t.n()}, {"vertices", std::move(vertices)}};
}

PlanarTree tree_from_json(const nlohmann::json& j) {
  try {
    const auto& vertices = j.at("vertices");
    std::unordered_map<std::string, VertexId> index;
    for (const auto& v : vertices) {
      auto [it, fresh] = index.try_emplace(v.at("id").get<std::string>(), static_cast<VertexId>(index.size()));
      if (!fresh) throw std::invalid_argument("duplicate vertex id " + it->first);
    }
    std::vector<VertexSpec> specs;
    for (const auto& v : vertices) {
      VertexSpec spec;
      const auto& label = v.at("label");
      spec.label = label.is_null() ? kUnmarked : label.get<int>();
      for (const auto& r : v.at("rotation")) {
        auto it = index.find(r.get<std::string>());
        if (it == index.end()) throw std::invalid_argument("unknown vertex id " + r.get<std::string>());
        spec.rotation.push_back(it->second);
      }
      specs.push_back(std::move(spec));
    }
    return PlanarTree(j.at("n").get<int>(), specs);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed tree JSON: ") + e.what());
  }
}

}  // namespace polytree
