#include "polytree/poset_io.hpp"

#include <sstream>
#include <stdexcept>

namespace polytree {

nlohmann::json poset_to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return {{"elements", p.keys()}, {"covers", std::move(covers)}};
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw std::invalid_argument("poset json needs \"elements\" and \"covers\"");
  const auto& elems = j.at("elements");
  const auto& cov = j.at("covers");
  if (!elems.is_array() || !cov.is_array()) throw std::invalid_argument("poset json: fields must be arrays");
  std::vector<std::string> keys;
  for (const auto& e : elems) {
    if (!e.is_string()) throw std::invalid_argument("poset json: element keys must be strings");
    keys.push_back(e.get<std::string>());
  }
  std::vector<Cover> covers;
  for (const auto& c : cov) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw std::invalid_argument("poset json: cover must be a pair of integers");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return FinitePoset(std::move(keys), std::move(covers));
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_dot(const FinitePoset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quoted(p.key(static_cast<int>(i))) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace polytree
