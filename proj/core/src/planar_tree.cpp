#include "polytree/planar_tree.hpp"

#include <numeric>
#include <stdexcept>

namespace polytree {

PlanarTree::PlanarTree(int n, std::span<const VertexSpec> vertices) : n_(n) {
  labels_.reserve(vertices.size());
  offsets_.reserve(vertices.size() + 1);
  for (const auto& v : vertices) {
    labels_.push_back(v.label);
    adjacency_.insert(adjacency_.end(), v.rotation.begin(), v.rotation.end());
    offsets_.push_back(static_cast<int>(adjacency_.size()));
  }
}

std::span<const VertexId> PlanarTree::rotation(VertexId v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in tree");
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::optional<VertexId> PlanarTree::find_label(int label) const {
  if (label == kUnmarked) return std::nullopt;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

VertexId PlanarTree::vertex_of(int label) const {
  if (auto v = find_label(label)) return *v;
  throw std::out_of_range("no vertex labelled " + std::to_string(label));
}

bool PlanarTree::adjacent(VertexId u, VertexId v) const {
  auto rot = rotation(u);
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

std::vector<Edge> PlanarTree::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.size() / 2);
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (VertexId w : rotation(v))
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSpec> PlanarTree::specs() const {
  std::vector<VertexSpec> out(labels_.size());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    out[v].label = labels_[v];
    auto rot = rotation(v);
    out[v].rotation.assign(rot.begin(), rot.end());
  }
  return out;
}

namespace {

ViolationReport report(Violation kind, std::string message) { return {kind, std::move(message)}; }

}  // namespace

std::optional<ViolationReport> validate(const PlanarTree& t) {
  const int n = t.n();
  const int vcount = t.vertex_count();
  if (n < 3) return report(Violation::TooFewMarks, "n must be at least 3");
  if (vcount < n) return report(Violation::TooFewVertices, "vertex count below n");
  if (vcount > 2 * n - 2) return report(Violation::TooManyVertices, "vertex count exceeds 2n-2");

  for (VertexId v = 0; v < vcount; ++v) {
    auto rot = t.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      VertexId w = rot[i];
      if (!t.contains(w) || w == v)
        return report(Violation::BadNeighbour, "vertex " + std::to_string(v) + " has an invalid neighbour");
      if (std::find(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(i), w) !=
          rot.begin() + static_cast<std::ptrdiff_t>(i))
        return report(Violation::BadNeighbour, "vertex " + std::to_string(v) + " lists a neighbour twice");
      if (!t.adjacent(w, v))
        return report(Violation::AsymmetricRotation,
                      "edge " + std::to_string(v) + "-" + std::to_string(w) + " missing from one rotation");
    }
  }

  if (t.edge_count() != vcount - 1) return report(Violation::NotATree, "edge count is not V-1");
  std::vector<char> seen(vcount, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : t.rotation(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vcount) return report(Violation::NotATree, "graph is not connected");

  std::vector<int> count(n + 1, 0);
  for (VertexId v = 0; v < vcount; ++v) {
    int l = t.label(v);
    if (l == kUnmarked) continue;
    if (l < 1 || l > n) return report(Violation::BadLabel, "label " + std::to_string(l) + " outside 1..n");
    if (++count[l] > 1) return report(Violation::BadLabel, "label " + std::to_string(l) + " repeated");
  }
  for (int l = 1; l <= n; ++l)
    if (count[l] == 0) return report(Violation::BadLabel, "label " + std::to_string(l) + " missing");

  for (VertexId v = 0; v < vcount; ++v)
    if (!t.is_marked(v) && t.valence(v) < 3)
      return report(Violation::UnmarkedLowValence, "unmarked valence < 3");
  return std::nullopt;
}

void require_valid(const PlanarTree& t) {
  if (auto bad = validate(t)) throw std::invalid_argument("invalid planar tree: " + bad->message);
}

PlanarTree make_ustar(int k) {
  if (k < 3) throw std::invalid_argument("make_ustar requires valence >= 3");
  std::vector<VertexSpec> vs(k + 1);
  vs[0].rotation.resize(k);
  std::iota(vs[0].rotation.begin(), vs[0].rotation.end(), 1);
  for (int i = 1; i <= k; ++i) vs[i] = {i, {0}};
  return PlanarTree(k, vs);
}

PlanarTree make_mstar(int k) {
  if (k < 2) throw std::invalid_argument("make_mstar requires valence >= 2");
  std::vector<VertexSpec> vs(k + 1);
  vs[0].label = k + 1;
  vs[0].rotation.resize(k);
  std::iota(vs[0].rotation.begin(), vs[0].rotation.end(), 1);
  for (int i = 1; i <= k; ++i) vs[i] = {i, {0}};
  return PlanarTree(k + 1, vs);
}

std::vector<VertexId> geodesic(const PlanarTree& t, VertexId a, VertexId b) {
  if (!t.contains(a) || !t.contains(b)) throw std::out_of_range("geodesic: unknown vertex");
  std::vector<VertexId> parent(t.vertex_count(), -1);
  parent[a] = a;
  std::vector<VertexId> queue{a};
  for (std::size_t head = 0; head < queue.size() && parent[b] < 0; ++head) {
    VertexId v = queue[head];
    for (VertexId w : t.rotation(v))
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (parent[b] < 0) throw std::invalid_argument("geodesic: vertices are not connected");
  std::vector<VertexId> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<VertexId> boundary_walk(const PlanarTree& t, VertexId start) {
  auto first = t.rotation(start);
  std::vector<VertexId> walk{start};
  if (first.empty()) return walk;
  VertexId from = start;
  VertexId at = first[0];
  const std::size_t steps = 2 * static_cast<std::size_t>(t.edge_count());
  for (std::size_t i = 0; i < steps; ++i) {
    walk.push_back(at);
    auto rot = t.rotation(at);
    auto pos = std::find(rot.begin(), rot.end(), from) - rot.begin();
    VertexId next = rot[(pos + 1) % static_cast<std::ptrdiff_t>(rot.size())];
    from = at;
    at = next;
  }
  return walk;
}

int cell_dimension(const PlanarTree& t) {
  int dim = 0;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const int val = t.valence(v);
    if (!t.is_marked(v))
      dim += val - 3;
    else if (val >= 2)
      dim += val - 1;
  }
  return dim;
}

}  // namespace polytree
