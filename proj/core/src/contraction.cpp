#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"

namespace polytree {

namespace {

struct UnionFind {
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  std::vector<int> parent;
};

UnionFind components_of(const PlanarTree& t, std::span<const Edge> edges) {
  UnionFind uf(t.vertex_count());
  for (const auto& e : edges) uf.unite(e.a, e.b);
  return uf;
}

bool admissible_edges(const PlanarTree& t, std::span<const Edge> edges) {
  UnionFind uf = components_of(t, edges);
  std::vector<int> marks(t.vertex_count(), 0);
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (t.is_marked(v) && ++marks[uf.find(v)] > 1) return false;
  return true;
}

}  // namespace

Subforest::Subforest(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Subforest::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Subforest::is_subset_of(const Subforest& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

std::vector<std::vector<VertexId>> subforest_components(const PlanarTree& host, const Subforest& f) {
  UnionFind uf = components_of(host, f.edges());
  std::vector<char> touched(host.vertex_count(), 0);
  for (const auto& e : f.edges()) touched[e.a] = touched[e.b] = 1;
  std::unordered_map<int, std::size_t> slot;
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < host.vertex_count(); ++v) {
    if (!touched[v]) continue;
    auto [it, fresh] = slot.try_emplace(uf.find(v), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

int marked_count(const PlanarTree& host, std::span<const VertexId> component) {
  return static_cast<int>(std::count_if(component.begin(), component.end(),
                                        [&](VertexId v) { return host.is_marked(v); }));
}

bool is_admissible(const PlanarTree& host, const Subforest& f) {
  for (const auto& e : f.edges())
    if (!host.contains(e.a) || !host.contains(e.b) || !host.adjacent(e.a, e.b)) return false;
  return admissible_edges(host, f.edges());
}

namespace detail {

Contraction contract_unchecked(const PlanarTree& t, const Subforest& f) {
  const int vcount = t.vertex_count();
  UnionFind uf = components_of(t, f.edges());

  std::vector<VertexId> image(vcount, -1);
  std::vector<VertexId> root_image(vcount, -1);
  std::vector<VertexId> first_member;
  for (VertexId v = 0; v < vcount; ++v) {
    int r = uf.find(v);
    if (root_image[r] < 0) {
      root_image[r] = static_cast<VertexId>(first_member.size());
      first_member.push_back(v);
    }
    image[v] = root_image[r];
  }

  std::vector<VertexSpec> specs(first_member.size());
  for (VertexId v = 0; v < vcount; ++v)
    if (t.is_marked(v)) specs[image[v]].label = t.label(v);

  // Walk each component counter-clockwise, recording edges that leave it.
  auto same = [&](VertexId a, VertexId b) { return image[a] == image[b]; };
  std::vector<VertexId>* out = nullptr;
  auto visit = [&](auto&& self, VertexId v, VertexId parent) -> void {
    auto rot = t.rotation(v);
    const int deg = static_cast<int>(rot.size());
    const int pos = parent < 0 ? -1 : rotation_index(t, v, parent);
    const int count = parent < 0 ? deg : deg - 1;
    for (int i = 1; i <= count; ++i) {
      VertexId w = rot[(pos + i + deg) % deg];
      if (same(v, w))
        self(self, w, v);
      else
        out->push_back(image[w]);
    }
  };
  for (std::size_t c = 0; c < first_member.size(); ++c) {
    out = &specs[c].rotation;
    visit(visit, first_member[c], -1);
  }
  return {PlanarTree(t.n(), specs), std::move(image)};
}

}  // namespace detail

Contraction contract_with_map(const PlanarTree& t, const Subforest& f) {
  require_valid(t);
  for (const auto& e : f.edges())
    if (!t.contains(e.a) || !t.contains(e.b) || !t.adjacent(e.a, e.b))
      throw std::invalid_argument("contract: edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                                  " is not in the tree");
  if (!admissible_edges(t, f.edges()))
    throw std::invalid_argument("contract: a component of the subforest carries more than one mark");
  return detail::contract_unchecked(t, f);
}

PlanarTree contract(const PlanarTree& t, const Subforest& f) { return contract_with_map(t, f).tree; }

namespace {

std::vector<Edge> pick(const std::vector<Edge>& all, unsigned mask) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask & (1u << i)) out.push_back(all[i]);
  return out;
}

}  // namespace

std::vector<Subforest> enumerate_subforests(const PlanarTree& t) {
  require_valid(t);
  const auto all = t.edges();
  std::vector<Subforest> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    auto chosen = pick(all, mask);
    if (admissible_edges(t, chosen)) out.emplace_back(std::move(chosen));
  }
  std::stable_sort(out.begin(), out.end(), [](const Subforest& a, const Subforest& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
  });
  return out;
}

std::optional<Subforest> contraction_subforest(const PlanarTree& t1, const PlanarTree& t2) {
  require_valid(t1);
  require_valid(t2);
  if (t1.n() != t2.n()) throw std::invalid_argument("contraction_subforest: trees have different n");
  const int drop = t1.vertex_count() - t2.vertex_count();
  if (drop < 0) return std::nullopt;
  const auto target = detail::code_of(t2);
  const auto all = t1.edges();
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) != drop) continue;
    auto chosen = pick(all, mask);
    if (!admissible_edges(t1, chosen)) continue;
    Subforest f(std::move(chosen));
    if (detail::code_of(detail::contract_unchecked(t1, f).tree) == target) return f;
  }
  return std::nullopt;
}

bool leq(const PlanarTree& t1, const PlanarTree& t2) { return contraction_subforest(t1, t2).has_value(); }

bool is_contractible(const PlanarTree& t, const Edge& e) { return !(t.is_marked(e.a) && t.is_marked(e.b)); }

namespace {

void sort_unique_by_code(std::vector<PlanarTree>& trees) {
  std::vector<std::pair<CanonicalCode, std::size_t>> keyed;
  keyed.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keyed.emplace_back(detail::code_of(trees[i]), i);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<PlanarTree> out;
  out.reserve(keyed.size());
  for (const auto& [code, i] : keyed) out.push_back(std::move(trees[i]));
  trees = std::move(out);
}

void expand_into(const PlanarTree& t, VertexId v, std::vector<PlanarTree>& out) {
  const auto rot = t.rotation(v);
  const int deg = static_cast<int>(rot.size());
  const int label = t.label(v);
  const VertexId fresh = t.vertex_count();
  const auto base = t.specs();

  for (int start = 0; start < deg; ++start) {
    for (int keep = 0; keep <= deg; ++keep) {
      const int moved = deg - keep;
      // (label for v, label for fresh)
      std::vector<std::pair<int, int>> markings;
      if (label == kUnmarked) {
        if (keep >= 2 && moved >= 2) markings.emplace_back(kUnmarked, kUnmarked);
      } else {
        if (moved >= 2) markings.emplace_back(label, kUnmarked);
        if (keep >= 2) markings.emplace_back(kUnmarked, label);
      }
      for (auto [lv, lf] : markings) {
        auto specs = base;
        specs.emplace_back();
        specs[v].label = lv;
        specs[fresh].label = lf;
        specs[v].rotation.clear();
        specs[fresh].rotation.assign(1, v);
        for (int i = 0; i < keep; ++i) specs[v].rotation.push_back(rot[(start + i) % deg]);
        specs[v].rotation.push_back(fresh);
        for (int i = keep; i < deg; ++i) {
          VertexId w = rot[(start + i) % deg];
          specs[fresh].rotation.push_back(w);
          std::replace(specs[w].rotation.begin(), specs[w].rotation.end(), v, fresh);
        }
        out.emplace_back(t.n(), specs);
      }
    }
  }
}

}  // namespace

std::vector<PlanarTree> expand_vertex(const PlanarTree& t, VertexId v) {
  require_valid(t);
  if (!t.contains(v)) throw std::out_of_range("expand_vertex: unknown vertex");
  std::vector<PlanarTree> out;
  expand_into(t, v, out);
  sort_unique_by_code(out);
  return out;
}

std::vector<PlanarTree> single_expansions(const PlanarTree& t) {
  require_valid(t);
  std::vector<PlanarTree> out;
  for (VertexId v = 0; v < t.vertex_count(); ++v) expand_into(t, v, out);
  sort_unique_by_code(out);
  return out;
}

Neighborhood neighborhood(const PlanarTree& t, VertexId v) {
  require_valid(t);
  if (!t.contains(v)) throw std::out_of_range("neighborhood: unknown vertex");
  const int k = t.valence(v);
  if (k < 2) throw std::invalid_argument("neighborhood: vertex is a leaf");
  auto rot = t.rotation(v);
  std::vector<VertexSpec> specs(k + 1);
  specs[0].label = t.is_marked(v) ? k + 1 : kUnmarked;
  for (int i = 1; i <= k; ++i) {
    specs[0].rotation.push_back(i);
    specs[i] = {i, {0}};
  }
  return {PlanarTree(t.is_marked(v) ? k + 1 : k, specs), std::vector<VertexId>(rot.begin(), rot.end())};
}

}  // namespace polytree
