#include "polytree/hypertree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "polytree/planar_complex.hpp"

namespace polytree {

bool hyperedges_cross(const std::vector<int>& a, const std::vector<int>& b) {
  // Tag each point: 1 in a, 2 in b, 3 in both. Look for an alternating
  // run a, b, a, b over distinct points.
  std::vector<std::pair<int, int>> pts;
  for (int x : a) pts.emplace_back(x, 1);
  for (int x : b) pts.emplace_back(x, 2);
  std::sort(pts.begin(), pts.end());
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          const int p[4] = {pts[i].first, pts[j].first, pts[k].first, pts[l].first};
          if (p[0] == p[1] || p[1] == p[2] || p[2] == p[3]) continue;
          const int s[4] = {pts[i].second, pts[j].second, pts[k].second, pts[l].second};
          if (s[0] == s[2] && s[1] == s[3] && s[0] != s[1]) return true;
        }
  return false;
}

std::optional<std::string> hypertree_violation(int n, const std::vector<std::vector<int>>& hyperedges) {
  if (n < 2) return "need at least 2 vertices";
  int weight = 0;
  for (const auto& e : hyperedges) {
    if (e.size() < 2) return "hyperedge with fewer than 2 vertices";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n) return "vertex outside 1..n";
      if (i > 0 && e[i] <= e[i - 1]) return "hyperedge not strictly increasing";
    }
    weight += static_cast<int>(e.size()) - 1;
  }
  for (std::size_t i = 0; i < hyperedges.size(); ++i)
    for (std::size_t j = i + 1; j < hyperedges.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(hyperedges[i].begin(), hyperedges[i].end(), hyperedges[j].begin(), hyperedges[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) return "two hyperedges share more than one vertex";
      if (hyperedges_cross(hyperedges[i], hyperedges[j])) return "hyperedges cross";
    }
  if (weight != n - 1) return "hyperedge sizes do not add up to a tree";
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : hyperedges)
    for (int x : e) parent[find(x)] = find(e[0]);
  for (int v = 2; v <= n; ++v)
    if (find(v) != find(1)) return "hypertree is not connected";
  return std::nullopt;
}

NoncrossingHypertree::NoncrossingHypertree(int n, std::vector<std::vector<int>> hyperedges)
    : n_(n), edges_(std::move(hyperedges)) {
  for (auto& e : edges_) std::sort(e.begin(), e.end());
  std::sort(edges_.begin(), edges_.end());
  if (auto bad = hypertree_violation(n_, edges_)) throw std::invalid_argument("noncrossing hypertree: " + *bad);
}

std::string NoncrossingHypertree::key() const {
  std::string s = "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    s += i ? ",{" : "{";
    for (std::size_t j = 0; j < edges_[i].size(); ++j) s += (j ? "," : "") + std::to_string(edges_[i][j]);
    s += "}";
  }
  return s + "}";
}

bool NoncrossingHypertree::leq(const NoncrossingHypertree& other) const {
  if (n_ != other.n_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const std::vector<int>& e) {
    return std::any_of(other.edges_.begin(), other.edges_.end(), [&](const std::vector<int>& f) {
      return std::includes(f.begin(), f.end(), e.begin(), e.end());
    });
  });
}

namespace {

void search(int n, const std::vector<std::vector<int>>& candidates, std::size_t next, int weight,
            std::vector<std::vector<int>>& chosen, std::vector<NoncrossingHypertree>& out) {
  if (weight == n - 1) {
    if (!hypertree_violation(n, chosen)) out.emplace_back(n, chosen);
    return;
  }
  for (std::size_t i = next; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (weight + static_cast<int>(c.size()) - 1 > n - 1) continue;
    bool ok = true;
    for (const auto& e : chosen) {
      std::vector<int> common;
      std::set_intersection(c.begin(), c.end(), e.begin(), e.end(), std::back_inserter(common));
      if (common.size() > 1 || hyperedges_cross(c, e)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    search(n, candidates, i + 1, weight + static_cast<int>(c.size()) - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<NoncrossingHypertree> enumerate_ncht(int n) {
  if (n < 3 || n > 7) throw std::out_of_range("enumerate_ncht: n must be in 3..7");
  std::vector<std::vector<int>> candidates;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> e;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) e.push_back(i + 1);
    candidates.push_back(std::move(e));
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::vector<int>> chosen;
  std::vector<NoncrossingHypertree> out;
  search(n, candidates, 0, 0, chosen, out);
  std::sort(out.begin(), out.end(),
            [](const NoncrossingHypertree& a, const NoncrossingHypertree& b) { return a.key() < b.key(); });
  return out;
}

FinitePoset ncht_poset(int n) {
  auto all = enumerate_ncht(n);
  std::vector<std::string> keys;
  for (const auto& h : all) keys.push_back(h.key());
  return from_leq(std::move(keys), [&](int a, int b) { return all[a].leq(all[b]); });
}

NoncrossingHypertree class_to_hypertree(const ReducedClass& c) {
  if (!red_leq(class_of(make_ustar(c.n())), c))
    throw std::invalid_argument("class_to_hypertree: class is not above the unmarked star");
  const PlanarTree& t = c.representative().tree();
  std::vector<std::vector<int>> edges;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    if (t.is_marked(v)) {
      for (VertexId w : t.rotation(v))
        if (t.is_marked(w) && v < w) edges.push_back({t.label(v), t.label(w)});
      continue;
    }
    std::vector<int> e;
    for (VertexId w : t.rotation(v)) e.push_back(t.label(w));
    edges.push_back(std::move(e));
  }
  return {t.n(), std::move(edges)};
}

ReducedClass hypertree_to_class(const NoncrossingHypertree& h) {
  const int n = h.n();
  // Marks 1..n are vertices 0..n-1; big hyperedges get a centre vertex.
  std::vector<VertexSpec> specs(n);
  for (int v = 0; v < n; ++v) specs[v].label = v + 1;
  // Neighbours of each mark with the cyclic offset used to order them.
  std::vector<std::vector<std::pair<int, VertexId>>> around(n);
  auto offset = [n](int from, int to) { return (to - from + n) % n; };
  for (const auto& e : h.hyperedges()) {
    if (e.size() == 2) {
      around[e[0] - 1].emplace_back(offset(e[0], e[1]), e[1] - 1);
      around[e[1] - 1].emplace_back(offset(e[1], e[0]), e[0] - 1);
      continue;
    }
    const VertexId centre = static_cast<VertexId>(specs.size());
    specs.push_back({kUnmarked, {}});
    for (int x : e) {
      specs[centre].rotation.push_back(x - 1);
      int nearest = n;
      for (int y : e)
        if (y != x) nearest = std::min(nearest, offset(x, y));
      around[x - 1].emplace_back(nearest, centre);
    }
  }
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto [d, w] : around[v]) specs[v].rotation.push_back(w);
  }
  return class_of(PlanarTree(n, specs));
}

ReducedProductsReport verify_reduced_products(const ReducedTree& rep) {
  const PlanarTree& t = rep.tree();
  if (t.n() > kMaxReducedN) throw std::out_of_range("verify_reduced_products: n must be at most 6");
  ReducedProductsReport r;
  const auto c = class_of(t);
  r.lower = lower_class_poset(c).poset;
  r.upper = upper_class_poset(c).poset;
  std::vector<FinitePoset> lower_factors, upper_factors;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    if (t.is_marked(v) && t.valence(v) >= 2) lower_factors.push_back(boolean_star(t.valence(v)));
    if (!t.is_marked(v)) upper_factors.push_back(dual(ncht_poset(t.valence(v))));
  }
  r.lower_model = product(lower_factors);
  r.upper_model = product(upper_factors);
  r.lower_witness = is_isomorphic(r.lower, r.lower_model);
  r.upper_witness = is_isomorphic(r.upper, r.upper_model);
  return r;
}

nlohmann::json hypertree_to_json(const NoncrossingHypertree& h) {
  return {{"n", h.n()}, {"hyperedges", h.hyperedges()}};
}

NoncrossingHypertree hypertree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("hyperedges") || !j.at("n").is_number_integer() ||
      !j.at("hyperedges").is_array())
    throw std::invalid_argument("hypertree json needs integer \"n\" and array \"hyperedges\"");
  std::vector<std::vector<int>> edges;
  for (const auto& e : j.at("hyperedges")) {
    if (!e.is_array()) throw std::invalid_argument("hypertree json: hyperedge must be an array");
    std::vector<int> vs;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw std::invalid_argument("hypertree json: vertices must be integers");
      vs.push_back(x.get<int>());
    }
    edges.push_back(std::move(vs));
  }
  return {j.at("n").get<int>(), std::move(edges)};
}

}  // namespace polytree
