#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polytree/planar_tree.hpp"

namespace polytree::testing {

// Reads the depth-first format printed by canonical_code, e.g. "1(u0(2)(3))".
// A child list follows the rotation of its parent, starting after the edge
// back to the grandparent.
inline PlanarTree parse_code(int n, std::string_view code) {
  std::vector<VertexSpec> vs;
  std::size_t pos = 0;
  auto vertex = [&](auto&& self, int parent) -> int {
    int label = kUnmarked;
    if (pos < code.size() && code[pos] == 'u') {
      ++pos;
      while (pos < code.size() && std::isdigit(static_cast<unsigned char>(code[pos]))) ++pos;
    } else {
      std::size_t start = pos;
      while (pos < code.size() && std::isdigit(static_cast<unsigned char>(code[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("bad code");
      label = std::stoi(std::string(code.substr(start, pos - start)));
    }
    int id = static_cast<int>(vs.size());
    vs.push_back({label, {}});
    if (parent >= 0) vs[id].rotation.push_back(parent);
    while (pos < code.size() && code[pos] == '(') {
      ++pos;
      int child = self(self, id);
      vs[id].rotation.push_back(child);
      if (pos >= code.size() || code[pos] != ')') throw std::invalid_argument("bad code");
      ++pos;
    }
    return id;
  };
  vertex(vertex, -1);
  if (pos != code.size()) throw std::invalid_argument("trailing input");
  return PlanarTree(n, vs);
}

// u1 adjacent to 1, 2, u2; u2 adjacent to u1, 3, 4. Contracting u1u2 gives
// the unmarked 4-star with rotation (1,2,3,4).
inline PlanarTree trivalent_four() {
  std::vector<VertexSpec> vs{{kUnmarked, {2, 3, 1}}, {kUnmarked, {0, 4, 5}}, {1, {0}}, {2, {0}}, {3, {1}}, {4, {1}}};
  return PlanarTree(4, vs);
}

// 2 - 1 - 3 - 4
inline PlanarTree path_2134() {
  std::vector<VertexSpec> vs{{1, {1, 2}}, {2, {0}}, {3, {0, 3}}, {4, {2}}};
  return PlanarTree(4, vs);
}

// Unmarked valence-4 vertex next to mark 6 of valence 3.
inline PlanarTree hexagonal_prism_tree() {
  std::vector<VertexSpec> vs{{kUnmarked, {1, 2, 3, 4}}, {1, {0}}, {2, {0}}, {3, {0}},
                             {6, {0, 5, 6}},          {4, {4}}, {5, {4}}};
  return PlanarTree(6, vs);
}

struct Point {
  double x, y;
};

inline double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// Hulls of vertex sets on a circle overlap beyond a shared corner exactly
// when two chords with four distinct ends cross.
inline bool hulls_overlap(const std::vector<int>& a, const std::vector<int>& b, const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = k + 1; l < b.size(); ++l) {
          std::set<int> ends{a[i], a[j], b[k], b[l]};
          if (ends.size() < 4) continue;
          Point p = pts[a[i]], q = pts[a[j]], r = pts[b[k]], s = pts[b[l]];
          if (orient(p, q, r) * orient(p, q, s) < 0 && orient(r, s, p) * orient(r, s, q) < 0) return true;
        }
  return false;
}

// Depth-first choice of hyperedges in increasing order; each one must join
// |e| separate components, which forces acyclicity and small intersections.
inline std::set<std::string> geometric_ncht(int n) {
  std::vector<Point> pts(n + 1);
  for (int i = 1; i <= n; ++i) {
    const double th = 2 * std::numbers::pi * i / n;
    pts[i] = {std::cos(th), std::sin(th)};
  }
  std::vector<std::vector<int>> subsets;
  for (unsigned m = 1; m < (1u << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) s.push_back(i + 1);
    if (s.size() >= 2) subsets.push_back(s);
  }
  std::set<std::string> out;
  std::vector<std::vector<int>> chosen;
  auto rec = [&](auto&& self, std::size_t from, int weight, std::vector<int> comp) -> void {
    if (weight == n - 1) {
      std::string key = "{";
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        key += i ? ",{" : "{";
        for (std::size_t j = 0; j < sorted[i].size(); ++j) key += (j ? "," : "") + std::to_string(sorted[i][j]);
        key += "}";
      }
      out.insert(key + "}");
      return;
    }
    for (std::size_t s = from; s < subsets.size(); ++s) {
      const auto& e = subsets[s];
      if (weight + static_cast<int>(e.size()) - 1 > n - 1) continue;
      std::set<int> roots;
      for (int v : e) roots.insert(comp[v]);
      if (roots.size() != e.size()) continue;
      bool crossing = false;
      for (const auto& c : chosen) crossing = crossing || hulls_overlap(c, e, pts);
      if (crossing) continue;
      auto next = comp;
      for (int v = 1; v <= n; ++v)
        if (roots.count(comp[v])) next[v] = comp[e[0]];
      chosen.push_back(e);
      self(self, s + 1, weight + static_cast<int>(e.size()) - 1, next);
      chosen.pop_back();
    }
  };
  std::vector<int> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);
  rec(rec, 0, 0, comp);
  return out;
}

}  // namespace polytree::testing
