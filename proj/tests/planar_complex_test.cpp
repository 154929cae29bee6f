#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "polytree/canonical.hpp"
#include "polytree/contraction.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/triangulation.hpp"
#include "support.hpp"

using namespace polytree;

namespace {

std::string code(const PlanarTree& t) { return canonical_code(t).str(); }

// Every labeled tree on n marked and k unmarked vertices (Prüfer sequences),
// with every rotation system, reduced to canonical codes.
std::set<std::string> brute_force_codes(int n) {
  std::set<std::string> out;
  for (int k = 0; k <= n - 2; ++k) {
    const int v = n + k;
    std::vector<int> seq(v - 2, 0);
    while (true) {
      std::vector<int> deg(v, 1);
      for (int x : seq) ++deg[x];
      bool ok = true;
      for (int u = n; u < v; ++u) ok = ok && deg[u] >= 3;
      if (ok) {
        // Decode.
        std::vector<std::vector<int>> adj(v);
        auto d = deg;
        for (int x : seq) {
          int leaf = 0;
          while (d[leaf] != 1) ++leaf;
          adj[leaf].push_back(x);
          adj[x].push_back(leaf);
          --d[leaf];
          --d[x];
        }
        int a = -1, b = -1;
        for (int i = 0; i < v; ++i)
          if (d[i] == 1) (a < 0 ? a : b) = i;
        adj[a].push_back(b);
        adj[b].push_back(a);
        // Rotations: fix the first neighbour, permute the rest.
        for (auto& r : adj) std::sort(r.begin() + 1, r.end());
        while (true) {
          std::vector<VertexSpec> vs(v);
          for (int i = 0; i < v; ++i) vs[i] = {i < n ? i + 1 : kUnmarked, adj[i]};
          out.insert(code(PlanarTree(n, vs)));
          int i = 0;
          while (i < v && !std::next_permutation(adj[i].begin() + 1, adj[i].end())) ++i;
          if (i == v) break;
        }
      }
      int i = 0;
      while (i < v - 2 && ++seq[i] == v) seq[i++] = 0;
      if (i == v - 2) break;
    }
  }
  return out;
}

// Labeled embedded trees number (V-2)! per degree sequence; unmarked
// relabelings act freely, so divide by k!.
std::uint64_t closed_form_count(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n - 2; ++k) {
    const int v = n + k;
    const int excess = 2 * (v - 1) - n - 3 * k;  // degree left after the minima
    if (excess < 0) continue;
    // Compositions of `excess` into v non-negative parts.
    std::vector<std::uint64_t> ways(excess + 1, 0);
    ways[0] = 1;
    for (int i = 0; i < v; ++i)
      for (int s = 1; s <= excess; ++s) ways[s] += ways[s - 1];
    std::uint64_t f = 1;
    for (int i = 2; i <= v - 2; ++i) f *= i;
    std::uint64_t kf = 1;
    for (int i = 2; i <= k; ++i) kf *= i;
    total += f * ways[excess] / kf;
  }
  return total;
}

}  // namespace

TEST_CASE("planar tree counts against independent oracles") {
  const std::vector<std::size_t> frozen{5, 62, 1254, 35304};
  for (int n = 3; n <= 6; ++n) CHECK(closed_form_count(n) == frozen[n - 3]);
  for (int n = 3; n <= 5; ++n) {
    auto trees = enumerate_planar_trees(n);
    CHECK(trees.size() == frozen[n - 3]);
    std::set<std::string> codes;
    for (const auto& t : trees) codes.insert(code(t));
    CHECK(codes == brute_force_codes(n));
  }
}

TEST_CASE("enumeration guards and determinism") {
  CHECK_THROWS_AS(enumerate_planar_trees(2), std::out_of_range);
  CHECK_THROWS_AS(enumerate_planar_trees(8), std::out_of_range);
  CHECK_THROWS_AS(build_pnr_poset(7), std::out_of_range);
  CHECK_THROWS_AS(cell_census(7), std::out_of_range);
  auto a = enumerate_planar_trees(5, 1);
  auto b = enumerate_planar_trees(5, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(code(a[i]) == code(b[i]));
  CHECK(std::is_sorted(a.begin(), a.end(), [](auto& x, auto& y) { return code(x) < code(y); }));
}

TEST_CASE("cover construction matches the literal order") {
  for (int n = 3; n <= 4; ++n) {
    auto pnr = build_pnr(n);
    std::vector<std::string> keys;
    for (const auto& t : pnr.trees) keys.push_back(code(t));
    auto literal = from_leq(keys, [&](int i, int j) { return leq(pnr.trees[i], pnr.trees[j]); });
    CHECK(literal.keys() == pnr.poset.keys());
    CHECK(literal.covers() == pnr.poset.covers());
  }
}

TEST_CASE("planar 3-tree poset is a theta graph") {
  auto p = build_pnr_poset(3);
  auto lo = p.minimal_elements();
  auto hi = p.maximal_elements();
  CHECK(lo.size() == 2);
  CHECK(hi.size() == 3);
  for (int a : lo)
    for (int b : hi) CHECK(p.leq(a, b));
  // The maxima are the paths: no unmarked vertex.
  auto pnr = build_pnr(3);
  for (int b : hi)
    for (VertexId v = 0; v < pnr.trees[b].vertex_count(); ++v) CHECK(pnr.trees[b].is_marked(v));
}

TEST_CASE("cell censuses") {
  auto c3 = cell_census(3);
  CHECK(c3.by_dimension == std::map<int, std::size_t>{{0, 2}, {1, 3}});
  auto c4 = cell_census(4);
  CHECK(c4.by_dimension == std::map<int, std::size_t>{{0, 12}, {1, 30}, {2, 20}});
  CHECK(c4.by_factor_type.at("W3") == 8);
  CHECK(c4.by_factor_type.at("W2xW2") == 12);
  CHECK(c4.total() == 62);
  for (int n = 3; n <= 5; ++n) {
    auto c = cell_census(n);
    std::size_t by_type = 0;
    for (const auto& [k, v] : c.by_factor_type) by_type += v;
    CHECK(by_type == c.total());
  }
  CHECK(cell_census(5).by_dimension == std::map<int, std::size_t>{{0, 120}, {1, 420}, {2, 504}, {3, 210}});
}

TEST_CASE("factors") {
  CHECK(factor_key(make_mstar(3)) == "W3");
  CHECK(factor_key(make_ustar(5)) == "K4");
  CHECK(factor_key(testing::hexagonal_prism_tree()) == "K3xW3");
  CHECK(factor_key(testing::trivalent_four()) == "point");
  auto fs = factors(testing::trivalent_four());
  CHECK(fs.size() == 2);
  CHECK(std::all_of(fs.begin(), fs.end(), [](const Factor& f) { return f.trivial(); }));
  Factor w{Factor::Kind::Cyclohedron, 3, 0};
  CHECK(w.name() == "W3");
  CHECK(w.dimension() == 2);
  CHECK(factor_face_poset(w).size() == 13);
}

TEST_CASE("lower set decomposition examples") {
  auto w = decompose_lower_set(make_mstar(3));
  REQUIRE(w.witness);
  CHECK(is_isomorphism(w.lower, sym_tri_poset(3), *is_isomorphic(w.lower, sym_tri_poset(3))));
  CHECK(w.factors.size() == 1);

  auto k = decompose_lower_set(make_ustar(5));
  REQUIRE(k.witness);
  CHECK(is_isomorphic(k.lower, tri_poset(5)).has_value());

  auto prism = decompose_lower_set(testing::hexagonal_prism_tree());
  REQUIRE(prism.witness);
  CHECK(prism.lower.size() == 39);
  CHECK(is_isomorphism(prism.lower, prism.model, *prism.witness));
}

TEST_CASE("stars of cells") {
  for (const auto& t : enumerate_planar_trees(4))
    if (cell_dimension(t) == 0) CHECK(star_census(t) == std::map<int, std::size_t>{{1, 5}, {2, 8}});
  for (const auto& t : enumerate_planar_trees(3))
    if (cell_dimension(t) == 0) CHECK(star_census(t) == std::map<int, std::size_t>{{1, 3}});
  CHECK(star_census(make_mstar(3)).empty());
}

TEST_CASE("barycentric subdivision") {
  auto prism = verify_barycentric(testing::hexagonal_prism_tree());
  CHECK(prism.top_simplices == 72);
  CHECK(prism.product_flags == 72);
  CHECK(prism.agrees);
  auto pt = verify_barycentric(make_ustar(3));
  CHECK(pt.subdivision.simplex_counts == std::vector<std::uint64_t>{1});
  auto hex = verify_barycentric(make_mstar(3));
  CHECK(hex.top_simplices == 12);
  CHECK(hex.agrees);
}

TEST_CASE("lower and upper sets of every tree with n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    auto pnr = build_pnr(n);
    const auto& p = pnr.poset;
    int top = 0;
    for (std::size_t i = 0; i < pnr.trees.size(); ++i) {
      const auto& t = pnr.trees[i];
      auto low = lower_set(p, static_cast<int>(i));
      auto up = upper_set(p, static_cast<int>(i));
      CHECK(low.size() == lower_set_trees(t).size());
      CHECK(up.size() == upper_set_trees(t).size());
      CHECK(euler_characteristic(order_complex(low)) == 1);
      top = std::max(top, cell_dimension(t));
      if (p.upper_covers(static_cast<int>(i)).empty()) {
        CHECK(upper_set_trees(t).size() == 1);
      }
    }
    CHECK(top == n - 2);
    for (const auto& t : pnr.trees)
      if (cell_dimension(t) == n - 2)
        for (const auto& f : factors(t)) CHECK((f.trivial() || f.kind == Factor::Kind::Cyclohedron));
  }
}

TEST_CASE("tree posets of lower and upper sets") {
  auto low = lower_set_poset(make_mstar(3));
  CHECK(low.poset.size() == 13);
  CHECK(is_isomorphic(low.poset, sym_tri_poset(3)).has_value());
  auto up = upper_set_poset(testing::trivalent_four());
  CHECK(up.poset.size() == 14);
  CHECK(up.poset.minimal_elements().size() == 1);
}
