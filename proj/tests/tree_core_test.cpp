#include <doctest.h>

#include <algorithm>
#include <set>

#include "polytree/canonical.hpp"
#include "polytree/contraction.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/planar_tree.hpp"
#include "polytree/tree_io.hpp"
#include "support.hpp"

using namespace polytree;
using polytree::testing::parse_code;
using polytree::testing::path_2134;
using polytree::testing::trivalent_four;

namespace {

std::string code(const PlanarTree& t) { return canonical_code(t).str(); }

std::vector<int> labels_along(const PlanarTree& t, const std::vector<VertexId>& path) {
  std::vector<int> out;
  for (auto v : path) out.push_back(t.label(v));
  return out;
}

}  // namespace

TEST_CASE("validate accepts stars and the small named trees") {
  CHECK_FALSE(validate(make_ustar(3)).has_value());
  CHECK_FALSE(validate(make_mstar(2)).has_value());
  CHECK_FALSE(validate(trivalent_four()).has_value());
  CHECK_FALSE(validate(path_2134()).has_value());
  CHECK_FALSE(validate(testing::hexagonal_prism_tree()).has_value());
  CHECK(make_ustar(3).vertex_count() == 4);
  CHECK(make_mstar(3).n() == 4);
}

TEST_CASE("validate names the first broken invariant") {
  // 1 - u - 2 with u unmarked of valence 2, plus leaf 3 on 2.
  std::vector<VertexSpec> low{{kUnmarked, {1, 2}}, {1, {0}}, {2, {0, 3}}, {3, {2}}};
  auto r = validate(PlanarTree(3, low));
  REQUIRE(r);
  CHECK(r->kind == Violation::UnmarkedLowValence);
  CHECK(r->message == "unmarked valence < 3");

  // 7 vertices on 4 marks.
  std::vector<VertexSpec> big{{1, {1}}, {kUnmarked, {0, 2}}, {kUnmarked, {1, 3}}, {kUnmarked, {2, 4}},
                              {2, {3, 5}}, {3, {4, 6}},        {4, {5}}};
  r = validate(PlanarTree(4, big));
  REQUIRE(r);
  CHECK(r->kind == Violation::TooManyVertices);

  std::vector<VertexSpec> twice{{kUnmarked, {1, 2, 3}}, {1, {0}}, {1, {0}}, {3, {0}}};
  r = validate(PlanarTree(3, twice));
  REQUIRE(r);
  CHECK(r->kind == Violation::BadLabel);

  std::vector<VertexSpec> lopsided{{kUnmarked, {1, 2, 3}}, {1, {0}}, {2, {0}}, {3, {}}};
  r = validate(PlanarTree(3, lopsided));
  REQUIRE(r);
  CHECK(r->kind == Violation::AsymmetricRotation);

  CHECK_THROWS_AS(require_valid(PlanarTree(4, big)), std::invalid_argument);
  CHECK_THROWS_AS(make_ustar(2), std::invalid_argument);
  CHECK_THROWS_AS(make_mstar(1), std::invalid_argument);
}

TEST_CASE("canonical code ignores vertex numbering but sees rotation") {
  // The 4-star with the center stored last and leaves in scrambled slots.
  std::vector<VertexSpec> shuffled{{3, {4}}, {1, {4}}, {4, {4}}, {2, {4}}, {kUnmarked, {1, 3, 0, 2}}};
  CHECK(canonical_code(PlanarTree(4, shuffled)) == canonical_code(make_ustar(4)));

  std::vector<VertexSpec> mirror{{kUnmarked, {1, 3, 2}}, {1, {0}}, {2, {0}}, {3, {0}}};
  CHECK(canonical_code(PlanarTree(3, mirror)) != canonical_code(make_ustar(3)));
  CHECK_FALSE(isomorphic(PlanarTree(3, mirror), make_ustar(3)));

  auto trees = enumerate_planar_trees(3);
  std::set<std::string> codes;
  for (const auto& t : trees) codes.insert(code(t));
  CHECK(codes.size() == 5);
}

TEST_CASE("canonical code has the documented shape and parses back") {
  CHECK(code(make_ustar(3)) == "1(u0(2)(3))");
  CHECK(code(make_mstar(2)) == "1(3(2))");
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_planar_trees(n)) CHECK(code(parse_code(n, code(t))) == code(t));
}

TEST_CASE("tree isomorphism witness is rotation preserving") {
  std::vector<VertexSpec> shuffled{{3, {4}}, {1, {4}}, {4, {4}}, {2, {4}}, {kUnmarked, {1, 3, 0, 2}}};
  PlanarTree a(4, shuffled);
  auto b = make_ustar(4);
  auto m = tree_isomorphism(a, b);
  REQUIRE(m);
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    CHECK(a.label(v) == b.label((*m)[v]));
    auto ra = a.rotation(v);
    auto rb = b.rotation((*m)[v]);
    REQUIRE(ra.size() == rb.size());
    auto at = std::find(rb.begin(), rb.end(), (*m)[ra[0]]) - rb.begin();
    for (std::size_t i = 0; i < ra.size(); ++i) CHECK((*m)[ra[i]] == rb[(at + i) % rb.size()]);
  }
}

TEST_CASE("geodesic") {
  auto s = make_ustar(3);
  CHECK(labels_along(s, geodesic(s, s.vertex_of(1), s.vertex_of(2))) == std::vector<int>{1, kUnmarked, 2});
  CHECK(geodesic(s, 2, 2) == std::vector<VertexId>{2});
  auto t = trivalent_four();
  CHECK(geodesic(t, t.vertex_of(1), t.vertex_of(4)) == std::vector<VertexId>{2, 0, 1, 5});
  CHECK_THROWS_AS(geodesic(s, 0, 9), std::out_of_range);
}

TEST_CASE("boundary walk visits each vertex valence-many times") {
  auto t = testing::hexagonal_prism_tree();
  auto walk = boundary_walk(t, t.vertex_of(1));
  CHECK(walk.front() == walk.back());
  std::vector<int> seen(t.vertex_count(), 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) ++seen[walk[i]];
  for (VertexId v = 0; v < t.vertex_count(); ++v) CHECK(seen[v] == t.valence(v));
}

TEST_CASE("contract") {
  auto t4 = trivalent_four();
  CHECK(code(contract(t4, Subforest{})) == code(t4));
  CHECK(code(contract(t4, Subforest({Edge(0, 1)}))) == code(make_ustar(4)));

  auto p = contract(t4, Subforest({Edge(0, 2), Edge(1, 4)}));
  CHECK_FALSE(validate(p).has_value());
  CHECK(code(p) == code(path_2134()));

  CHECK_THROWS_AS(contract(t4, Subforest({Edge(0, 2), Edge(0, 3)})), std::invalid_argument);
  CHECK_THROWS_AS(contract(t4, Subforest({Edge(2, 3)})), std::invalid_argument);
}

TEST_CASE("contraction subforest and leq") {
  auto t4 = trivalent_four();
  auto star = make_ustar(4);
  auto f = contraction_subforest(t4, star);
  REQUIRE(f);
  CHECK(*f == Subforest({Edge(0, 1)}));
  auto self = contraction_subforest(t4, t4);
  REQUIRE(self);
  CHECK(self->empty());
  CHECK_FALSE(contraction_subforest(star, t4).has_value());

  CHECK(leq(t4, star));
  CHECK(leq(t4, t4));
  CHECK_FALSE(leq(star, t4));
  CHECK_THROWS_AS(leq(make_ustar(3), star), std::invalid_argument);
}

TEST_CASE("enumerate subforests") {
  auto s = enumerate_subforests(make_ustar(3));
  CHECK(s.size() == 4);
  CHECK(s.front().empty());
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i].size() == 1);

  auto t4 = trivalent_four();
  auto all = enumerate_subforests(t4);
  CHECK(all.size() == 14);

  // Brute force over the 2^5 edge subsets.
  auto edges = t4.edges();
  std::size_t admissible = 0;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1u) es.push_back(edges[i]);
    admissible += is_admissible(t4, Subforest(es));
  }
  CHECK(admissible == 14);
}

TEST_CASE("neighborhood") {
  auto star = make_ustar(4);
  CHECK(code(neighborhood(star, 0).star) == code(star));

  auto t4 = trivalent_four();
  auto nb = neighborhood(t4, 0);
  CHECK(code(nb.star) == code(make_ustar(3)));
  CHECK(nb.original == std::vector<VertexId>{2, 3, 1});

  auto p = path_2134();
  CHECK(code(neighborhood(p, p.vertex_of(1)).star) == code(make_mstar(2)));
  CHECK_THROWS_AS(neighborhood(p, p.vertex_of(2)), std::invalid_argument);
}

TEST_CASE("cell dimension") {
  CHECK(cell_dimension(trivalent_four()) == 0);
  CHECK(cell_dimension(make_mstar(3)) == 2);
  CHECK(cell_dimension(testing::hexagonal_prism_tree()) == 3);
  CHECK(cell_dimension(make_ustar(5)) == 2);
}

TEST_CASE("expansions put the new vertex last, next to the split one") {
  auto s = make_ustar(4);
  auto ex = expand_vertex(s, 0);
  CHECK(ex.size() == 2);
  for (const auto& t : ex) {
    CHECK(t.adjacent(0, t.vertex_count() - 1));
    CHECK(leq(t, s));
  }
  CHECK(single_expansions(make_mstar(2)).size() == 2);
}

TEST_CASE("contraction laws over every tree with n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) {
      const auto forests = enumerate_subforests(t);
      std::set<std::string> images;
      for (const auto& f : forests) {
        auto c = contract(t, f);
        REQUIRE_FALSE(validate(c).has_value());
        CHECK(c.vertex_count() == t.vertex_count() - static_cast<int>(f.size()));
        images.insert(code(c));
      }
      // Distinct subforests give distinct contractions.
      CHECK(images.size() == forests.size());
      if (n > 4) continue;
      for (const auto& f1 : forests)
        for (const auto& f2 : forests) {
          const bool up = leq(contract(t, f1), contract(t, f2));
          CHECK(up == f1.is_subset_of(f2));
        }
    }
  }
}

TEST_CASE("leq is a partial order on planar 4-trees") {
  auto trees = enumerate_planar_trees(4);
  const auto k = trees.size();
  std::vector<std::vector<char>> r(k, std::vector<char>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i][j] = leq(trees[i], trees[j]);
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(r[i][i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) CHECK_FALSE((r[i][j] && r[j][i]));
      for (std::size_t l = 0; l < k; ++l)
        if (r[i][j] && r[j][l]) CHECK(r[i][l]);
    }
  }
}

TEST_CASE("cell dimension equals the edge drop to the bottom of the lower set") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_planar_trees(n)) {
      int most = 0;
      for (const auto& s : lower_set_trees(t)) most = std::max(most, s.edge_count());
      CHECK(cell_dimension(t) == most - t.edge_count());
    }
}

TEST_CASE("tree JSON round trip") {
  auto t = testing::hexagonal_prism_tree();
  auto j = tree_to_json(t);
  CHECK(j["n"] == 6);
  CHECK(j["vertices"].size() == 7);
  CHECK(j["vertices"][0]["label"].is_null());
  CHECK(j["vertices"][0]["id"] == "v0");
  CHECK(code(tree_from_json(j)) == code(t));

  nlohmann::json named = {{"n", 3},
                          {"vertices",
                           {{{"id", "c"}, {"label", nullptr}, {"rotation", {"a", "b", "d"}}},
                            {{"id", "a"}, {"label", 1}, {"rotation", {"c"}}},
                            {{"id", "b"}, {"label", 2}, {"rotation", {"c"}}},
                            {{"id", "d"}, {"label", 3}, {"rotation", {"c"}}}}}};
  CHECK(code(tree_from_json(named)) == code(make_ustar(3)));
  CHECK_THROWS_AS(tree_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
  named["vertices"][0]["rotation"][0] = "zz";
  CHECK_THROWS_AS(tree_from_json(named), std::invalid_argument);
}
