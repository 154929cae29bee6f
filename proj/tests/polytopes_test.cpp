#include <doctest.h>

#include <set>

#include "polytree/canonical.hpp"
#include "polytree/contraction.hpp"
#include "polytree/isomorphism.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/triangulation.hpp"
#include "support.hpp"

using namespace polytree;

namespace {

std::string code(const PlanarTree& t) { return canonical_code(t).str(); }

std::uint64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
  return c;
}

// Dissections of an ngon by k noncrossing diagonals.
std::uint64_t kirkman(int ngon, int k) { return binom(ngon - 3, k) * binom(ngon + k - 1, k) / (k + 1); }

std::uint64_t catalan(int m) { return binom(2 * m, m) / (m + 1); }

}  // namespace

TEST_CASE("diagonals and crossings") {
  CHECK(diagonals_cross(4, {1, 3}, {2, 4}));
  CHECK_FALSE(diagonals_cross(6, {1, 3}, {1, 4}));
  CHECK_FALSE(diagonals_cross(6, {1, 3}, {4, 6}));
  CHECK(diagonals_cross(6, {4, 1}, {6, 2}));
  CHECK_FALSE(is_diagonal(6, {1, 2}));
  CHECK_FALSE(is_diagonal(6, {1, 6}));
  CHECK_FALSE(is_diagonal(6, {0, 3}));
  CHECK(is_diagonal(6, {2, 6}));
  CHECK_THROWS_AS(diagonals_cross(6, {1, 2}, {3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(PartialTriangulation(4, {{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialTriangulation(2, {}), std::invalid_argument);
  CHECK(PartialTriangulation(6, {{4, 1}, {1, 3}}).key() == "{1-3,1-4}");
  CHECK(PartialTriangulation(6, {}).key() == "{}");
}

TEST_CASE("partial triangulation counts") {
  auto four = enumerate_partial_triangulations(4);
  REQUIRE(four.size() == 3);
  CHECK(four[0].key() == "{}");
  CHECK(four[1].key() == "{1-3}");
  CHECK(four[2].key() == "{2-4}");
  CHECK(tri_poset(5).size() == 11);

  for (int ngon = 3; ngon <= 9; ++ngon) {
    auto all = enumerate_partial_triangulations(ngon);
    std::map<std::size_t, std::uint64_t> by_size;
    for (const auto& pt : all) ++by_size[pt.size()];
    for (int k = 0; k <= ngon - 3; ++k) CHECK(by_size[k] == kirkman(ngon, k));
    CHECK(tri_poset(ngon).minimal_elements().size() == catalan(ngon - 2));
  }

  auto k5 = associahedron_face_poset(5);
  auto prof = height_profile(k5);
  CHECK(prof == std::vector<std::size_t>{14, 21, 9, 1});
  CHECK(facet_vertex_census(k5) == std::map<std::size_t, std::size_t>{{4, 3}, {5, 6}});
  CHECK(associahedron_face_poset(3).size() == 3);
}

TEST_CASE("centrally symmetric triangulations") {
  auto sq = enumerate_symmetric_triangulations(2);
  REQUIRE(sq.size() == 3);
  CHECK(height_profile(sym_tri_poset(3)) == std::vector<std::size_t>{6, 6, 1});
  auto w4 = cyclohedron_face_poset(4);
  CHECK(w4.minimal_elements().size() == 20);
  CHECK(height_profile(w4) == std::vector<std::size_t>{20, 30, 12, 1});
  CHECK(facet_vertex_census(w4) == std::map<std::size_t, std::size_t>{{4, 4}, {5, 4}, {6, 4}});

  for (int half = 2; half <= 5; ++half) {
    // Filter of the full enumeration against the direct one.
    std::vector<std::string> filtered;
    for (const auto& pt : enumerate_partial_triangulations(2 * half))
      if (is_centrally_symmetric(pt)) filtered.push_back(pt.key());
    std::vector<std::string> direct;
    for (const auto& pt : enumerate_symmetric_triangulations(half)) {
      CHECK(half_turn(pt) == pt);
      direct.push_back(pt.key());
    }
    std::sort(filtered.begin(), filtered.end());
    std::sort(direct.begin(), direct.end());
    CHECK(filtered == direct);
    CHECK(sym_tri_poset(half).minimal_elements().size() == binom(2 * half - 2, half - 1));
  }
}

TEST_CASE("symmetric poset equals the induced subposet") {
  for (int half = 2; half <= 4; ++half) {
    auto full = tri_poset(2 * half);
    std::vector<int> members;
    for (const auto& pt : enumerate_symmetric_triangulations(half)) members.push_back(full.index_of(pt.key()));
    auto induced = induced_subposet(full, members);
    auto direct = sym_tri_poset(half);
    REQUIRE(induced.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      for (std::size_t j = 0; j < direct.size(); ++j) {
        auto a = induced.index_of(direct.key(static_cast<int>(i)));
        auto b = induced.index_of(direct.key(static_cast<int>(j)));
        CHECK(induced.leq(a, b) == direct.leq(static_cast<int>(i), static_cast<int>(j)));
      }
  }
}

TEST_CASE("dual tree") {
  CHECK(code(dual_tree(PartialTriangulation(4, {}))) == code(make_ustar(4)));
  CHECK(code(dual_tree(PartialTriangulation(4, {{1, 3}}))) == code(testing::trivalent_four()));
  auto fan = dual_tree(PartialTriangulation(5, {{1, 3}, {1, 4}}));
  CHECK_FALSE(validate(fan).has_value());
  CHECK(fan.vertex_count() == 8);
  CHECK(cell_dimension(fan) == 0);
  CHECK(from_dual_tree(fan) == PartialTriangulation(5, {{1, 3}, {1, 4}}));
  CHECK_THROWS_AS(from_dual_tree(make_mstar(3)), std::invalid_argument);
}

TEST_CASE("dual tree is an order isomorphism onto the lower set of the star") {
  for (int ngon = 4; ngon <= 7; ++ngon) {
    auto pts = enumerate_partial_triangulations(ngon);
    std::vector<PlanarTree> duals;
    std::set<std::string> codes;
    for (const auto& pt : pts) {
      duals.push_back(dual_tree(pt));
      CHECK(from_dual_tree(duals.back()) == pt);
      codes.insert(code(duals.back()));
    }
    std::set<std::string> lower;
    for (const auto& t : lower_set_trees(make_ustar(ngon))) lower.insert(code(t));
    CHECK(codes == lower);
    if (ngon > 6) continue;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) CHECK(pts[i].leq(pts[j]) == leq(duals[i], duals[j]));
  }
  // Dropping a diagonal contracts one edge.
  auto tri = tri_poset(7);
  auto pts = enumerate_partial_triangulations(7);
  for (auto [lo, hi] : tri.covers()) {
    auto a = std::find_if(pts.begin(), pts.end(), [&](const auto& p) { return p.key() == tri.key(lo); });
    auto b = std::find_if(pts.begin(), pts.end(), [&](const auto& p) { return p.key() == tri.key(hi); });
    auto f = contraction_subforest(dual_tree(*a), dual_tree(*b));
    REQUIRE(f);
    CHECK(f->size() == 1);
  }
}

TEST_CASE("half-turn quotient") {
  for (int m = 2; m <= 4; ++m) CHECK(code(sym_quotient(make_ustar(2 * m))) == code(make_mstar(m)));

  // The square cut along 1-3 quotients to the unmarked 3-star, an endpoint of W2.
  auto q = sym_quotient(dual_tree(PartialTriangulation(4, {{1, 3}})));
  CHECK(code(q) == code(make_ustar(3)));
  CHECK(leq(q, make_mstar(2)));

  auto hex = sym_quotient(dual_tree(PartialTriangulation(6, {{1, 4}, {1, 3}, {4, 6}})));
  CHECK(hex.n() == 4);
  CHECK(cell_dimension(hex) == 0);
  CHECK(leq(hex, make_mstar(3)));

  CHECK_THROWS_AS(sym_quotient(dual_tree(PartialTriangulation(6, {{1, 3}}))), std::invalid_argument);
  CHECK_THROWS_AS(sym_quotient(make_ustar(5)), std::invalid_argument);

  for (int half = 2; half <= 4; ++half) {
    auto pts = enumerate_symmetric_triangulations(half);
    std::vector<PlanarTree> images;
    std::set<std::string> codes;
    for (const auto& pt : pts) {
      CHECK(is_centrally_symmetric(dual_tree(pt)));
      images.push_back(sym_quotient(dual_tree(pt)));
      codes.insert(code(images.back()));
    }
    std::set<std::string> lower;
    for (const auto& t : lower_set_trees(make_mstar(half))) lower.insert(code(t));
    CHECK(codes == lower);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) CHECK(pts[i].leq(pts[j]) == leq(images[i], images[j]));
  }
}

TEST_CASE("triangulation JSON") {
  PartialTriangulation pt(6, {{1, 4}, {2, 4}});
  auto j = triangulation_to_json(pt);
  CHECK(j["ngon"] == 6);
  CHECK(j["diagonals"] == nlohmann::json{{1, 4}, {2, 4}});
  CHECK(triangulation_from_json(j) == pt);
  CHECK_THROWS_AS(triangulation_from_json(nlohmann::json{{"ngon", 4}, {"diagonals", {{1, 3}, {2, 4}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(triangulation_from_json(nlohmann::json{{"ngon", "six"}}), std::invalid_argument);
}
