#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytree/planar_tree.hpp"
#include "polytree/poset.hpp"

namespace polytree {

/// Chord between polygon corners a < b (corners are 1..ngon, counter-clockwise).
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  Diagonal(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Corners are distinct, in range and not cyclically adjacent.
bool is_diagonal(int ngon, const Diagonal& d);

/// True when the endpoints strictly interleave. Throws std::invalid_argument
/// if either chord is not a diagonal of the ngon.
bool diagonals_cross(int ngon, const Diagonal& d1, const Diagonal& d2);

/// A set of pairwise noncrossing diagonals. Fewer diagonals is higher in the
/// order (reverse containment).
class PartialTriangulation {
 public:
  PartialTriangulation() = default;
  /// Throws std::invalid_argument for ngon < 3, a non-diagonal, or a crossing pair.
  PartialTriangulation(int ngon, std::vector<Diagonal> diagonals);

  int ngon() const noexcept { return ngon_; }
  const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }
  std::size_t size() const noexcept { return diagonals_.size(); }
  bool contains(const Diagonal& d) const;

  /// "{1-3,1-4}"; "{}" for no diagonals.
  std::string key() const;

  /// pt <= other when pt holds every diagonal of other.
  bool leq(const PartialTriangulation& other) const;

  friend bool operator==(const PartialTriangulation&, const PartialTriangulation&) = default;

 private:
  int ngon_ = 0;
  std::vector<Diagonal> diagonals_;
};

/// All partial triangulations of the ngon, by size then lexicographically.
std::vector<PartialTriangulation> enumerate_partial_triangulations(int ngon);

/// Face poset of the associahedron drawn on the ngon; keys are PartialTriangulation::key().
FinitePoset tri_poset(int ngon);

/// Shift by half a turn on the 2*half-gon.
PartialTriangulation half_turn(const PartialTriangulation& pt);
bool is_centrally_symmetric(const PartialTriangulation& pt);

/// Centrally symmetric partial triangulations of the 2*half-gon (half >= 2).
std::vector<PartialTriangulation> enumerate_symmetric_triangulations(int half);
FinitePoset sym_tri_poset(int half);

/// Face poset of K_n as tri_poset(n+1); n >= 2.
FinitePoset associahedron_face_poset(int n);
/// Face poset of W_n as sym_tri_poset(n); n >= 2.
FinitePoset cyclohedron_face_poset(int n);

/// Dual planar tree: side k (corners k and k+1) becomes the leaf marked k,
/// each region an unmarked vertex with its sides in counter-clockwise order.
PlanarTree dual_tree(const PartialTriangulation& pt);

/// Inverse of dual_tree. Throws std::invalid_argument if t is not the dual of
/// a partial triangulation (some mark is interior, or leaves are out of order).
PartialTriangulation from_dual_tree(const PlanarTree& t);

/// True if relabelling k -> k+n/2 (mod n) yields an isomorphic tree.
bool is_centrally_symmetric(const PlanarTree& t);

/// Quotient of a centrally symmetric tree below the 2m-star by the half
/// turn: an (m+1)-tree whose mark m+1 sits where the centre was. Throws
/// std::invalid_argument for a tree that is not symmetric or not below the star.
PlanarTree sym_quotient(const PlanarTree& t);

/// For each element covered by the maximum: number of minimal elements
/// below it. Returns (vertex count -> number of such facets). Requires a
/// unique maximum.
std::map<std::size_t, std::size_t> facet_vertex_census(const FinitePoset& p);

nlohmann::json triangulation_to_json(const PartialTriangulation& pt);
/// Throws std::invalid_argument on malformed input.
PartialTriangulation triangulation_from_json(const nlohmann::json& j);

}  // namespace polytree
