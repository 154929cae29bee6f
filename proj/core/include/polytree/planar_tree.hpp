#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polytree {

using VertexId = int;

/// Label value carried by unmarked vertices.
inline constexpr int kUnmarked = 0;

/// Caller-facing description of one vertex: its marking and the
/// counter-clockwise cyclic order of its neighbours.
struct VertexSpec {
  int label = kUnmarked;
  std::vector<VertexId> rotation;
};

/// Undirected edge, stored with a <= b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(std::min(u, v)), b(std::max(u, v)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A marked n-tree together with a rotation system.
///
/// Vertex identities are positions 0..V-1 and carry no meaning beyond the
/// object; two trees are considered equal when their canonical codes agree.
/// Construction does not validate: use validate() or require_valid().
class PlanarTree {
 public:
  PlanarTree() = default;
  PlanarTree(int n, std::span<const VertexSpec> vertices);
  PlanarTree(int n, const std::vector<VertexSpec>& vertices)
      : PlanarTree(n, std::span<const VertexSpec>(vertices)) {}

  int n() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  int edge_count() const noexcept { return static_cast<int>(adjacency_.size()) / 2; }

  bool contains(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }
  int label(VertexId v) const { return labels_.at(v); }
  bool is_marked(VertexId v) const { return label(v) != kUnmarked; }
  std::span<const VertexId> rotation(VertexId v) const;
  int valence(VertexId v) const { return offsets_.at(v + 1) - offsets_.at(v); }
  bool is_leaf(VertexId v) const { return valence(v) == 1; }

  std::optional<VertexId> find_label(int label) const;
  /// Vertex carrying `label`; throws std::out_of_range when absent.
  VertexId vertex_of(int label) const;

  bool adjacent(VertexId u, VertexId v) const;
  /// Sorted edge list.
  std::vector<Edge> edges() const;
  std::vector<VertexSpec> specs() const;

 private:
  int n_ = 0;
  std::vector<int> labels_;
  std::vector<int> offsets_{0};
  std::vector<VertexId> adjacency_;
};

enum class Violation {
  TooFewMarks,
  TooFewVertices,
  TooManyVertices,
  BadNeighbour,
  AsymmetricRotation,
  NotATree,
  BadLabel,
  UnmarkedLowValence,
};

struct ViolationReport {
  Violation kind;
  std::string message;
};

/// Checks every structural invariant of a planar n-tree and reports the first
/// one that fails, or nullopt when the tree is valid.
std::optional<ViolationReport> validate(const PlanarTree& t);

/// Throws std::invalid_argument carrying the violation message.
void require_valid(const PlanarTree& t);

/// Unmarked center of valence k with leaves 1..k counter-clockwise (k >= 3).
PlanarTree make_ustar(int k);

/// Marked center labelled k+1 with leaves 1..k counter-clockwise (k >= 2).
PlanarTree make_mstar(int k);

/// The unique simple path from a to b, endpoints included.
std::vector<VertexId> geodesic(const PlanarTree& t, VertexId a, VertexId b);

/// Closed walk around the tree that leaves each vertex through the rotation
/// successor of the edge it arrived on. Starts and ends at `start`; every
/// vertex v appears valence(v) times (once for a leaf).
std::vector<VertexId> boundary_walk(const PlanarTree& t, VertexId start);

/// Dimension of the polytope whose face poset is the lower set of t:
/// sum of (val-3) over unmarked vertices plus (val-1) over marked interior ones.
int cell_dimension(const PlanarTree& t);

}  // namespace polytree
