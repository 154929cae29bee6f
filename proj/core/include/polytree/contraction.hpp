#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polytree/planar_tree.hpp"

namespace polytree {

/// Edge set of a host tree. The host is passed alongside to every operation;
/// a Subforest is admissible for a host when each connected component of its
/// edges holds at most one marked vertex.
class Subforest {
 public:
  Subforest() = default;
  explicit Subforest(std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(const Edge& e) const;
  bool is_subset_of(const Subforest& other) const;

  friend bool operator==(const Subforest&, const Subforest&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Vertex sets of the connected components spanned by the subforest's edges
/// (isolated vertices are not listed).
std::vector<std::vector<VertexId>> subforest_components(const PlanarTree& host, const Subforest& f);

/// True when every edge is in the host and no component holds two marks.
bool is_admissible(const PlanarTree& host, const Subforest& f);

/// Number of marked vertices in a component.
int marked_count(const PlanarTree& host, std::span<const VertexId> component);

struct Contraction {
  PlanarTree tree;
  /// image[v] is the vertex of `tree` that host vertex v collapses to.
  std::vector<VertexId> image;
};

/// Collapses each component of f to a single vertex. The merged vertex keeps
/// the component's mark (if any) and its rotation is the counter-clockwise
/// boundary order of the component's outgoing edges.
/// Throws std::invalid_argument for an edge outside the host or a component
/// carrying two marks.
PlanarTree contract(const PlanarTree& t, const Subforest& f);
Contraction contract_with_map(const PlanarTree& t, const Subforest& f);

/// All admissible subforests of t, including the empty one, ordered by size
/// and then lexicographically.
std::vector<Subforest> enumerate_subforests(const PlanarTree& t);

/// The unique subforest F of t1 with contract(t1, F) isomorphic to t2.
/// Throws std::invalid_argument when n differs.
std::optional<Subforest> contraction_subforest(const PlanarTree& t1, const PlanarTree& t2);

/// t1 <= t2 in the planar tree poset (t2 is a contraction of t1).
bool leq(const PlanarTree& t1, const PlanarTree& t2);

/// An edge may be contracted on its own unless both ends are marked.
bool is_contractible(const PlanarTree& t, const Edge& e);

/// Every tree obtained by splitting vertex v into two adjacent vertices
/// (the inverse of a single-edge contraction), deduplicated and sorted by
/// canonical code. In each result the new vertex is the last one and is
/// adjacent to v.
std::vector<PlanarTree> expand_vertex(const PlanarTree& t, VertexId v);

/// Trees covered by t: expand_vertex over all vertices, sorted by code.
std::vector<PlanarTree> single_expansions(const PlanarTree& t);

struct Neighborhood {
  /// make_ustar(k) or make_mstar(k) shape with fresh leaf marks 1..k.
  PlanarTree star;
  /// original[i] is the host vertex receiving fresh mark i+1.
  std::vector<VertexId> original;
};

/// Star on v and its neighbours. Neighbours get fresh marks 1..k in rotation
/// order; a marked center is relabelled k+1. Throws std::invalid_argument
/// when v is a leaf.
Neighborhood neighborhood(const PlanarTree& t, VertexId v);

}  // namespace polytree
