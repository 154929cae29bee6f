#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polytree/planar_tree.hpp"

namespace polytree {

/// Printable string identifying a planar tree up to label- and
/// rotation-preserving isomorphism.
///
/// The code is a depth-first walk from the vertex labelled 1. Marked
/// vertices print as their label, unmarked ones as `u<k>` in first-visit
/// order, and every subtree is wrapped in parentheses, e.g. `1(u0(2)(3))`.
/// Of the val(v1) possible starting edges the lexicographically least
/// encoding is kept.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string text) : text_(std::move(text)) {}

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string text_;
};

/// Canonical code plus the vertex visit order of the winning traversal.
/// Two trees with equal codes are isomorphic via order[i] <-> order[i].
struct CanonicalForm {
  CanonicalCode code;
  std::vector<VertexId> order;
};

/// Throws std::invalid_argument for an invalid tree.
CanonicalCode canonical_code(const PlanarTree& t);
CanonicalForm canonical_form(const PlanarTree& t);

bool isomorphic(const PlanarTree& a, const PlanarTree& b);

/// Vertex bijection a -> b preserving marks, adjacency and rotation order.
std::optional<std::vector<VertexId>> tree_isomorphism(const PlanarTree& a, const PlanarTree& b);

}  // namespace polytree

template <>
struct std::hash<polytree::CanonicalCode> {
  std::size_t operator()(const polytree::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
