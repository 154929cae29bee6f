#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytree/isomorphism.hpp"
#include "polytree/poset.hpp"
#include "polytree/reduced.hpp"

namespace polytree {

/// Hypertree on the cyclically ordered vertices 1..n.
class NoncrossingHypertree {
 public:
  NoncrossingHypertree() = default;
  /// Throws std::invalid_argument unless the hyperedges form a noncrossing hypertree.
  NoncrossingHypertree(int n, std::vector<std::vector<int>> hyperedges);

  int n() const noexcept { return n_; }
  /// Each sorted; sorted lexicographically.
  const std::vector<std::vector<int>>& hyperedges() const noexcept { return edges_; }
  /// "{{1,2},{2,3}}".
  std::string key() const;
  /// Every hyperedge of *this lies inside a hyperedge of other.
  bool leq(const NoncrossingHypertree& other) const;

  friend bool operator==(const NoncrossingHypertree&, const NoncrossingHypertree&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
};

/// Hulls of a and b overlap beyond shared vertices: four distinct points
/// a1 < b1 < a2 < b2 with a1, a2 in a and b1, b2 in b.
bool hyperedges_cross(const std::vector<int>& a, const std::vector<int>& b);

/// Empty when valid, otherwise the reason.
std::optional<std::string> hypertree_violation(int n, const std::vector<std::vector<int>>& hyperedges);

/// Sorted by key. Throws std::out_of_range unless 3 <= n <= 7.
std::vector<NoncrossingHypertree> enumerate_ncht(int n);
FinitePoset ncht_poset(int n);

/// Hyperedges: neighbours of each unmarked vertex of the representative and
/// each edge between marks. Throws std::invalid_argument when c is not above
/// the class of the unmarked n-star.
NoncrossingHypertree class_to_hypertree(const ReducedClass& c);
ReducedClass hypertree_to_class(const NoncrossingHypertree& h);

struct ReducedProductsReport {
  FinitePoset lower;
  FinitePoset lower_model;
  std::optional<PosetMap> lower_witness;
  FinitePoset upper;
  FinitePoset upper_model;
  std::optional<PosetMap> upper_witness;
  bool passed() const { return lower_witness.has_value() && upper_witness.has_value(); }
};

/// Lower classes against the product of boolean_star(val) over marked
/// interior vertices; upper classes against the product of dual(ncht_poset(val))
/// over unmarked vertices.
ReducedProductsReport verify_reduced_products(const ReducedTree& rep);

nlohmann::json hypertree_to_json(const NoncrossingHypertree& h);
NoncrossingHypertree hypertree_from_json(const nlohmann::json& j);

}  // namespace polytree
