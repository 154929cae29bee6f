#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytree/canonical.hpp"
#include "polytree/isomorphism.hpp"
#include "polytree/planar_tree.hpp"
#include "polytree/poset.hpp"

namespace polytree {

/// No edge joins two unmarked vertices.
bool is_reduced(const PlanarTree& t);

/// A planar tree known to be reduced.
class ReducedTree {
 public:
  /// Throws std::invalid_argument if t is invalid or not reduced.
  explicit ReducedTree(PlanarTree t);
  const PlanarTree& tree() const noexcept { return tree_; }

 private:
  PlanarTree tree_;
};

/// Contracts every unmarked-unmarked edge.
ReducedTree reduce(const PlanarTree& t);

/// t1 <= t2 and every component of the contracted subforest holds one mark.
bool leq_m(const PlanarTree& t1, const PlanarTree& t2);
/// t1 <= t2 and every component of the contracted subforest is unmarked.
bool leq_u(const PlanarTree& t1, const PlanarTree& t2);
/// t1 <= t2 and every contracted edge has exactly one marked end.
bool leq_m_edgewise(const PlanarTree& t1, const PlanarTree& t2);

/// Middle tree of the factorisation t1 -> t3 -> t2 whose first step
/// contracts the unmarked-unmarked edges of the subforest and whose second
/// step contracts the rest. Throws std::invalid_argument unless t1 <= t2.
PlanarTree um_factor(const PlanarTree& t1, const PlanarTree& t2);

/// Greatest common lower bound of t_u and t_m below t, where t_u splits
/// unmarked vertices of t and t_m splits marked ones. Throws
/// std::invalid_argument if leq_u(t_u, t) or leq_m(t_m, t) fails.
PlanarTree um_meet(const PlanarTree& t_u, const PlanarTree& t_m, const PlanarTree& t);

/// Trees sharing one reduction. The representative is the maximum.
class ReducedClass {
 public:
  ReducedClass(ReducedTree representative, std::vector<PlanarTree> members);

  const ReducedTree& representative() const noexcept { return rep_; }
  /// Sorted by canonical code.
  const std::vector<PlanarTree>& members() const noexcept { return members_; }
  const std::vector<CanonicalCode>& member_codes() const noexcept { return codes_; }
  bool contains(const CanonicalCode& code) const;
  /// Canonical code of the representative.
  const std::string& key() const { return key_; }
  int n() const { return rep_.tree().n(); }

  friend bool operator==(const ReducedClass& a, const ReducedClass& b) { return a.key_ == b.key_; }

 private:
  ReducedTree rep_;
  std::vector<PlanarTree> members_;
  std::vector<CanonicalCode> codes_;
  std::string key_;
};

inline constexpr int kMaxReducedN = 6;

/// Class of reduce(t): every tree obtained from the reduction by splitting
/// unmarked vertices into unmarked subtrees. Throws std::out_of_range for n > 6.
ReducedClass class_of(const PlanarTree& t);

/// Some member of c1 is <= some member of c2.
bool red_leq(const ReducedClass& c1, const ReducedClass& c2);

enum class CoverMove { Contraction, Slide, Split };
std::string to_string(CoverMove m);

/// Kind of a cover c1 < c2 of classes. When the representatives are not
/// comparable the witness is the member of c2 with fewest unmarked-unmarked
/// edges (then least code) having a marked vertex whose split lands in c1.
/// Throws std::invalid_argument when c1 < c2 is not a cover.
CoverMove classify_cover_move(const ReducedClass& c1, const ReducedClass& c2);

struct ClassPoset {
  std::vector<ReducedClass> classes;
  /// Element i is classes[i], keyed by the representative's code.
  FinitePoset poset;
};

/// Orders classes by red_leq (checked to be a partial order).
ClassPoset class_poset(std::vector<ReducedClass> classes);

/// All classes of n-trees, 3 <= n <= 5.
ClassPoset reduced_poset(int n);

/// Classes below / above c in the reduced order (c included).
ClassPoset lower_class_poset(const ReducedClass& c);
ClassPoset upper_class_poset(const ReducedClass& c);

struct LowerClassSet {
  ClassPoset classes;
  FinitePoset model;
  std::optional<PosetMap> witness;
  /// region_subsets[i]: key of the subset of {1..k} assigned to class i by
  /// the regions around the centre mark.
  std::vector<std::string> region_subsets;
  /// True if the region map is itself an isomorphism onto the model.
  bool region_map_is_isomorphism = false;
};

/// Classes below the marked k-star (centre label k+1), compared against
/// boolean_star(k). Throws std::out_of_range unless 2 <= k <= 5.
LowerClassSet lower_class_set(int k);

nlohmann::json class_to_json(const ReducedClass& c);

}  // namespace polytree
