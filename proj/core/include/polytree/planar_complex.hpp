#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polytree/isomorphism.hpp"
#include "polytree/order_complex.hpp"
#include "polytree/planar_tree.hpp"
#include "polytree/poset.hpp"

namespace polytree {

inline constexpr int kMaxEnumerateN = 7;
inline constexpr int kMaxPosetN = 6;

/// Every planar n-tree up to isomorphism, sorted by canonical code.
/// Work is split over `jobs` threads; the result does not depend on it.
/// Throws std::out_of_range unless 3 <= n <= 7.
std::vector<PlanarTree> enumerate_planar_trees(int n, int jobs = 1);

/// Trees paired with their poset; poset element i is trees[i], keyed by code.
struct TreePoset {
  std::vector<PlanarTree> trees;
  FinitePoset poset;
};

/// Order on a set of n-trees closed under taking intervals (the whole
/// poset, a lower set, an upper set). Covers are single-edge contractions
/// that stay inside the set.
TreePoset tree_poset(std::vector<PlanarTree> trees);

/// The planar tree poset. Throws std::out_of_range unless 3 <= n <= 6.
TreePoset build_pnr(int n, int jobs = 1);
FinitePoset build_pnr_poset(int n, int jobs = 1);

/// Trees below t (t included), reached by repeated vertex splitting.
std::vector<PlanarTree> lower_set_trees(const PlanarTree& t);
/// Trees above t (t included): all admissible contractions.
std::vector<PlanarTree> upper_set_trees(const PlanarTree& t);
TreePoset lower_set_poset(const PlanarTree& t);
TreePoset upper_set_poset(const PlanarTree& t);

/// Polytope factor of a lower set: K_index for an unmarked vertex of
/// valence index+1, W_index for a marked vertex of valence index >= 2.
struct Factor {
  enum class Kind { Associahedron, Cyclohedron };
  Kind kind;
  int index;
  VertexId vertex;

  std::string name() const;
  int dimension() const;
  /// K_2 is a point.
  bool trivial() const { return kind == Kind::Associahedron && index == 2; }
};

std::vector<Factor> factors(const PlanarTree& t);
/// Nontrivial factor names sorted and joined by 'x', or "point".
std::string factor_key(const PlanarTree& t);
FinitePoset factor_face_poset(const Factor& f);

struct CellCensus {
  std::map<int, std::size_t> by_dimension;
  std::map<std::string, std::size_t> by_factor_type;
  std::size_t total() const;
};

CellCensus census_of(const std::vector<PlanarTree>& trees);
/// Throws std::out_of_range unless 3 <= n <= 6.
CellCensus cell_census(int n, int jobs = 1);

struct LowerSetDecomposition {
  std::vector<Factor> factors;
  FinitePoset lower;
  FinitePoset model;
  std::optional<PosetMap> witness;
};

/// Throws std::out_of_range for n > 6.
LowerSetDecomposition decompose_lower_set(const PlanarTree& t);

/// Trees strictly above t, counted by cell dimension.
std::map<int, std::size_t> star_census(const PlanarTree& t);

struct BarycentricReport {
  SimplicialComplexSummary subdivision;
  std::uint64_t top_simplices = 0;
  /// Flags of the product polytope: multinomial times the factor flag counts.
  std::uint64_t product_flags = 0;
  bool agrees = false;
};

BarycentricReport verify_barycentric(const PlanarTree& t);

}  // namespace polytree
