#pragma once

#include <cstdint>
#include <vector>

#include "polytree/poset.hpp"

namespace polytree {

struct SimplicialComplexSummary {
  /// simplex_counts[d] is the number of d-simplices.
  std::vector<std::uint64_t> simplex_counts;
  /// -1 for the empty complex.
  int top_dimension = -1;
};

/// Counts chains of every length. Throws std::overflow_error if a count
/// leaves the 64-bit range.
SimplicialComplexSummary order_complex(const FinitePoset& p);

std::int64_t euler_characteristic(const SimplicialComplexSummary& s);

}  // namespace polytree
