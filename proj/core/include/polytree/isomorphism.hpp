#pragma once

#include <optional>
#include <vector>

#include "polytree/poset.hpp"

namespace polytree {

/// witness[i] is the element of Q matched with element i of P.
using PosetMap = std::vector<int>;

/// Backtracking search for an order isomorphism P -> Q. Candidates are
/// pruned by a refined colouring (rank, co-rank, cover degrees and the
/// colours of neighbours).
std::optional<PosetMap> is_isomorphic(const FinitePoset& p, const FinitePoset& q);

/// Checks that `map` is a bijection carrying covers of P exactly onto covers of Q.
bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const PosetMap& map);

}  // namespace polytree
