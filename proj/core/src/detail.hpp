#pragma once

// Internal helpers shared between translation units. Inputs are assumed valid.

#include <string>
#include <vector>

#include "polytree/canonical.hpp"
#include "polytree/contraction.hpp"
#include "polytree/planar_tree.hpp"

namespace polytree::detail {

CanonicalForm canonical_form_unchecked(const PlanarTree& t);

inline CanonicalCode code_of(const PlanarTree& t) { return canonical_form_unchecked(t).code; }

Contraction contract_unchecked(const PlanarTree& t, const Subforest& f);

/// Position of `w` in the rotation of `v`.
int rotation_index(const PlanarTree& t, VertexId v, VertexId w);

}  // namespace polytree::detail
