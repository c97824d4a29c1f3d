#pragma once

#include <vector>

#include "scw/polyform.hpp"

namespace scw {

/// Polynomial form on Delta^d whose pullback to facet i is facets[i], for
/// face data that agree on every codimension-2 face. Facets are processed in
/// order; each residual is extended by radial projection from the opposite
/// vertex, scaled by the smallest power of (1 - t_i) that clears denominators.
///
/// Throws Error(inconsistent_prescription) naming the first disagreeing pair.
PolyForm whitney_extend(int d, const std::vector<PolyForm>& facets);

}  // namespace scw
