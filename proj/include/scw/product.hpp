#pragma once

#include "scw/simplicial_map.hpp"
#include "scw/simplicial_set.hpp"

namespace scw {

/// X x Delta^1 in its prism presentation. Each nondegenerate n-cell y of X
/// contributes n+2 cells (y, w) in dimension n and n+1 prism cells in
/// dimension n+1, indexed by where the interval coordinate jumps.
struct IntervalProduct {
    SetPtr product;
    SimplicialMap i0;          ///< X -> X x {0}
    SimplicialMap i1;          ///< X -> X x {1}
    SimplicialMap projection;  ///< X x Delta^1 -> X
    SimplicialMap to_interval; ///< X x Delta^1 -> Delta^1
};

IntervalProduct product_with_interval(const SetPtr& x);

}  // namespace scw
