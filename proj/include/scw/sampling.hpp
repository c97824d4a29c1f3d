#pragma once

#include <cstdint>
#include <random>

#include "scw/polyform.hpp"
#include "scw/simplicial_form.hpp"

namespace scw {

/// The single generator type behind every seeded sampler and random input.
using Rng = std::mt19937_64;

/// Numerator in [-span, span], denominator in [1, 4].
Rational random_rational(Rng& rng, int span = 5);
Poly random_poly(Rng& rng, int nvars, int max_degree, int terms = 3);
/// Every component filled with a small random polynomial.
PolyForm random_form(Rng& rng, int dim, int degree, int max_poly_degree = 2);
/// Face-compatible random form built skeleton by skeleton: random constants on
/// vertices when degree 0, then on every cell the extension of the boundary
/// data plus a random term vanishing on the boundary.
SimplicialForm random_simplicial_form(Rng& rng, const SetPtr& base, int degree, int max_poly_degree = 1);

/// prod_j t_j on Delta^d; its pullback to every facet vanishes.
Poly interior_bump(int d);

}  // namespace scw
