#pragma once

#include <random>
#include <vector>

#include "odeinv/model.hpp"

namespace odeinv {

/// P a random polynomial in y alone with non-vanishing second y-derivative
/// (guaranteed intermediate degeneration), Q = R = S = 0.
CubicODE randomPOnly(std::mt19937_64& rng, int degree);

/// P a random bivariate polynomial, Q affine-linear, R = S = 0.
/// A candidate generator for intermediate equations; callers reject by
/// classification.
CubicODE randomMixed(std::mt19937_64& rng, int degree);

/// All four coefficients drawn as random bivariate polynomials; any
/// classification outcome is possible.
CubicODE randomFull(std::mt19937_64& rng, int degree);

/// Invertible affine map with small integer coefficients; exact inverse.
PointMap randomAffineMap(std::mt19937_64& rng);

/// Triangular polynomial shear (x, y + p(x)) or (x + p(y), y).
PointMap randomShearMap(std::mt19937_64& rng);

/// An affine map, a shear, or a composition of the two.
PointMap randomMap(std::mt19937_64& rng);

/// Deterministic seeded corpora.
std::vector<CubicODE> pOnlyCorpus(int count, int degree, unsigned seed);

/// First-case intermediate equations found by rejection sampling over
/// the mixed family and sheared P-only draws. Throws when the draw
/// budget is exhausted.
std::vector<CubicODE> intermediateCorpus(int count, int degree, unsigned seed);

}  // namespace odeinv
