#pragma once

#include <map>

#include "odeinv/curvature.hpp"

namespace odeinv {

enum class Dir { Alpha, Gamma };

/// Covariant derivative: one extra lower index, placed first among the
/// lower ones; weight unchanged.
PseudoField covariantDerivative(const PseudoField& field, const DegenerationFields& df);

/// Contraction of the covariant derivative with the alpha or gamma vector;
/// valence unchanged, weight raised by 2 (alpha) or 3 (gamma).
PseudoField directional(const PseudoField& field, Dir along,
                        const DegenerationFields& df, const FundamentalFields& ff);

/// Expansion coefficients of the four derived vectors in the basis
/// {alpha_vec, gamma_vec}: coef[k][a][b] is the coefficient of basis
/// vector k+1 in the expansion of the derivative of field b+1 along
/// direction a+1 (1 = alpha, 2 = gamma).
struct Expansion {
  RatFunc coef[2][2][2];
};

Expansion expansionCoefficients(const DegenerationFields& df,
                                const FundamentalFields& ff);

struct ScalarInvariants {
  RatFunc I1, I2, I3;
  Expansion expansion;
  std::map<int, RatFunc> higher;  // I_k for k >= 4

  const RatFunc& at(int k) const;
};

/// The base invariants plus the recursive tower, generated breadth-first
/// in triples to the given depth (depth 1 yields I4..I9).
ScalarInvariants baseInvariants(const DegenerationFields& df,
                                const FundamentalFields& ff,
                                const CurvatureData& cd, int depth = 1);

}  // namespace odeinv
