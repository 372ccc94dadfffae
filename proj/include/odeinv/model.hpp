#pragma once

#include <array>
#include <vector>

#include "odeinv/ratfunc.hpp"

namespace odeinv {

/// Coefficients of y'' = P + 3 Q y' + 3 R (y')^2 + S (y')^3.
struct CubicODE {
  RatFunc P, Q, R, S;

  bool operator==(const CubicODE&) const = default;
};

/// A birational change of coordinates given as a forward/inverse pair,
/// both stored as rational functions of the same two formal variables.
struct PointMap {
  RatFunc fwdX, fwdY;  // new coordinates as functions of (x, y)
  RatFunc invX, invY;  // old coordinates as functions of the new ones

  static PointMap identity();
};

struct Jacobians {
  // entries indexed [row][col]; index 0 <-> x, 1 <-> y
  std::array<std::array<RatFunc, 2>, 2> T;  // forward Jacobian
  std::array<std::array<RatFunc, 2>, 2> S;  // inverse Jacobian, composed with forward
  RatFunc detT;
};

/// Throws std::domain_error when the inverse check fails or det T == 0.
void validateMap(const PointMap& map);

Jacobians jacobians(const PointMap& map);

/// Coefficients of the transformed equation, expressed in the new
/// coordinates (same formal variables).
CubicODE pushforward(const CubicODE& eq, const PointMap& map);

PointMap composeMaps(const PointMap& first, const PointMap& second);  // second after first

/// Component array of a pseudotensorial field: r upper and s lower
/// indices, each in {0, 1} (0 <-> x, 1 <-> y), flattened with the first
/// index varying slowest.
struct PseudoField {
  int upper = 0, lower = 0;
  int weight = 0;
  std::vector<RatFunc> comp;

  static PseudoField scalar(const RatFunc& f, int weight);
  static PseudoField covector(const RatFunc& c1, const RatFunc& c2, int weight);
  static PseudoField vector(const RatFunc& c1, const RatFunc& c2, int weight);

  size_t componentCount() const { return size_t{1} << (upper + lower); }
  /// indices: upper indices first, then lower ones
  RatFunc& at(const std::vector<int>& idx);
  const RatFunc& at(const std::vector<int>& idx) const;

  bool operator==(const PseudoField&) const = default;
};

/// The constant skew field d_ij (weight -1) / d^ij (weight +1).
PseudoField skewLower();
PseudoField skewUpper();

/// Transport of a field whose components live in the tilde coordinates
/// back to the original ones: compose with the forward map, contract
/// with the transition matrices, scale by (det T)^weight.
PseudoField transformPseudoField(const PseudoField& field, const PointMap& map);

}  // namespace odeinv
