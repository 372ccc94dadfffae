#pragma once

#include <optional>
#include <string>

#include "odeinv/curvature.hpp"

namespace odeinv {

enum class Case {
  GeneralPosition,
  MaximalDegeneration,
  FirstIntermediate,
  OtherIntermediate,
};

std::string caseName(Case c);

struct Verdict {
  Case kase = Case::GeneralPosition;
  // curvature flags; present only for the two intermediate cases
  std::optional<bool> umbilical, zeroMean, zeroGauss;
  bool intersectionClass = false;  // first intermediate with Omega == 0
  struct Witness {
    std::string F5, A, B, M, Omega, detR, Disc;
  } witness;

  std::string toJson() const;
};

Verdict classify(const CubicODE& eq);

/// True when the verdict (case and flags) survives the given change of
/// coordinates.
bool classificationInvariance(const CubicODE& eq, const PointMap& map);

}  // namespace odeinv
