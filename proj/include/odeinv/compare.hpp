#pragma once

#include <string>

#include "odeinv/model.hpp"

namespace odeinv {

/// Outcome of the necessary-condition comparison. `possiblyEquivalent`
/// true means no invariant separated the equations; it is never a claim
/// of equivalence.
struct CompareResult {
  bool possiblyEquivalent = false;
  std::string reason;
};

/// Compares the scalar invariants I1, I3 of two first-case equations:
/// constants directly, non-constant pairs through the implicit relation
/// obtained by resultant elimination. Throws std::domain_error unless
/// both equations are in the first intermediate case.
CompareResult compareEquations(const CubicODE& a, const CubicODE& b);

}  // namespace odeinv
