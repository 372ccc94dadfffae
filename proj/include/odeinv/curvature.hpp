#pragma once

#include "odeinv/fields.hpp"

namespace odeinv {

struct CurvatureData {
  RatFunc Rtensor[2][2][2][2];  // R^k_{r i j}, weight 0
  RatFunc omega[2][2];          // trace over k of R^k_{k i j}
  RatFunc Omega;                // weight 1
  RatFunc Rop[2][2];            // R^k_q = R^k_{q 1 2}, weight 1
  RatFunc trR;                  // = (3/5) Omega
  RatFunc detR;
  RatFunc Disc;                 // trR^2 - 4 detR, weight 2
};

/// omega and Omega from phi, cross-checked against the explicit
/// branch formula for Omega whenever a branch applies.
std::pair<std::array<std::array<RatFunc, 2>, 2>, RatFunc> omegaFromPhi(
    const DegenerationFields& df);

CurvatureData curvature(const DegenerationFields& df);

}  // namespace odeinv
