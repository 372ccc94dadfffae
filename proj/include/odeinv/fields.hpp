#pragma once

#include "odeinv/model.hpp"

namespace odeinv {

/// The two covector families attached to every equation of the class,
/// plus the fifth power of the relative invariant F.
struct FundamentalFields {
  RatFunc A, B;   // alpha covector components, weight 1
  RatFunc G, H;   // beta = (-H, G), weight 3
  RatFunc F5;     // 3 F^5 = A G + B H, weight 5

  PseudoField alphaCov() const { return PseudoField::covector(A, B, 1); }
  PseudoField betaCov() const { return PseudoField::covector(-H, G, 3); }
  PseudoField alphaVec() const { return PseudoField::vector(B, -A, 2); }
  PseudoField betaVec() const { return PseudoField::vector(G, H, 4); }
};

FundamentalFields fundamental(const CubicODE& eq);

/// Structures available once F^5 vanishes identically while the alpha
/// covector does not. Built in two phases: everything except gamma first,
/// then gamma once Omega (computable from phi alone) is known.
struct DegenerationFields {
  CubicODE eq;            // the source equation
  RatFunc A, B;           // alpha components, copied from FundamentalFields
  bool viaB = false;      // which branch of the defining formulas was used
  RatFunc N;              // weight 2
  RatFunc M;              // weight 4
  RatFunc phi[2];         // not a tensor field
  RatFunc thetaLow[2][2][2];  // theta_kij, fully symmetric
  RatFunc theta[2][2][2];     // theta^k_ij
  RatFunc Gamma[2][2][2];     // connection components
  RatFunc Omega;          // weight 1; set during the gamma phase
  bool gammaReady = false;
  PseudoField gammaCov;   // (gamma_1, gamma_2), weight 2
  PseudoField gammaVec;   // (C, D) = (gamma_2, -gamma_1), weight 3
};

/// Phase one: N, M, phi, theta, Gamma. Throws std::domain_error when the
/// preconditions (F5 == 0, alpha != 0) fail.
DegenerationFields degenerationPhi(const CubicODE& eq, const FundamentalFields& ff);

/// Phase two: gamma, given Omega.
void finishGamma(DegenerationFields& df, const CubicODE& eq,
                 const FundamentalFields& ff, const RatFunc& Omega);

/// Omega from phi alone: (5/3) (d phi_1 / dy - d phi_2 / dx).
RatFunc omegaOfPhi(const DegenerationFields& df);

/// Convenience full build (both phases).
DegenerationFields degeneration(const CubicODE& eq, const FundamentalFields& ff);

}  // namespace odeinv
