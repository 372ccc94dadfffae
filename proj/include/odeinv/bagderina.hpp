#pragma once

#include <string>
#include <vector>

#include "odeinv/scalars.hpp"

namespace odeinv {

/// The full (7.17)-(7.20) chain plus the identification constants.
struct BgdData {
  RatFunc beta1, beta2;            // = A, B
  RatFunc j0, j1;                  // -3 Omega, (5/2) M
  RatFunc Gamma0, Gamma1;          // -H, G
  RatFunc J0;                      // -F^5
  RatFunc alpha0, alpha1, alpha2;
  RatFunc g10, g11, g20, g21;
  RatFunc d10, d20;
  RatFunc j2, j3;
  RatFunc j5;
  RatFunc I1sq;                    // (I1Bgd)^2 = 18 N^2 / (5 M)
  RatFunc I2sq;                    // (I2Bgd)^2 = j5^2 / j1
  RatFunc mu1p4;                   // mu1^4 = j1
};

BgdData bgdChain(const CubicODE& eq, const FundamentalFields& ff,
                 const DegenerationFields& df, const CurvatureData& cd);

/// A scalar of the form coef * (M^eM * 2^e2 * 3^e3 * 5^e5)^(1/4) with a
/// rational-function coefficient. Closed under the two invariant
/// differentiation operators, which is all the bridge checks need.
struct RadScalar {
  RatFunc coef;
  int eM = 0, e2 = 0, e3 = 0, e5 = 0;  // quarter-power exponents

  /// Fold exponent multiples of 4 into the coefficient (requires the
  /// degeneration data for M).
  void canonicalize(const RatFunc& M);
  bool isRational() const { return eM == 0 && e2 == 0 && e3 == 0 && e5 == 0; }
  RatFunc toRatFunc() const;  // throws unless isRational()
};

/// Context for the invariant differentiation operators D1, D2 and for
/// numeric evaluation.
class BgdCalc {
 public:
  BgdCalc(const FundamentalFields& ff, const DegenerationFields& df);

  RadScalar I1B() const;  // sqrt(18 N^2 / (5 M)), positive branch
  RadScalar I2B() const;  // j5 / sqrt(j1)

  RadScalar D1(const RadScalar& s) const;  // sqrt(2/(5M)) grad_alpha
  RadScalar D2(const RadScalar& s) const;  // -3 (5/(2M^3))^(1/4) grad_gamma

  /// High-precision value at a point; requires M > 0 there.
  mpf_class eval(const RadScalar& s, const Rat& x, const Rat& y,
                 int precisionBits) const;

  const DegenerationFields& df() const { return df_; }

 private:
  const FundamentalFields& ff_;
  const DegenerationFields& df_;
  RatFunc j5_;
};

/// The iterated Bagderina derivatives used by the bridge identities.
struct BgdNumericRecord {
  mpf_class I1B, I2B;
  mpf_class I11, I12, I21, I22, I212, I121;
};

BgdNumericRecord bgdOperatorsNumeric(const CubicODE& eq, const Rat& x, const Rat& y,
                                     int precisionBits);

struct BridgeCheck {
  std::string name;
  std::string mode;  // "exact" or "numeric"
  bool pass = false;
  std::string residual;
  std::string point;
};

/// Symbolic identifications plus the numeric (8.23)/(8.24) checks at the
/// given points. Requires the zero-mean first intermediate class.
std::vector<BridgeCheck> verifyBridge(const CubicODE& eq,
                                      const std::vector<std::pair<Rat, Rat>>& points,
                                      int precisionBits);

/// Rejection-sampled points in (0,1) x (1,2) avoiding poles with
/// M > 0, N > 0 at each point. Throws when none can be found.
std::vector<std::pair<Rat, Rat>> findSamplePoints(const CubicODE& eq, int count,
                                                  unsigned seed);

}  // namespace odeinv
