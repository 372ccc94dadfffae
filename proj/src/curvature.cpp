#include "odeinv/curvature.hpp"

namespace odeinv {

namespace {

// Explicit branch formulas for Omega, stated directly in the equation
// coefficients and A, B. Only one branch is defined when the other
// component vanishes identically.
RatFunc omegaExplicitB(const DegenerationFields& df) {
  const RatFunc &A = df.A, &B = df.B;
  const RatFunc &Q = df.eq.Q, &R = df.eq.R, &S = df.eq.S;
  RatFunc A01 = A.diff(VarY), A10 = A.diff(VarX), B01 = B.diff(VarY),
          B10 = B.diff(VarX);
  return Rat(2) * A * B01 * (A * S - B01) / (B * B * B) +
         (Rat(2) * A01 - Rat(3) * A * R) * B01 / (B * B) +
         (B10 - Rat(2) * A01) * A * S / (B * B) +
         (A * B01.diff(VarY) - A * A * S.diff(VarY)) / (B * B) -
         A01.diff(VarY) / B +
         (Rat(3) * A01 * R + Rat(3) * A * R.diff(VarY) - A10 * S -
          A * S.diff(VarX)) / B +
         R.diff(VarX) - Rat(2) * Q.diff(VarY);
}

RatFunc omegaExplicitA(const DegenerationFields& df) {
  const RatFunc &A = df.A, &B = df.B;
  const RatFunc &P = df.eq.P, &Q = df.eq.Q, &R = df.eq.R;
  RatFunc A10 = A.diff(VarX), A01 = A.diff(VarY), B10 = B.diff(VarX),
          B01 = B.diff(VarY);
  return Rat(2) * B * A10 * (B * P + A10) / (A * A * A) -
         (Rat(2) * B10 + Rat(3) * B * Q) * A10 / (A * A) +
         (A01 - Rat(2) * B10) * B * P / (A * A) -
         (B * A10.diff(VarX) + B * B * P.diff(VarX)) / (A * A) +
         B10.diff(VarX) / A +
         (Rat(3) * B10 * Q + Rat(3) * B * Q.diff(VarX) - B01 * P -
          B * P.diff(VarY)) / A +
         Q.diff(VarY) - Rat(2) * R.diff(VarX);
}

}  // namespace

std::pair<std::array<std::array<RatFunc, 2>, 2>, RatFunc> omegaFromPhi(
    const DegenerationFields& df) {
  std::array<std::array<RatFunc, 2>, 2> w;
  const Var vars[2] = {VarX, VarY};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      w[i][j] = df.phi[i].diff(vars[j]) - df.phi[j].diff(vars[i]);
  RatFunc Omega = Rat(5, 3) * w[0][1];

  if (!df.B.isZero()) {
    if (!(Omega == omegaExplicitB(df)))
      throw std::logic_error("Omega: phi-based and explicit forms disagree");
  } else if (!df.A.isZero()) {
    if (!(Omega == omegaExplicitA(df)))
      throw std::logic_error("Omega: phi-based and explicit forms disagree");
  }
  return {w, Omega};
}

CurvatureData curvature(const DegenerationFields& df) {
  CurvatureData cd;
  const Var vars[2] = {VarX, VarY};
  const auto& G = df.Gamma;
  for (int k = 0; k < 2; ++k)
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          RatFunc t = G[k][j][r].diff(vars[i]) - G[k][i][r].diff(vars[j]);
          for (int q = 0; q < 2; ++q)
            t += G[k][i][q] * G[q][j][r] - G[k][j][q] * G[q][i][r];
          cd.Rtensor[k][r][i][j] = t;
        }

  // contraction over the first pair, compared with the phi-based form
  auto [wPhi, OmegaPhi] = omegaFromPhi(df);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cd.omega[i][j] = cd.Rtensor[0][0][i][j] + cd.Rtensor[1][1][i][j];
      if (!(cd.omega[i][j] == wPhi[i][j]))
        throw std::logic_error("omega: trace and phi-based forms disagree");
    }
  cd.Omega = OmegaPhi;
  if (df.gammaReady && !(df.Omega == cd.Omega))
    throw std::logic_error("Omega disagrees with the value used for gamma");

  for (int k = 0; k < 2; ++k)
    for (int q = 0; q < 2; ++q) cd.Rop[k][q] = cd.Rtensor[k][q][0][1];
  cd.trR = cd.Rop[0][0] + cd.Rop[1][1];
  if (!(cd.trR == Rat(3, 5) * cd.Omega))
    throw std::logic_error("tr R != (3/5) Omega");
  cd.detR = cd.Rop[0][0] * cd.Rop[1][1] - cd.Rop[0][1] * cd.Rop[1][0];
  cd.Disc = cd.trR * cd.trR - Rat(4) * cd.detR;
  return cd;
}

}  // namespace odeinv
