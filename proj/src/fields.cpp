#include "odeinv/fields.hpp"

namespace odeinv {

namespace {

RatFunc d10(const RatFunc& f) { return f.diff(VarX); }
RatFunc d01(const RatFunc& f) { return f.diff(VarY); }

}  // namespace

FundamentalFields fundamental(const CubicODE& eq) {
  const RatFunc &P = eq.P, &Q = eq.Q, &R = eq.R, &S = eq.S;
  FundamentalFields ff;
  ff.A = P.diff(VarY).diff(VarY) - Rat(2) * Q.diff(VarX).diff(VarY) +
         R.diff(VarX).diff(VarX) + Rat(2) * P * S.diff(VarX) + S * P.diff(VarX) -
         Rat(3) * P * R.diff(VarY) - Rat(3) * R * P.diff(VarY) -
         Rat(3) * Q * R.diff(VarX) + Rat(6) * Q * Q.diff(VarY);
  ff.B = S.diff(VarX).diff(VarX) - Rat(2) * R.diff(VarX).diff(VarY) +
         Q.diff(VarY).diff(VarY) - Rat(2) * S * P.diff(VarY) - P * S.diff(VarY) +
         Rat(3) * S * Q.diff(VarX) + Rat(3) * Q * S.diff(VarX) +
         Rat(3) * R * Q.diff(VarY) - Rat(6) * R * R.diff(VarX);
  const RatFunc &A = ff.A, &B = ff.B;
  ff.G = -B * B.diff(VarX) - Rat(3) * A * B.diff(VarY) + Rat(4) * B * A.diff(VarY) +
         Rat(3) * S * A * A - Rat(6) * R * B * A + Rat(3) * Q * B * B;
  ff.H = -A * A.diff(VarY) - Rat(3) * B * A.diff(VarX) + Rat(4) * A * B.diff(VarX) -
         Rat(3) * P * B * B + Rat(6) * Q * A * B - Rat(3) * R * A * A;
  ff.F5 = (A * ff.G + B * ff.H) / Rat(3);

  // cross-check against the explicit radicand form
  RatFunc radicand = A * B * A.diff(VarY) + A * B * B.diff(VarX) -
                     A * A * B.diff(VarY) - B * B * A.diff(VarX) - P * B * B * B +
                     Rat(3) * Q * A * B * B - Rat(3) * R * A * A * B + S * A * A * A;
  if (!(ff.F5 == radicand))
    throw std::logic_error("F^5: contracted and explicit forms disagree");
  return ff;
}

DegenerationFields degenerationPhi(const CubicODE& eq, const FundamentalFields& ff) {
  if (!ff.F5.isZero())
    throw std::domain_error("degeneration fields require F^5 == 0");
  const RatFunc &A = ff.A, &B = ff.B;
  if (A.isZero() && B.isZero())
    throw std::domain_error("degeneration fields require a non-zero alpha covector");
  const RatFunc &P = eq.P, &Q = eq.Q, &R = eq.R, &S = eq.S;

  DegenerationFields df;
  df.eq = eq;
  df.A = A;
  df.B = B;
  df.viaB = !B.isZero();

  auto buildB = [&](RatFunc& N, RatFunc& M, RatFunc& p1, RatFunc& p2) {
    RatFunc K = A * S - d01(B);
    N = ff.G / (Rat(3) * B);
    M = Rat(-12, 5) * A * N * K / B - A * d01(N) + Rat(24, 5) * A * N * R -
        Rat(6, 5) * N * d01(A) - Rat(6, 5) * N * d10(B) + B * d10(N) -
        Rat(12, 5) * B * N * Q;
    p1 = Rat(-3, 5) * A * K / (B * B) -
         Rat(3, 5) * (d01(A) + d10(B) - Rat(3) * A * R) / B - Rat(6, 5) * Q;
    p2 = Rat(3, 5) * K / B - Rat(3, 5) * R;
  };
  auto buildA = [&](RatFunc& N, RatFunc& M, RatFunc& p1, RatFunc& p2) {
    RatFunc L = B * P + d10(A);
    N = -ff.H / (Rat(3) * A);
    M = Rat(-12, 5) * B * N * L / A + B * d10(N) + Rat(24, 5) * B * N * Q +
        Rat(6, 5) * N * d10(B) + Rat(6, 5) * N * d01(A) - A * d01(N) -
        Rat(12, 5) * A * N * R;
    p1 = Rat(-3, 5) * L / A + Rat(3, 5) * Q;
    p2 = Rat(3, 5) * B * L / (A * A) -
         Rat(3, 5) * (d10(B) + d01(A) + Rat(3) * B * Q) / A + Rat(6, 5) * R;
  };

  if (df.viaB)
    buildB(df.N, df.M, df.phi[0], df.phi[1]);
  else
    buildA(df.N, df.M, df.phi[0], df.phi[1]);

  if (!A.isZero() && !B.isZero()) {
    RatFunc N2, M2, p1, p2;
    buildA(N2, M2, p1, p2);
    if (!(N2 == df.N && M2 == df.M && p1 == df.phi[0] && p2 == df.phi[1]))
      throw std::logic_error("degeneration fields: branch formulas disagree");
  }

  // theta_kij: fully symmetric, built from the equation coefficients
  const RatFunc* coef[4] = {&P, &Q, &R, &S};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) df.thetaLow[k][i][j] = *coef[k + i + j];
  // raising with the skew matrix: theta^1 = theta_2.., theta^2 = -theta_1..
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      df.theta[0][i][j] = df.thetaLow[1][i][j];
      df.theta[1][i][j] = -df.thetaLow[0][i][j];
    }
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        df.Gamma[k][i][j] = df.theta[k][i][j];
        if (k == j) df.Gamma[k][i][j] -= df.phi[i] / Rat(3);
        if (k == i) df.Gamma[k][i][j] -= df.phi[j] / Rat(3);
      }
  return df;
}

RatFunc omegaOfPhi(const DegenerationFields& df) {
  return Rat(5, 3) * (df.phi[0].diff(VarY) - df.phi[1].diff(VarX));
}

void finishGamma(DegenerationFields& df, const CubicODE& eq,
                 const FundamentalFields& ff, const RatFunc& Omega) {
  const RatFunc &A = ff.A, &B = ff.B;
  const RatFunc &Q = eq.Q, &R = eq.R, &P = eq.P, &S = eq.S;
  const RatFunc& N = df.N;
  df.Omega = Omega;

  auto gammaB = [&](RatFunc& g1, RatFunc& g2) {
    RatFunc K = A * S - B.diff(VarY);
    g1 = Rat(6, 5) * A * N * K / (B * B) - Rat(18, 5) * N * A * R / B +
         Rat(6, 5) * N * (A.diff(VarY) + B.diff(VarX)) / B - N.diff(VarX) +
         Rat(12, 5) * N * Q - Rat(2) * Omega * A;
    g2 = Rat(-6, 5) * N * K / B - N.diff(VarY) + Rat(6, 5) * N * R -
         Rat(2) * Omega * B;
  };
  auto gammaA = [&](RatFunc& g1, RatFunc& g2) {
    RatFunc L = B * P + A.diff(VarX);
    g1 = Rat(6, 5) * N * L / A - N.diff(VarX) - Rat(6, 5) * N * Q -
         Rat(2) * Omega * A;
    g2 = Rat(-6, 5) * B * N * L / (A * A) + Rat(18, 5) * N * B * Q / A +
         Rat(6, 5) * N * (B.diff(VarX) + A.diff(VarY)) / A - N.diff(VarY) -
         Rat(12, 5) * N * R - Rat(2) * Omega * B;
  };

  RatFunc g1, g2;
  if (df.viaB)
    gammaB(g1, g2);
  else
    gammaA(g1, g2);
  if (!A.isZero() && !B.isZero()) {
    RatFunc h1, h2;
    gammaA(h1, h2);
    if (!(h1 == g1 && h2 == g2))
      throw std::logic_error("gamma: branch formulas disagree");
  }
  df.gammaCov = PseudoField::covector(g1, g2, 2);
  df.gammaVec = PseudoField::vector(g2, -g1, 3);
  df.gammaReady = true;

  if (!(df.M == A * df.gammaVec.at({0}) + B * df.gammaVec.at({1})))
    throw std::logic_error("gamma: M != A C + B D");
}

DegenerationFields degeneration(const CubicODE& eq, const FundamentalFields& ff) {
  DegenerationFields df = degenerationPhi(eq, ff);
  finishGamma(df, eq, ff, omegaOfPhi(df));
  return df;
}

}  // namespace odeinv
