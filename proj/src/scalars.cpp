#include "odeinv/scalars.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace odeinv {

PseudoField covariantDerivative(const PseudoField& field, const DegenerationFields& df) {
  const int r = field.upper, s = field.lower;
  const Var vars[2] = {VarX, VarY};
  PseudoField out{r, s + 1, field.weight,
                  std::vector<RatFunc>(size_t{1} << (r + s + 1))};

  // decode the source component for given upper/lower index lists
  auto src = [&](const std::vector<int>& up, const std::vector<int>& low) {
    std::vector<int> idx = up;
    idx.insert(idx.end(), low.begin(), low.end());
    return field.at(idx);
  };

  std::vector<int> up(r), low(s);
  for (size_t flat = 0; flat < out.comp.size(); ++flat) {
    // output index layout: uppers, then k, then the original lowers
    for (int a = 0; a < r; ++a) up[a] = static_cast<int>(flat >> (s + 1 + r - 1 - a)) & 1;
    int k = static_cast<int>(flat >> s) & 1;
    for (int b = 0; b < s; ++b) low[b] = static_cast<int>(flat >> (s - 1 - b)) & 1;

    RatFunc t = src(up, low).diff(vars[k]);
    for (int a = 0; a < r; ++a) {
      std::vector<int> u2 = up;
      for (int v = 0; v < 2; ++v) {
        u2[a] = v;
        t += df.Gamma[up[a]][k][v] * src(u2, low);
      }
    }
    for (int b = 0; b < s; ++b) {
      std::vector<int> l2 = low;
      for (int w = 0; w < 2; ++w) {
        l2[b] = w;
        t -= df.Gamma[w][k][low[b]] * src(up, l2);
      }
    }
    t += Rat(field.weight) * df.phi[k] * src(up, low);
    out.comp[flat] = t;
  }
  return out;
}

PseudoField directional(const PseudoField& field, Dir along,
                        const DegenerationFields& df, const FundamentalFields& ff) {
  PseudoField nabla = covariantDerivative(field, df);
  RatFunc dir[2];
  int dirWeight;
  if (along == Dir::Alpha) {
    dir[0] = ff.B;
    dir[1] = -ff.A;
    dirWeight = 2;
  } else {
    if (!df.gammaReady) throw std::logic_error("gamma phase not finished");
    dir[0] = df.gammaVec.at({0});
    dir[1] = df.gammaVec.at({1});
    dirWeight = 3;
  }

  const int r = field.upper, s = field.lower;
  PseudoField out{r, s, field.weight + dirWeight,
                  std::vector<RatFunc>(field.componentCount())};
  // contract the derivative index (first lower index of nabla)
  for (size_t flat = 0; flat < out.comp.size(); ++flat) {
    size_t upBits = flat >> s;
    size_t lowBits = flat & ((size_t{1} << s) - 1);
    RatFunc acc;
    for (size_t k = 0; k < 2; ++k)
      acc += dir[k] * nabla.comp[(upBits << (s + 1)) | (k << s) | lowBits];
    out.comp[flat] = acc;
  }
  return out;
}

namespace {

// coefficients of v in the basis {alpha_vec, gamma_vec}; the system
// determinant is M, non-zero in the first intermediate case
std::pair<RatFunc, RatFunc> inBasis(const PseudoField& v,
                                    const DegenerationFields& df,
                                    const FundamentalFields& ff) {
  RatFunc a1 = ff.B, a2 = -ff.A;
  RatFunc g1 = df.gammaVec.at({0}), g2 = df.gammaVec.at({1});
  RatFunc det = a1 * g2 - a2 * g1;
  if (det.isZero()) throw std::domain_error("alpha and gamma are parallel (M == 0)");
  RatFunc v1 = v.at({0}), v2 = v.at({1});
  return {(v1 * g2 - v2 * g1) / det, (a1 * v2 - a2 * v1) / det};
}

}  // namespace

Expansion expansionCoefficients(const DegenerationFields& df,
                                const FundamentalFields& ff) {
  if (df.M.isZero())
    throw std::domain_error("expansion requires the first intermediate case");
  PseudoField fields[2] = {ff.alphaVec(), df.gammaVec};
  Expansion e;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      PseudoField d =
          directional(fields[b], a == 0 ? Dir::Alpha : Dir::Gamma, df, ff);
      auto [c1, c2] = inBasis(d, df, ff);
      e.coef[0][a][b] = c1;
      e.coef[1][a][b] = c2;
    }
  return e;
}

const RatFunc& ScalarInvariants::at(int k) const {
  switch (k) {
    case 1: return I1;
    case 2: return I2;
    case 3: return I3;
    default: return higher.at(k);
  }
}

ScalarInvariants baseInvariants(const DegenerationFields& df,
                                const FundamentalFields& ff,
                                const CurvatureData& cd, int depth) {
  if (df.N.isZero())
    throw std::domain_error("scalar invariants are undefined when N == 0");
  ScalarInvariants si;
  si.I1 = df.M / (df.N * df.N);
  si.I2 = cd.Omega * cd.Omega / df.N;
  si.expansion = expansionCoefficients(df, ff);
  si.I3 = si.expansion.coef[0][1][1] * df.N * df.N / (df.M * df.M);

  auto scalarOf = [&](const RatFunc& f) { return PseudoField::scalar(f, 0); };
  RatFunc N3 = df.N.pow(3);
  std::vector<int> level = {1, 2, 3};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> next;
    for (int k : level) {
      const RatFunc& ik = si.at(k);
      if (!si.higher.count(k + 3)) {
        si.higher[k + 3] =
            directional(scalarOf(ik), Dir::Alpha, df, ff).comp[0] / df.N;
        next.push_back(k + 3);
      }
      if (!si.higher.count(k + 6)) {
        RatFunc g = directional(scalarOf(ik), Dir::Gamma, df, ff).comp[0];
        si.higher[k + 6] = g * g / N3;
        next.push_back(k + 6);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return si;
}

}  // namespace odeinv
