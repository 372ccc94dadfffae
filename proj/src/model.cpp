#include "odeinv/model.hpp"

namespace odeinv {

PointMap PointMap::identity() {
  RatFunc x = RatFunc::variable(VarX), y = RatFunc::variable(VarY);
  return PointMap{x, y, x, y};
}

void validateMap(const PointMap& map) {
  RatFunc cx = map.invX.compose(map.fwdX, map.fwdY);
  RatFunc cy = map.invY.compose(map.fwdX, map.fwdY);
  if (!(cx == RatFunc::variable(VarX) && cy == RatFunc::variable(VarY)))
    throw std::domain_error("point map: inverse does not undo forward");
  RatFunc detT = map.fwdX.diff(VarX) * map.fwdY.diff(VarY) -
                 map.fwdX.diff(VarY) * map.fwdY.diff(VarX);
  if (detT.isZero()) throw std::domain_error("point map: det T is identically zero");
}

Jacobians jacobians(const PointMap& map) {
  Jacobians j;
  j.T[0][0] = map.fwdX.diff(VarX);
  j.T[0][1] = map.fwdX.diff(VarY);
  j.T[1][0] = map.fwdY.diff(VarX);
  j.T[1][1] = map.fwdY.diff(VarY);
  j.detT = j.T[0][0] * j.T[1][1] - j.T[0][1] * j.T[1][0];
  if (j.detT.isZero()) throw std::domain_error("point map: det T is identically zero");

  // inverse Jacobian as a function of the original coordinates
  std::array<std::array<RatFunc, 2>, 2> Sraw;
  Sraw[0][0] = map.invX.diff(VarX);
  Sraw[0][1] = map.invX.diff(VarY);
  Sraw[1][0] = map.invY.diff(VarX);
  Sraw[1][1] = map.invY.diff(VarY);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      j.S[i][k] = Sraw[i][k].compose(map.fwdX, map.fwdY);

  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      RatFunc e = j.S[i][0] * j.T[0][k] + j.S[i][1] * j.T[1][k];
      RatFunc expect = (i == k) ? RatFunc(Rat(1)) : RatFunc();
      if (!(e == expect)) throw std::domain_error("point map: S*T is not the identity");
    }
  return j;
}

namespace {

// dense polynomial in the slope p with RatFunc coefficients
using PPoly = std::vector<RatFunc>;

PPoly pAdd(const PPoly& a, const PPoly& b) {
  PPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PPoly pMul(const PPoly& a, const PPoly& b) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RatFunc pCoeff(const PPoly& a, size_t k) { return k < a.size() ? a[k] : RatFunc(); }

// Solve a dense linear system over the rational-function field.
std::vector<RatFunc> solveLinear(std::vector<std::vector<RatFunc>> m,
                                 std::vector<RatFunc> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].isZero()) ++piv;
    if (piv == n) throw std::domain_error("pushforward: singular coefficient system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    RatFunc inv = RatFunc(Rat(1)) / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].isZero()) continue;
      RatFunc f = m[i][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

CubicODE pushforward(const CubicODE& eq, const PointMap& map) {
  validateMap(map);
  RatFunc D0 = map.fwdX.diff(VarX), D1 = map.fwdX.diff(VarY);
  RatFunc N0 = map.fwdY.diff(VarX), N1 = map.fwdY.diff(VarY);

  // slope transform p~ = N(p)/D(p), E(p) = rhs of the equation
  PPoly N{N0, N1}, D{D0, D1};
  PPoly E{eq.P, Rat(3) * eq.Q, Rat(3) * eq.R, eq.S};

  // total x-derivatives of N and D along solutions, with y'' = E(p):
  // dN = N0x + (N0y + N1x) p + N1y p^2 + E * N1, same for D
  PPoly dN = PPoly{N0.diff(VarX), N0.diff(VarY) + N1.diff(VarX), N1.diff(VarY)};
  dN = pAdd(dN, pMul(E, PPoly{N1}));
  PPoly dD = PPoly{D0.diff(VarX), D0.diff(VarY) + D1.diff(VarX), D1.diff(VarY)};
  dD = pAdd(dD, pMul(E, PPoly{D1}));

  // numerator of y~'' over D^3
  PPoly U = pAdd(pMul(dN, D), pMul(PPoly{RatFunc(Rat(-1))}, pMul(N, dD)));
  if (!pCoeff(U, 4).isZero())
    throw std::logic_error("pushforward: quartic slope term did not cancel");

  // match against P~ D^3 + 3 Q~ N D^2 + 3 R~ N^2 D + S~ N^3
  PPoly cols[4] = {pMul(D, pMul(D, D)), pMul(PPoly{RatFunc(Rat(3))}, pMul(N, pMul(D, D))),
                   pMul(PPoly{RatFunc(Rat(3))}, pMul(N, pMul(N, D))), pMul(N, pMul(N, N))};
  std::vector<std::vector<RatFunc>> m(4, std::vector<RatFunc>(4));
  std::vector<RatFunc> rhs(4);
  for (size_t row = 0; row < 4; ++row) {
    for (size_t c = 0; c < 4; ++c) m[row][c] = pCoeff(cols[c], row);
    rhs[row] = pCoeff(U, row);
  }
  std::vector<RatFunc> sol = solveLinear(std::move(m), std::move(rhs));

  CubicODE out;
  out.P = sol[0].compose(map.invX, map.invY);
  out.Q = sol[1].compose(map.invX, map.invY);
  out.R = sol[2].compose(map.invX, map.invY);
  out.S = sol[3].compose(map.invX, map.invY);
  return out;
}

PointMap composeMaps(const PointMap& first, const PointMap& second) {
  PointMap r;
  r.fwdX = second.fwdX.compose(first.fwdX, first.fwdY);
  r.fwdY = second.fwdY.compose(first.fwdX, first.fwdY);
  r.invX = first.invX.compose(second.invX, second.invY);
  r.invY = first.invY.compose(second.invX, second.invY);
  return r;
}

PseudoField PseudoField::scalar(const RatFunc& f, int weight) {
  return PseudoField{0, 0, weight, {f}};
}

PseudoField PseudoField::covector(const RatFunc& c1, const RatFunc& c2, int weight) {
  return PseudoField{0, 1, weight, {c1, c2}};
}

PseudoField PseudoField::vector(const RatFunc& c1, const RatFunc& c2, int weight) {
  return PseudoField{1, 0, weight, {c1, c2}};
}

RatFunc& PseudoField::at(const std::vector<int>& idx) {
  size_t flat = 0;
  for (int i : idx) flat = flat * 2 + static_cast<size_t>(i);
  return comp.at(flat);
}

const RatFunc& PseudoField::at(const std::vector<int>& idx) const {
  return const_cast<PseudoField*>(this)->at(idx);
}

PseudoField skewLower() {
  return PseudoField{0, 2, -1, {RatFunc(), RatFunc(Rat(1)), RatFunc(Rat(-1)), RatFunc()}};
}

PseudoField skewUpper() {
  return PseudoField{2, 0, 1, {RatFunc(), RatFunc(Rat(1)), RatFunc(Rat(-1)), RatFunc()}};
}

PseudoField transformPseudoField(const PseudoField& field, const PointMap& map) {
  const int r = field.upper, s = field.lower;
  if (field.comp.size() != field.componentCount())
    throw std::domain_error("pseudofield: component count does not match valence");
  Jacobians j = jacobians(map);

  std::vector<RatFunc> composed(field.comp.size());
  for (size_t i = 0; i < field.comp.size(); ++i)
    composed[i] = field.comp[i].compose(map.fwdX, map.fwdY);

  RatFunc detPow = j.detT.pow(field.weight);
  const size_t n = field.componentCount();
  PseudoField out{r, s, field.weight, std::vector<RatFunc>(n)};
  for (size_t target = 0; target < n; ++target) {
    RatFunc acc;
    for (size_t src = 0; src < n; ++src) {
      RatFunc f = composed[src];
      if (f.isZero()) continue;
      // decode indices, first index in the highest bits
      for (int a = 0; a < r; ++a) {
        int i = static_cast<int>(target >> (r + s - 1 - a)) & 1;
        int p = static_cast<int>(src >> (r + s - 1 - a)) & 1;
        f *= j.S[i][p];
      }
      for (int b = 0; b < s; ++b) {
        int jj = static_cast<int>(target >> (s - 1 - b)) & 1;
        int q = static_cast<int>(src >> (s - 1 - b)) & 1;
        f *= j.T[q][jj];
      }
      acc += f;
    }
    out.comp[target] = detPow * acc;
  }
  return out;
}

}  // namespace odeinv
