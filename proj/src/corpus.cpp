#include "odeinv/corpus.hpp"

#include <stdexcept>

#include "odeinv/classify.hpp"

namespace odeinv {

namespace {

Rat smallCoeff(std::mt19937_64& rng, bool allowZero = true) {
  std::uniform_int_distribution<int> d(-3, 3);
  int c = d(rng);
  if (!allowZero)
    while (c == 0) c = d(rng);
  return Rat(c);
}

Poly randomUnivariate(std::mt19937_64& rng, int var, int degree, double density) {
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  Poly p;
  for (int k = 0; k <= degree; ++k) {
    if (keep(rng) > density) continue;
    Rat c = smallCoeff(rng, false);
    Mono m;
    m.e[var] = static_cast<uint32_t>(k);
    p.addTerm(m, c);
  }
  return p;
}

Poly randomBivariate(std::mt19937_64& rng, int degree, double density) {
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  Poly p;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      if (keep(rng) > density) continue;
      Rat c = smallCoeff(rng, false);
      Mono m;
      m.e[VarX] = static_cast<uint32_t>(i);
      m.e[VarY] = static_cast<uint32_t>(j);
      p.addTerm(m, c);
    }
  return p;
}

}  // namespace

CubicODE randomPOnly(std::mt19937_64& rng, int degree) {
  if (degree < 2) throw std::invalid_argument("P-only family needs degree >= 2");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Poly p = randomUnivariate(rng, VarY, degree, 0.5);
    if (p.diff(VarY).diff(VarY).isZero()) continue;
    return CubicODE{RatFunc(p), RatFunc(), RatFunc(), RatFunc()};
  }
  throw std::runtime_error("P-only sampling failed");
}

CubicODE randomMixed(std::mt19937_64& rng, int degree) {
  Poly p = randomBivariate(rng, degree, 0.4);
  Poly q;
  {
    Mono one;
    q.addTerm(one, smallCoeff(rng));
    Mono mx;
    mx.e[VarX] = 1;
    q.addTerm(mx, smallCoeff(rng));
    Mono my;
    my.e[VarY] = 1;
    q.addTerm(my, smallCoeff(rng));
  }
  return CubicODE{RatFunc(p), RatFunc(q), RatFunc(), RatFunc()};
}

CubicODE randomFull(std::mt19937_64& rng, int degree) {
  return CubicODE{RatFunc(randomBivariate(rng, degree, 0.3)),
                  RatFunc(randomBivariate(rng, degree, 0.3)),
                  RatFunc(randomBivariate(rng, degree, 0.3)),
                  RatFunc(randomBivariate(rng, degree, 0.3))};
}

PointMap randomAffineMap(std::mt19937_64& rng) {
  while (true) {
    Rat a = smallCoeff(rng), b = smallCoeff(rng);
    Rat c = smallCoeff(rng), d = smallCoeff(rng);
    Rat det = a * d - b * c;
    if (det == 0) continue;
    Rat tx = smallCoeff(rng), ty = smallCoeff(rng);
    RatFunc X = RatFunc::variable(VarX), Y = RatFunc::variable(VarY);
    PointMap m;
    m.fwdX = a * X + b * Y + RatFunc(tx);
    m.fwdY = c * X + d * Y + RatFunc(ty);
    // exact inverse of the affine map
    Rat ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
    RatFunc U = X - RatFunc(tx), V = Y - RatFunc(ty);
    m.invX = ia * U + ib * V;
    m.invY = ic * U + id * V;
    return m;
  }
}

PointMap randomShearMap(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 2);
  std::uniform_int_distribution<int> which(0, 1);
  bool shearY = which(rng) == 0;  // (x, y + p(x)) vs (x + p(y), y)
  RatFunc p(randomUnivariate(rng, shearY ? VarX : VarY, deg(rng), 0.7));
  RatFunc X = RatFunc::variable(VarX), Y = RatFunc::variable(VarY);
  PointMap m;
  if (shearY) {
    m.fwdX = X;
    m.fwdY = Y + p;
    m.invX = X;
    m.invY = Y - p;
  } else {
    m.fwdX = X + p;
    m.fwdY = Y;
    m.invX = X - p;
    m.invY = Y;
  }
  return m;
}

PointMap randomMap(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0:
      return randomAffineMap(rng);
    case 1:
      return randomShearMap(rng);
    default:
      return composeMaps(randomShearMap(rng), randomAffineMap(rng));
  }
}

std::vector<CubicODE> pOnlyCorpus(int count, int degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<CubicODE> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(randomPOnly(rng, degree));
  return out;
}

std::vector<CubicODE> intermediateCorpus(int count, int degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<CubicODE> out;
  int budget = 200 * count + 200;
  while (static_cast<int>(out.size()) < count && budget-- > 0) {
    CubicODE cand;
    if (out.size() % 2 == 0) {
      cand = randomMixed(rng, degree);
    } else {
      // a disguised P-only draw keeps the Omega = 0 subfamily represented
      cand = pushforward(randomPOnly(rng, std::max(2, degree)), randomShearMap(rng));
    }
    try {
      Verdict v = classify(cand);
      if (v.kase != Case::FirstIntermediate) continue;
    } catch (const std::exception&) {
      continue;
    }
    out.push_back(cand);
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("intermediate rejection sampling exhausted its budget");
  return out;
}

}  // namespace odeinv
