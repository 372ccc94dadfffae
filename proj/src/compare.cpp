#include "odeinv/compare.hpp"

#include <optional>
#include <stdexcept>

#include "odeinv/classify.hpp"
#include "odeinv/scalars.hpp"

namespace odeinv {

namespace {

struct Invs {
  RatFunc I1, I3;
};

Invs invariantsOf(const CubicODE& eq) {
  Verdict v = classify(eq);
  if (v.kase != Case::FirstIntermediate)
    throw std::domain_error("comparison requires the first intermediate case, got " +
                            caseName(v.kase));
  FundamentalFields ff = fundamental(eq);
  DegenerationFields df = degeneration(eq, ff);
  CurvatureData cd = curvature(df);
  ScalarInvariants si = baseInvariants(df, ff, cd);
  return {si.I1, si.I3};
}

/// The implicit relation rel(u, v) = 0 satisfied by (u, v) = (I1, I3),
/// obtained by eliminating y then x from the numerators of I1 - u and
/// I3 - v. Returns nullopt when the elimination degenerates (the
/// relation would involve the coordinates or collapse to a constant).
std::optional<Poly> relationOf(const Invs& in) {
  Poly f = (in.I1 - RatFunc::variable(VarU)).num();
  Poly g = (in.I3 - RatFunc::variable(VarV)).num();

  Poly h;
  if (f.usesVar(VarY) || g.usesVar(VarY)) {
    h = resultant(f, g, VarY);
    if (h.isZero()) {
      // common factor in y; strip it and retry
      Poly d = polyGcd(f, g);
      f = divExact(f, d);
      g = divExact(g, d);
      if (!(f.usesVar(VarY) || g.usesVar(VarY))) return std::nullopt;
      h = resultant(f, g, VarY);
    }
  } else if (f.usesVar(VarX) || g.usesVar(VarX)) {
    h = resultant(f, g, VarX);
  } else {
    return std::nullopt;
  }

  if (h.usesVar(VarX)) {
    // keep only the x-free factors: the content of h as a polynomial in x
    Poly content;
    for (int k = 0; k <= h.degree(VarX); ++k) {
      Poly c = h.coeffOf(VarX, k);
      if (c.isZero()) continue;
      content = content.isZero() ? c : polyGcd(content, c);
    }
    h = content;
  }
  if (h.usesVar(VarX) || h.usesVar(VarY) || h.isConstant() || h.isZero())
    return std::nullopt;
  return squarefreePart(h);
}

}  // namespace

CompareResult compareEquations(const CubicODE& a, const CubicODE& b) {
  Invs ia = invariantsOf(a), ib = invariantsOf(b);

  if (ia.I1.isConstant() != ib.I1.isConstant())
    return {false, "I1 is constant for exactly one equation"};

  if (ia.I1.isConstant()) {
    if (!(ia.I1 == ib.I1))
      return {false, "constant I1 differs: " + ia.I1.toString() + " vs " +
                         ib.I1.toString()};
    if (ia.I3.isConstant() != ib.I3.isConstant())
      return {false, "I3 is constant for exactly one equation"};
    if (ia.I3.isConstant()) {
      if (!(ia.I3 == ib.I3))
        return {false, "constant I3 differs: " + ia.I3.toString() + " vs " +
                           ib.I3.toString()};
      return {true, "constant invariants I1, I3 agree"};
    }
    return {true, "constant I1 agrees; I3 non-constant on both sides"};
  }

  std::optional<Poly> ra = relationOf(ia), rb = relationOf(ib);
  if (!ra || !rb)
    return {true, "elimination degenerated; no separating relation found"};
  if (*ra == *rb) return {true, "implicit I1-I3 relations coincide"};
  return {false, "implicit I1-I3 relations differ"};
}

}  // namespace odeinv
