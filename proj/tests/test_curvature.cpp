#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "odeinv/curvature.hpp"
#include "odeinv/parser.hpp"

using namespace odeinv;

namespace {

RatFunc rf(const std::string& s) { return parseExpr(s); }

CubicODE ode(const std::string& P, const std::string& Q = "0",
             const std::string& R = "0", const std::string& S = "0") {
  return CubicODE{rf(P), rf(Q), rf(R), rf(S)};
}

CurvatureData curvatureOf(const CubicODE& eq) {
  return curvature(degeneration(eq, fundamental(eq)));
}

}  // namespace

TEST_CASE("curvature of y'' = y^4") {
  CurvatureData cd = curvatureOf(ode("y^4"));
  CHECK(cd.Rop[0][1] == rf("14/(25*y^2)"));
  CHECK(cd.Rop[1][0] == rf("22/5*y^3"));
  CHECK(cd.Rop[0][0].isZero());
  CHECK(cd.Rop[1][1].isZero());
  CHECK(cd.trR.isZero());
  CHECK(cd.Omega.isZero());
  CHECK(cd.detR == rf("-308/125*y"));
  CHECK(cd.Disc == rf("1232/125*y"));
  // the two mean-curvature expressions for j5 coincide
  CHECK(Rat(-125) * cd.detR + Rat(45, 4) * cd.Omega * cd.Omega == rf("308*y"));
  CHECK(Rat(125, 4) * cd.Disc == rf("308*y"));
}

TEST_CASE("flat connection has zero curvature") {
  DegenerationFields df;  // all components identically zero
  CurvatureData cd = curvature(df);
  for (int k = 0; k < 2; ++k)
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(cd.Rtensor[k][r][i][j].isZero());
  CHECK(cd.Omega.isZero());
  CHECK(cd.detR.isZero());
  CHECK(cd.Disc.isZero());
}

TEST_CASE("structural identities on sample equations") {
  CubicODE eqs[] = {ode("y^4"), ode("y^3 + x*y"), ode("y^2", "y"),
                    ode("x*y^2 + y^5", "2*y + x")};
  for (const CubicODE& eq : eqs) {
    CurvatureData cd = curvatureOf(eq);  // internal checks: 5.2 == 5.3, 5.8
    // antisymmetry in the last index pair
    for (int k = 0; k < 2; ++k)
      for (int r = 0; r < 2; ++r)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            CHECK(cd.Rtensor[k][r][i][j] == -cd.Rtensor[k][r][j][i]);
    CHECK(cd.Disc == Rat(9, 25) * cd.Omega * cd.Omega - Rat(4) * cd.detR);
    // Cayley-Hamilton for the 2x2 operator
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RatFunc sq = cd.Rop[i][0] * cd.Rop[0][j] + cd.Rop[i][1] * cd.Rop[1][j];
        RatFunc expect = cd.trR * cd.Rop[i][j];
        if (i == j) expect -= cd.detR;
        CHECK(sq == expect);
      }
  }
}

TEST_CASE("equations with P only have Omega = 0") {
  for (const char* p : {"y^4", "y^3 + y^2", "x*y^2 + y^6", "y^2 + x"}) {
    CubicODE eq = ode(p);
    FundamentalFields ff = fundamental(eq);
    if (ff.A.isZero() && ff.B.isZero()) continue;
    CHECK(curvature(degeneration(eq, ff)).Omega.isZero());
  }
}

TEST_CASE("a family with non-zero Omega") {
  // P arbitrary, Q linear in y: F^5 = 0 with B = 0, but Omega != 0
  CubicODE eq = ode("y^2", "y");
  FundamentalFields ff = fundamental(eq);
  REQUIRE(ff.F5.isZero());
  REQUIRE(ff.B.isZero());
  REQUIRE_FALSE(ff.A.isZero());
  CurvatureData cd = curvature(degeneration(eq, ff));
  CHECK_FALSE(cd.Omega.isZero());
  CHECK(cd.trR == Rat(3, 5) * cd.Omega);
}

TEST_CASE("weight covariance of the curvature scalars") {
  CubicODE eq = ode("y^2", "y");
  CurvatureData cd = curvatureOf(eq);
  PointMap maps[] = {
      {rf("x"), rf("2*y"), rf("x"), rf("1/2*y")},
      {rf("x"), rf("y + x^3"), rf("x"), rf("y - x^3")},
      {rf("2*x + y + 1"), rf("x - y"), rf("1/3*x + 1/3*y - 1/3"),
       rf("1/3*x - 2/3*y - 1/3")},
  };
  for (const PointMap& m : maps) {
    CurvatureData cd2 = curvatureOf(pushforward(eq, m));
    auto pull = [&](const RatFunc& f, int w) {
      return transformPseudoField(PseudoField::scalar(f, w), m).comp[0];
    };
    CHECK(pull(cd2.Omega, 1) == cd.Omega);
    CHECK(pull(cd2.detR, 2) == cd.detR);
    CHECK(pull(cd2.Disc, 2) == cd.Disc);
  }
}
