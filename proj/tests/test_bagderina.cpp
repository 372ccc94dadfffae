#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "odeinv/bagderina.hpp"
#include "odeinv/parser.hpp"

using namespace odeinv;

namespace {

RatFunc rf(const std::string& s) { return parseExpr(s); }

CubicODE ode(const std::string& P, const std::string& Q = "0",
             const std::string& R = "0", const std::string& S = "0") {
  return CubicODE{rf(P), rf(Q), rf(R), rf(S)};
}

struct Pipeline {
  CubicODE eq;
  FundamentalFields ff;
  DegenerationFields df;
  CurvatureData cd;
};

Pipeline build(const CubicODE& eq) {
  Pipeline p;
  p.eq = eq;
  p.ff = fundamental(eq);
  p.df = degeneration(eq, p.ff);
  p.cd = curvature(p.df);
  return p;
}

// rational value of an even-exponent radical square / any fourth power
RatFunc radSquare(const RadScalar& s, const RatFunc& M) {
  REQUIRE(s.eM % 2 == 0);
  REQUIRE(s.e2 % 2 == 0);
  REQUIRE(s.e3 % 2 == 0);
  REQUIRE(s.e5 % 2 == 0);
  RatFunc r = s.coef * s.coef;
  for (int i = 0; i < s.eM / 2; ++i) r *= M;
  Rat c = 1;
  for (int i = 0; i < s.e2 / 2; ++i) c *= 2;
  for (int i = 0; i < s.e3 / 2; ++i) c *= 3;
  for (int i = 0; i < s.e5 / 2; ++i) c *= 5;
  return r * c;
}

RatFunc radFourth(const RadScalar& s, const RatFunc& M) {
  RatFunc r = s.coef.pow(4);
  for (int i = 0; i < s.eM; ++i) r *= M;
  Rat c = 1;
  for (int i = 0; i < s.e2; ++i) c *= 2;
  for (int i = 0; i < s.e3; ++i) c *= 3;
  for (int i = 0; i < s.e5; ++i) c *= 5;
  return r * c;
}

}  // namespace

TEST_CASE("chain fixture values on y'' = y^4") {
  Pipeline p = build(ode("y^4"));
  BgdData b = bgdChain(p.eq, p.ff, p.df, p.cd);
  CHECK(b.beta1 == rf("12*y^2"));
  CHECK(b.beta2.isZero());
  CHECK(b.alpha0 == rf("-4*y^3"));
  CHECK(b.g20 == rf("24*y"));
  CHECK(b.g10.isZero());
  CHECK(b.d10 == rf("264*y^5"));
  CHECK(b.j2.isZero());
  CHECK(b.j3 == rf("11/(120*y)"));
  CHECK(b.j1 == rf("336*y^2"));
  CHECK(b.j5 == rf("308*y"));
  CHECK(b.j0.isZero());
  CHECK(b.J0.isZero());
  CHECK(b.I1sq == rf("12/7"));
  CHECK(b.I2sq * b.j1 == b.j5 * b.j5);
}

TEST_CASE("chain preconditions") {
  // A == 0 but B != 0: the slope-inverted image of y'' = y^4
  CubicODE eq = ode("0", "0", "0", "-x^4");
  Pipeline p = build(eq);
  REQUIRE(p.ff.A.isZero());
  REQUIRE_FALSE(p.ff.B.isZero());
  REQUIRE_FALSE(p.df.M.isZero());
  CHECK_THROWS_AS(bgdChain(p.eq, p.ff, p.df, p.cd), std::domain_error);

  Pipeline q = build(ode("y^2"));  // M == 0
  CHECK_THROWS_AS(bgdChain(q.eq, q.ff, q.df, q.cd), std::domain_error);
}

TEST_CASE("j5 identities across a corpus") {
  PointMap mix{rf("x"), rf("y + x^2"), rf("x"), rf("y - x^2")};
  CubicODE eqs[] = {ode("y^4"), ode("y^5"), ode("y^3 + x*y"),
                    pushforward(ode("y^4"), mix), ode("y^2", "y")};
  for (const CubicODE& eq : eqs) {
    Pipeline p = build(eq);
    if (p.ff.A.isZero()) continue;
    BgdData b = bgdChain(p.eq, p.ff, p.df, p.cd);  // asserts 6.1 and 6.2
    CHECK(b.j5 == Rat(-125) * p.cd.detR + Rat(45, 4) * p.cd.Omega * p.cd.Omega);
    // umbilical exactly when j5 vanishes
    CHECK(b.j5.isZero() == p.cd.Disc.isZero());
    if (p.cd.Omega.isZero()) {
      // the reduced (8.26) form: j0 drops out
      CHECK(b.j5 == Rat(5) * (Rat(2) * b.j1 * b.j3 + b.j2 * b.j2));
      CHECK(b.j5 == Rat(-125) * p.cd.detR);
    }
  }
}

TEST_CASE("operator correspondence, powered") {
  PointMap mix{rf("x"), rf("y + x^2"), rf("x"), rf("y - x^2")};
  CubicODE eqs[] = {ode("y^4"), ode("y^5"), pushforward(ode("y^4"), mix)};
  for (const CubicODE& eq : eqs) {
    Pipeline p = build(eq);
    BgdCalc c(p.ff, p.df);
    ScalarInvariants si = baseInvariants(p.df, p.ff, p.cd);
    for (const RatFunc& s : {si.I1, si.I3}) {
      RadScalar rs{s, 0, 0, 0, 0};
      RatFunc da = directional(PseudoField::scalar(s, 0), Dir::Alpha, p.df, p.ff).comp[0];
      RatFunc dg = directional(PseudoField::scalar(s, 0), Dir::Gamma, p.df, p.ff).comp[0];
      RadScalar d1 = c.D1(rs), d2 = c.D2(rs);
      CHECK(radSquare(d1, p.df.M) * Rat(5, 2) * p.df.M == da * da);
      CHECK(radFourth(d2, p.df.M) * Rat(2, 5) * p.df.M.pow(3) / Rat(81) == dg.pow(4));
    }
  }
}

TEST_CASE("numeric record on y'' = y^4 at (0, 1)") {
  BgdNumericRecord r = bgdOperatorsNumeric(ode("y^4"), Rat(0), Rat(1), 256);
  mpf_class i1(Rat(12, 7), 256), i2sq(Rat(77 * 77, 21), 256);
  mpf_class tol("1e-60", 256);
  CHECK(abs(r.I1B - sqrt(i1)) < tol);
  CHECK(abs(r.I2B - sqrt(i2sq)) < tol);
  CHECK(abs(r.I11) < tol);
  CHECK(abs(r.I12) < tol);
  CHECK(abs(r.I21) < tol);
  CHECK(abs(r.I22) < tol);
  CHECK(abs(r.I212) < tol);
  CHECK(abs(r.I121) < tol);
}

TEST_CASE("numeric record preconditions") {
  CHECK_THROWS_AS(bgdOperatorsNumeric(ode("y^2", "y"), Rat(0), Rat(1), 128),
                  std::domain_error);
}

TEST_CASE("bridge verification") {
  for (const CubicODE& eq : {ode("y^4"), ode("y^5"), ode("y^3 + x*y")}) {
    auto pts = findSamplePoints(eq, 5, 7);
    auto checks = verifyBridge(eq, pts, 256);
    CHECK(checks.size() >= 5 + 2 * pts.size());
    for (const auto& ch : checks) {
      INFO(ch.name, " at ", ch.point, " residual ", ch.residual);
      CHECK(ch.pass);
    }
  }
  CHECK_THROWS_AS(verifyBridge(ode("y^2", "y"), {}, 128), std::domain_error);
}
