#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "odeinv/classify.hpp"
#include "odeinv/parser.hpp"

using namespace odeinv;

namespace {

RatFunc rf(const std::string& s) { return parseExpr(s); }

CubicODE ode(const std::string& P, const std::string& Q = "0",
             const std::string& R = "0", const std::string& S = "0") {
  return CubicODE{rf(P), rf(Q), rf(R), rf(S)};
}

PointMap randomAffine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  while (true) {
    Rat a(c(rng)), b(c(rng)), d(c(rng)), e(c(rng)), f(c(rng)), g(c(rng));
    Rat det = a * e - b * d;
    if (det == 0) continue;
    RatFunc x = RatFunc::variable(VarX), y = RatFunc::variable(VarY);
    PointMap m;
    m.fwdX = RatFunc(a) * x + RatFunc(b) * y + RatFunc(f);
    m.fwdY = RatFunc(d) * x + RatFunc(e) * y + RatFunc(g);
    m.invX = (RatFunc(e) * (x - RatFunc(f)) - RatFunc(b) * (y - RatFunc(g))) / RatFunc(det);
    m.invY = (RatFunc(a) * (y - RatFunc(g)) - RatFunc(d) * (x - RatFunc(f))) / RatFunc(det);
    return m;
  }
}

PointMap randomShear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2), deg(1, 3), which(0, 1);
  Poly t;
  Var in = which(rng) ? VarX : VarY;
  for (int d = 0; d <= deg(rng); ++d) {
    Mono m;
    m.e[in] = static_cast<uint32_t>(d);
    t.addTerm(m, Rat(c(rng)));
  }
  RatFunc shift(t, Poly(Rat(1)));
  RatFunc x = RatFunc::variable(VarX), y = RatFunc::variable(VarY);
  PointMap m;
  if (in == VarX) {  // y += t(x)
    m.fwdX = x; m.fwdY = y + shift; m.invX = x; m.invY = y - shift;
  } else {  // x += t(y)
    m.fwdX = x + shift; m.fwdY = y; m.invX = x - shift; m.invY = y;
  }
  return m;
}

}  // namespace

TEST_CASE("reference classifications") {
  Verdict zero = classify(ode("0"));
  CHECK(zero.kase == Case::MaximalDegeneration);
  CHECK_FALSE(zero.umbilical.has_value());

  Verdict y4 = classify(ode("y^4"));
  CHECK(y4.kase == Case::FirstIntermediate);
  REQUIRE(y4.umbilical.has_value());
  CHECK(*y4.zeroMean);
  CHECK_FALSE(*y4.umbilical);
  CHECK_FALSE(*y4.zeroGauss);
  CHECK(y4.intersectionClass);

  Verdict y2 = classify(ode("y^2"));
  CHECK(y2.kase == Case::OtherIntermediate);
  CHECK(y2.umbilical.has_value());
  CHECK_FALSE(y2.intersectionClass);

  Verdict gp = classify(ode("y", "0", "0", "1"));
  CHECK(gp.kase == Case::GeneralPosition);
  CHECK_FALSE(gp.umbilical.has_value());

  // linear equations are maximally degenerate
  CHECK(classify(ode("x + y")).kase == Case::MaximalDegeneration);
}

TEST_CASE("verdict JSON shape") {
  nlohmann::json j = nlohmann::json::parse(classify(ode("y^4")).toJson());
  CHECK(j["case"] == "FirstIntermediate");
  CHECK(j["zero_mean"] == true);
  CHECK(j["umbilical"] == false);
  CHECK(j["witness"]["M"] == "672/5*y^2");
  CHECK(j["witness"]["A"] == "12*y^2");

  nlohmann::json g = nlohmann::json::parse(classify(ode("y", "0", "0", "1")).toJson());
  CHECK(g["case"] == "GeneralPosition");
  CHECK_FALSE(g.contains("umbilical"));
  CHECK(g["witness"]["F5"] == "8*y");
}

TEST_CASE("invariance on the named examples") {
  PointMap scale{rf("x"), rf("2*y"), rf("x"), rf("1/2*y")};
  PointMap swap{rf("y"), rf("x"), rf("y"), rf("x")};
  CHECK(classificationInvariance(ode("y^4"), scale));
  CHECK(classificationInvariance(ode("0"), swap));
  CHECK(classificationInvariance(ode("y", "0", "0", "1"), swap));
}

TEST_CASE("invariance under 20 random maps per fixture") {
  std::mt19937_64 rng(41);
  CubicODE fixtures[] = {ode("0"), ode("y^4"), ode("y^2"), ode("y", "0", "0", "1"),
                         ode("y^2", "y")};
  for (const CubicODE& eq : fixtures) {
    for (int i = 0; i < 20; ++i) {
      PointMap m = (i % 2 == 0) ? randomAffine(rng) : randomShear(rng);
      CHECK(classificationInvariance(eq, m));
    }
  }
}
