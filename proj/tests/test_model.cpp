#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "odeinv/model.hpp"
#include "odeinv/parser.hpp"

using namespace odeinv;

namespace {

RatFunc rf(const std::string& s) { return parseExpr(s); }

PointMap swapMap() { return PointMap{rf("y"), rf("x"), rf("y"), rf("x")}; }

PointMap scaleMap() {  // (x, y) -> (x, 2y)
  return PointMap{rf("x"), rf("2*y"), rf("x"), rf("1/2*y")};
}

PointMap shearMap() {  // (x, y) -> (x, y + x^3)
  return PointMap{rf("x"), rf("y + x^3"), rf("x"), rf("y - x^3")};
}

PointMap affineMap() {  // (x, y) -> (2x + y + 1, x - y)
  return PointMap{rf("2*x + y + 1"), rf("x - y"),
                  rf("1/3*x + 1/3*y - 1/3"), rf("1/3*x - 2/3*y - 1/3")};
}

}  // namespace

TEST_CASE("map validation") {
  CHECK_NOTHROW(validateMap(PointMap::identity()));
  CHECK_NOTHROW(validateMap(swapMap()));
  CHECK_NOTHROW(validateMap(shearMap()));
  CHECK_NOTHROW(validateMap(affineMap()));
  // wrong inverse
  CHECK_THROWS_AS(validateMap(PointMap{rf("x"), rf("2*y"), rf("x"), rf("y")}),
                  std::domain_error);
  // singular forward
  CHECK_THROWS_AS(validateMap(PointMap{rf("x"), rf("x"), rf("x"), rf("x")}),
                  std::domain_error);
}

TEST_CASE("jacobians") {
  Jacobians id = jacobians(PointMap::identity());
  CHECK(id.detT == rf("1"));
  CHECK(id.T[0][0] == rf("1"));
  CHECK(id.T[0][1].isZero());
  CHECK(id.S[1][1] == rf("1"));

  Jacobians sw = jacobians(swapMap());
  CHECK(sw.detT == rf("-1"));
  CHECK(sw.T[0][1] == rf("1"));
  CHECK(sw.T[0][0].isZero());

  Jacobians sh = jacobians(shearMap());
  CHECK(sh.detT == rf("1"));
  CHECK(sh.T[1][0] == rf("3*x^2"));
  CHECK(sh.S[1][0] == rf("-3*x^2"));
}

TEST_CASE("pushforward under the identity") {
  CubicODE eq{rf("y^4"), rf("x*y"), rf("1/(3*y)"), rf("x")};
  CubicODE out = pushforward(eq, PointMap::identity());
  CHECK(out == eq);
}

TEST_CASE("pushforward under the swap map") {
  // swapping x and y sends (P, Q, R, S) to (-S, -R, -Q, -P) with arguments swapped
  CubicODE eq{rf("y^4"), rf("x"), rf("x*y + 1"), rf("y^2")};
  CubicODE out = pushforward(eq, swapMap());
  CHECK(out.P == rf("-x^2"));
  CHECK(out.Q == rf("-(x*y + 1)"));
  CHECK(out.R == rf("-y"));
  CHECK(out.S == rf("-x^4"));
}

TEST_CASE("pushforward of y'' = y^4 under (x, 2y)") {
  CubicODE eq{rf("y^4"), rf("0"), rf("0"), rf("0")};
  CubicODE out = pushforward(eq, scaleMap());
  CHECK(out.P == rf("1/8*y^4"));
  CHECK(out.Q.isZero());
  CHECK(out.R.isZero());
  CHECK(out.S.isZero());
}

TEST_CASE("pushforward respects composition") {
  CubicODE eq{rf("y^2 + x"), rf("y"), rf("0"), rf("1")};
  PointMap m1 = affineMap(), m2 = shearMap();
  PointMap both = composeMaps(m1, m2);
  CHECK_NOTHROW(validateMap(both));
  CubicODE viaComposite = pushforward(eq, both);
  CubicODE stepwise = pushforward(pushforward(eq, m1), m2);
  CHECK(viaComposite == stepwise);
}

TEST_CASE("pseudofield indexing") {
  PseudoField v = PseudoField::vector(rf("x"), rf("y"), 2);
  CHECK(v.at({0}) == rf("x"));
  CHECK(v.at({1}) == rf("y"));
  PseudoField d = skewLower();
  CHECK(d.at({0, 1}) == rf("1"));
  CHECK(d.at({1, 0}) == rf("-1"));
  CHECK(d.at({0, 0}).isZero());
}

TEST_CASE("weight-zero scalars transform by composition") {
  PseudoField s = PseudoField::scalar(rf("x^2 + y"), 0);
  PseudoField out = transformPseudoField(s, shearMap());
  CHECK(out.comp[0] == rf("x^2 + y + x^3"));
}

TEST_CASE("skew fields are invariant") {
  for (const PointMap& m : {swapMap(), scaleMap(), shearMap(), affineMap()}) {
    CHECK(transformPseudoField(skewLower(), m) == skewLower());
    CHECK(transformPseudoField(skewUpper(), m) == skewUpper());
  }
}

TEST_CASE("vector field transport undoes a scale map") {
  // the weight-2 vector (B, -A) for y'' = y^4 is (0, -12 y^2); for its
  // image under (x, 2y) it is (0, -3/2 y^2); transport recovers the original
  PseudoField tilde = PseudoField::vector(rf("0"), rf("-3/2*y^2"), 2);
  PseudoField back = transformPseudoField(tilde, scaleMap());
  CHECK(back.at({0}).isZero());
  CHECK(back.at({1}) == rf("-12*y^2"));
}

TEST_CASE("full contraction of transported fields is a weighted scalar") {
  // c_i v^i with weights 3 and 2 behaves as a weight-5 scalar
  PseudoField c = PseudoField::covector(rf("x"), rf("y^2"), 3);
  PseudoField v = PseudoField::vector(rf("y"), rf("x + 1"), 2);
  for (const PointMap& m : {scaleMap(), shearMap(), affineMap()}) {
    PseudoField tc = transformPseudoField(c, m);
    PseudoField tv = transformPseudoField(v, m);
    RatFunc contracted = tc.at({0}) * tv.at({0}) + tc.at({1}) * tv.at({1});
    RatFunc scalar = c.at({0}) * v.at({0}) + c.at({1}) * v.at({1});
    PseudoField ts = transformPseudoField(PseudoField::scalar(scalar, 5), m);
    CHECK(contracted == ts.comp[0]);
  }
}
