#include "odeinv/classify.hpp"

#include <json.hpp>

namespace odeinv {

std::string caseName(Case c) {
  switch (c) {
    case Case::GeneralPosition: return "GeneralPosition";
    case Case::MaximalDegeneration: return "MaximalDegeneration";
    case Case::FirstIntermediate: return "FirstIntermediate";
    case Case::OtherIntermediate: return "OtherIntermediate";
  }
  return "?";
}

Verdict classify(const CubicODE& eq) {
  FundamentalFields ff = fundamental(eq);
  Verdict v;
  v.witness.F5 = ff.F5.toString();
  v.witness.A = ff.A.toString();
  v.witness.B = ff.B.toString();

  if (!ff.F5.isZero()) {
    v.kase = Case::GeneralPosition;
    return v;
  }
  if (ff.A.isZero() && ff.B.isZero()) {
    v.kase = Case::MaximalDegeneration;
    return v;
  }
  DegenerationFields df = degeneration(eq, ff);
  CurvatureData cd = curvature(df);
  v.kase = df.M.isZero() ? Case::OtherIntermediate : Case::FirstIntermediate;
  v.umbilical = cd.Disc.isZero();
  v.zeroMean = cd.Omega.isZero();
  v.zeroGauss = cd.detR.isZero();
  v.intersectionClass = (v.kase == Case::FirstIntermediate) && *v.zeroMean;
  v.witness.M = df.M.toString();
  v.witness.Omega = cd.Omega.toString();
  v.witness.detR = cd.detR.toString();
  v.witness.Disc = cd.Disc.toString();
  return v;
}

std::string Verdict::toJson() const {
  nlohmann::json j;
  j["case"] = caseName(kase);
  if (umbilical) {
    j["umbilical"] = *umbilical;
    j["zero_mean"] = *zeroMean;
    j["zero_gauss"] = *zeroGauss;
    j["intersection_class"] = intersectionClass;
  }
  nlohmann::json w;
  w["F5"] = witness.F5;
  w["A"] = witness.A;
  w["B"] = witness.B;
  if (umbilical) {
    w["M"] = witness.M;
    w["Omega"] = witness.Omega;
    w["detR"] = witness.detR;
    w["Disc"] = witness.Disc;
  }
  j["witness"] = w;
  return j.dump(2);
}

bool classificationInvariance(const CubicODE& eq, const PointMap& map) {
  Verdict a = classify(eq);
  Verdict b = classify(pushforward(eq, map));
  return a.kase == b.kase && a.umbilical == b.umbilical &&
         a.zeroMean == b.zeroMean && a.zeroGauss == b.zeroGauss &&
         a.intersectionClass == b.intersectionClass;
}

}  // namespace odeinv
