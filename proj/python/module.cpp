#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "odeinv/classify.hpp"
#include "odeinv/compare.hpp"
#include "odeinv/parser.hpp"
#include "odeinv/scalars.hpp"
#include "odeinv/suites.hpp"

namespace py = pybind11;
using namespace odeinv;

namespace {

CubicODE makeEq(const std::string& P, const std::string& Q, const std::string& R,
                const std::string& S) {
  return CubicODE{parseExpr(P), parseExpr(Q), parseExpr(R), parseExpr(S)};
}

PointMap makeMap(const std::string& xt, const std::string& yt,
                 const std::string& ix, const std::string& iy) {
  PointMap m{parseExpr(xt), parseExpr(yt), parseExpr(ix), parseExpr(iy)};
  validateMap(m);
  return m;
}

py::dict eqDict(const CubicODE& eq) {
  py::dict d;
  d["P"] = eq.P.toString();
  d["Q"] = eq.Q.toString();
  d["R"] = eq.R.toString();
  d["S"] = eq.S.toString();
  return d;
}

}  // namespace

PYBIND11_MODULE(_odeinv, m) {
  m.doc() = "Exact differential invariants of ODEs cubic in y'";

  m.def(
      "classify",
      [](const std::string& P, const std::string& Q, const std::string& R,
         const std::string& S) { return classify(makeEq(P, Q, R, S)).toJson(); },
      py::arg("P"), py::arg("Q") = "0", py::arg("R") = "0", py::arg("S") = "0",
      "Classification verdict as a JSON string.");

  m.def(
      "invariants",
      [](const std::string& P, const std::string& Q, const std::string& R,
         const std::string& S, int through) {
        CubicODE eq = makeEq(P, Q, R, S);
        Verdict v = classify(eq);
        if (v.kase != Case::FirstIntermediate)
          throw std::domain_error("invariants require the first intermediate case");
        FundamentalFields ff = fundamental(eq);
        DegenerationFields df = degeneration(eq, ff);
        CurvatureData cd = curvature(df);
        int depth = 1, top = 9;
        while (top < through) {
          ++depth;
          top *= 3;
        }
        ScalarInvariants si = baseInvariants(df, ff, cd, depth);
        py::dict d;
        d["N"] = df.N.toString();
        d["M"] = df.M.toString();
        d["Omega"] = df.Omega.toString();
        d["detR"] = cd.detR.toString();
        d["Disc"] = cd.Disc.toString();
        for (int k = 1; k <= through; ++k)
          d[("I" + std::to_string(k)).c_str()] = si.at(k).toString();
        return d;
      },
      py::arg("P"), py::arg("Q") = "0", py::arg("R") = "0", py::arg("S") = "0",
      py::arg("through") = 9, "Canonical strings of N, M, Omega, detR, Disc, I1..Ik.");

  m.def(
      "pushforward",
      [](const std::string& P, const std::string& Q, const std::string& R,
         const std::string& S, const std::string& xt, const std::string& yt,
         const std::string& ix, const std::string& iy) {
        return eqDict(pushforward(makeEq(P, Q, R, S), makeMap(xt, yt, ix, iy)));
      },
      py::arg("P"), py::arg("Q"), py::arg("R"), py::arg("S"), py::arg("xt"),
      py::arg("yt"), py::arg("inv_x"), py::arg("inv_y"),
      "Transformed equation coefficients under the given point map.");

  m.def(
      "verify",
      [](const std::string& P, const std::string& Q, const std::string& R,
         const std::string& S, const std::string& suite, const std::string& mode,
         unsigned seed, int points, int bits) {
        SuiteOptions opts;
        opts.mode = mode == "modular" ? ZeroMode::Modular : ZeroMode::Exact;
        opts.seed = seed;
        opts.numericPoints = points;
        opts.precisionBits = bits;
        py::list out;
        for (const CheckResult& c :
             runSuite(makeEq(P, Q, R, S), suiteFromName(suite), opts)) {
          py::dict d;
          d["name"] = c.name;
          d["mode"] = c.mode;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("P"), py::arg("Q") = "0", py::arg("R") = "0", py::arg("S") = "0",
      py::arg("suite") = "all", py::arg("mode") = "exact", py::arg("seed") = 0,
      py::arg("points") = 5, py::arg("bits") = 256,
      "Identity-suite results as a list of dicts.");

  m.def(
      "compare",
      [](const py::tuple& eq1, const py::tuple& eq2) {
        auto mk = [](const py::tuple& t) {
          return makeEq(t[0].cast<std::string>(), t[1].cast<std::string>(),
                        t[2].cast<std::string>(), t[3].cast<std::string>());
        };
        CompareResult r = compareEquations(mk(eq1), mk(eq2));
        py::dict d;
        d["verdict"] = r.possiblyEquivalent ? "EQUIV-POSSIBLE" : "NOT-EQUIVALENT";
        d["reason"] = r.reason;
        return d;
      },
      py::arg("eq1"), py::arg("eq2"),
      "Necessary-condition comparison of two (P, Q, R, S) tuples.");
}
