// Acceptance harness: one pass/fail line per criterion. Exits with the
// number of failed criteria. argv[1] = CLI binary, argv[2] = fixtures dir.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "odeinv/bagderina.hpp"
#include "odeinv/compare.hpp"
#include "odeinv/corpus.hpp"
#include "odeinv/parser.hpp"
#include "odeinv/scalars.hpp"
#include "odeinv/suites.hpp"

using namespace odeinv;

namespace {

std::string gBin, gFixtures;

struct Run {
  int exit = -1;
  std::string out;
};

Run runCli(const std::string& args) {
  std::string cmd = gBin + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Run r;
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

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

struct Verdicts {
  // flattened (equation tag, check name, pass) for mode comparison
  std::vector<std::string> names;
  std::vector<bool> passes;
  bool allPassed = true;

  void add(const std::string& tag, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
      names.push_back(tag + "/" + c.name);
      passes.push_back(c.pass);
      if (!c.pass) allPassed = false;
    }
  }
};

Verdicts runIdentitySuites(const std::vector<CubicODE>& ponly,
                           const std::vector<CubicODE>& inter, ZeroMode mode) {
  Verdicts v;
  SuiteOptions opts;
  opts.mode = mode;
  int idx = 0;
  auto process = [&](const CubicODE& eq, const std::string& family) {
    std::string tag = family + std::to_string(idx++);
    v.add(tag, runSuite(eq, Suite::Core, opts));
    if (classify(eq).kase == Case::FirstIntermediate)
      v.add(tag, runSuite(eq, Suite::FirstCase, opts));
  };
  for (const CubicODE& eq : ponly) process(eq, "p");
  for (const CubicODE& eq : inter) process(eq, "g");
  return v;
}

bool criterion1(std::string& note) {
  Pipeline p = build(ode("y^4"));
  ScalarInvariants si = baseInvariants(p.df, p.ff, p.cd);
  BgdData b = bgdChain(p.eq, p.ff, p.df, p.cd);
  const Expansion& e = si.expansion;
  struct Row {
    const char* name;
    RatFunc actual, expected;
  } rows[] = {
      {"A", p.ff.A, rf("12*y^2")},
      {"B", p.ff.B, rf("0")},
      {"H", p.ff.H, rf("-288*y^3")},
      {"F5", p.ff.F5, rf("0")},
      {"N", p.df.N, rf("8*y")},
      {"M", p.df.M, rf("672/5*y^2")},
      {"phi1", p.df.phi[0], rf("0")},
      {"phi2", p.df.phi[1], rf("-6/(5*y)")},
      {"C", p.df.gammaVec.at({0}), rf("56/5")},
      {"D", p.df.gammaVec.at({1}), rf("0")},
      {"Omega", p.cd.Omega, rf("0")},
      {"detR", p.cd.detR, rf("-308/125*y")},
      {"Disc", p.cd.Disc, rf("1232/125*y")},
      {"j5 chain route", b.j5, rf("308*y")},
      {"j5 curvature route", Rat(-125) * p.cd.detR, rf("308*y")},
      {"I1", si.I1, rf("21/10")},
      {"I2", si.I2, rf("0")},
      {"I3", si.I3, rf("1/27")},
      {"hat Gamma^1_22", e.coef[0][1][1], rf("784/75*y^2")},
      {"hat Gamma^2_12", e.coef[1][0][1], rf("192/5*y")},
      {"hat Gamma^1_11", e.coef[0][0][0], rf("-24/5*y")},
      {"hat Gamma^2_21", e.coef[1][1][0], rf("-24/5*y")},
  };
  for (const Row& r : rows)
    if (!(r.actual == r.expected)) {
      note = std::string("mismatch at ") + r.name + ": got " + r.actual.toString();
      return false;
    }
  note = "22 desk values reproduced";
  return true;
}

std::vector<CubicODE> gPonly, gInter;
Verdicts gExactVerdicts;

bool criterion2(std::string& note) {
  gPonly = pOnlyCorpus(50, 6, 42);
  gInter = intermediateCorpus(20, 3, 43);
  gExactVerdicts = runIdentitySuites(gPonly, gInter, ZeroMode::Exact);
  std::ostringstream os;
  os << gPonly.size() << " P-only + " << gInter.size() << " general equations, "
     << gExactVerdicts.names.size() << " checks";
  note = os.str();
  return gExactVerdicts.allPassed && gPonly.size() >= 50 && gInter.size() >= 20;
}

bool criterion3(std::string& note) {
  CubicODE fixtures[] = {ode("y^4"), ode("y^5"), ode("y^2"), ode("0"),
                         ode("y", "0", "0", "1")};
  std::mt19937_64 rng(2026);
  int checks = 0;
  for (int m = 0; m < 20; ++m) {
    PointMap map = randomMap(rng);
    for (const CubicODE& eq : fixtures) {
      std::vector<CheckResult> res = covarianceChecks(eq, map);
      checks += static_cast<int>(res.size());
      if (!allPass(res)) {
        note = "failure under map " + map.fwdX.toString() + ", " +
               map.fwdY.toString();
        return false;
      }
    }
  }
  note = std::to_string(checks) + " transport checks over 20 maps x 5 fixtures";
  return true;
}

bool criterion4(std::string& note) {
  SuiteOptions opts;
  opts.numericPoints = 5;
  opts.precisionBits = 256;
  int numeric = 0;
  for (const CubicODE& eq : {ode("y^4"), ode("y^5")}) {
    std::vector<CheckResult> res = runSuite(eq, Suite::Bagderina, opts);
    for (const auto& c : res)
      if (c.mode == "numeric") ++numeric;
    if (!allPass(res)) {
      note = "bridge check failure";
      return false;
    }
  }
  if (numeric < 20) {  // two identities x five points x two equations
    note = "too few numeric checks: " + std::to_string(numeric);
    return false;
  }
  note = std::to_string(numeric) + " numeric residuals below 1e-30 at 256 bits";
  return true;
}

bool criterion5(std::string& note) {
  Run zero = runCli("classify " + gFixtures + "/zero.json");
  if (zero.exit != 0 || !contains(zero.out, "MaximalDegeneration")) {
    note = "zero.json misclassified";
    return false;
  }
  Run y2c = runCli("classify " + gFixtures + "/y2.json");
  if (!contains(y2c.out, "OtherIntermediate")) {
    note = "y2.json misclassified";
    return false;
  }
  if (runCli("invariants " + gFixtures + "/y2.json").exit != 3) {
    note = "invariants on y2.json should exit 3";
    return false;
  }
  if (runCli("verify " + gFixtures + "/y2.json --suite first-case").exit != 3) {
    note = "verify on y2.json should exit 3";
    return false;
  }
  Run cubic = runCli("classify " + gFixtures + "/cubic.json");
  if (!contains(cubic.out, "GeneralPosition") || !contains(cubic.out, "\"8*y\"")) {
    note = "cubic.json should be general position with F^5 = 8*y";
    return false;
  }
  if (runCli("classify " + gFixtures + "/no_such_file.json").exit != 2) {
    note = "missing file should exit 2";
    return false;
  }
  note = "negative controls and exit codes 0/2/3 confirmed";
  return true;
}

bool criterion6(std::string& note) {
  CubicODE y4 = ode("y^4"), y5 = ode("y^5");
  if (compareEquations(y4, y5).possiblyEquivalent) {
    note = "y^4 vs y^5 not separated";
    return false;
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    PointMap map = randomMap(rng);
    CompareResult r = compareEquations(y4, pushforward(y4, map));
    if (!r.possiblyEquivalent) {
      note = "pushforward " + std::to_string(i) + " separated: " + r.reason;
      return false;
    }
  }
  note = "y^4 vs y^5 separated; 20 pushforwards of y^4 not separated";
  return true;
}

bool criterion7(std::string& note) {
  Verdicts modular = runIdentitySuites(gPonly, gInter, ZeroMode::Modular);
  if (modular.names != gExactVerdicts.names) {
    note = "check lists differ between modes";
    return false;
  }
  for (size_t i = 0; i < modular.passes.size(); ++i)
    if (modular.passes[i] != gExactVerdicts.passes[i]) {
      note = "verdict differs at " + modular.names[i];
      return false;
    }
  note = std::to_string(modular.passes.size()) + " verdicts identical in both modes";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: odeinv_acceptance <odeinv-binary> <fixtures-dir>\n";
    return 64;
  }
  gBin = argv[1];
  gFixtures = argv[2];

  struct Criterion {
    int id;
    const char* label;
    bool (*fn)(std::string&);
  } criteria[] = {
      {1, "desk fixture y''=y^4 (runtime < 5 s)", criterion1},
      {2, "identity suites on seeded corpora (runtime < 10 min)", criterion2},
      {3, "covariance gold test, 20 random maps", criterion3},
      {4, "bridge suite, symbolic + numeric", criterion4},
      {5, "negative controls and CLI exit codes", criterion5},
      {6, "equivalence screening y^4 vs y^5 and pushforwards", criterion6},
      {7, "modular fast path agrees with exact mode", criterion7},
  };
  double budget[] = {5.0, 600.0, 600.0, 600.0, 60.0, 600.0, 600.0};

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (ok && secs > budget[c.id - 1]) {
      ok = false;
      note += " [over time budget]";
    }
    if (!ok) ++failed;
    std::printf("criterion %d [%s]: %s (%.1f s) — %s\n", c.id,
                ok ? "PASS" : "FAIL", c.label, secs, note.c_str());
  }
  return failed;
}
