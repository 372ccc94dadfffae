// Command-line driver: classification, invariants, identity verification,
// coordinate transforms, equivalence screening, and corpus generation for
// second-order ODEs cubic in the first derivative.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input error, 3 class precondition not met.

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "odeinv/classify.hpp"
#include "odeinv/compare.hpp"
#include "odeinv/corpus.hpp"
#include "odeinv/io.hpp"
#include "odeinv/parser.hpp"
#include "odeinv/scalars.hpp"
#include "odeinv/suites.hpp"

using namespace odeinv;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitClass = 3;

json equationEcho(const CubicODE& eq) {
  return json{{"P", eq.P.toString()},
              {"Q", eq.Q.toString()},
              {"R", eq.R.toString()},
              {"S", eq.S.toString()}};
}

json checksJson(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json item{{"name", c.name},
              {"mode", c.mode},
              {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(item);
  }
  return arr;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmdClassify(const std::string& eqFile) {
  CubicODE eq = readEquation(eqFile);
  std::cout << classify(eq).toJson() << "\n";
  return kExitPass;
}

int cmdInvariants(const std::string& eqFile, int through, bool asJson) {
  CubicODE eq = readEquation(eqFile);
  Verdict v = classify(eq);
  if (v.kase != Case::FirstIntermediate) {
    std::cout << v.toJson() << "\n";
    return kExitClass;
  }
  FundamentalFields ff = fundamental(eq);
  DegenerationFields df = degeneration(eq, ff);
  CurvatureData cd = curvature(df);
  int depth = 1, top = 9;
  while (top < through) {
    ++depth;
    top *= 3;
  }
  ScalarInvariants si = baseInvariants(df, ff, cd, depth);

  std::vector<std::pair<std::string, std::string>> rows = {
      {"N", df.N.toString()},        {"M", df.M.toString()},
      {"Omega", df.Omega.toString()}, {"detR", cd.detR.toString()},
      {"Disc", cd.Disc.toString()},
  };
  for (int k = 1; k <= through; ++k)
    rows.emplace_back("I" + std::to_string(k), si.at(k).toString());

  if (asJson) {
    json out;
    out["equation"] = equationEcho(eq);
    json table;
    for (const auto& [name, value] : rows) table[name] = value;
    out["invariants"] = table;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [name, value] : rows)
      std::cout << name << " = " << value << "\n";
  }
  return kExitPass;
}

int cmdVerify(const std::string& eqFile, const std::string& suite,
              const std::string& mode, int points, int bits, unsigned seed) {
  Timer timer;
  CubicODE eq = readEquation(eqFile);
  SuiteOptions opts;
  if (mode == "exact")
    opts.mode = ZeroMode::Exact;
  else if (mode == "modular")
    opts.mode = ZeroMode::Modular;
  else
    throw std::runtime_error("unknown mode: " + mode);
  opts.seed = seed;
  opts.numericPoints = points;
  opts.precisionBits = bits;

  std::vector<CheckResult> checks = runSuite(eq, suiteFromName(suite), opts);
  bool pass = allPass(checks);

  json out;
  out["equation"] = equationEcho(eq);
  out["suite"] = suite;
  out["mode"] = mode;
  out["seed"] = seed;
  out["checks"] = checksJson(checks);
  out["pass"] = pass;
  out["elapsed_ms"] = timer.ms();
  std::cout << out.dump(2) << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmdTransform(const std::string& eqFile, const std::string& mapFile,
                 bool checkCovariance) {
  CubicODE eq = readEquation(eqFile);
  PointMap map = readMap(mapFile);
  try {
    validateMap(map);
  } catch (const std::domain_error& e) {
    std::cerr << "invalid map: " << e.what() << "\n";
    return kExitInput;
  }
  json out;
  out["equation"] = equationEcho(eq);
  out["transformed"] = equationEcho(pushforward(eq, map));
  bool pass = true;
  if (checkCovariance) {
    std::vector<CheckResult> checks = covarianceChecks(eq, map);
    pass = allPass(checks);
    out["covariance"] = checksJson(checks);
    out["pass"] = pass;
  }
  std::cout << out.dump(2) << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmdCompare(const std::string& file1, const std::string& file2) {
  CubicODE a = readEquation(file1);
  CubicODE b = readEquation(file2);
  CompareResult r = compareEquations(a, b);
  json out;
  out["first"] = equationEcho(a);
  out["second"] = equationEcho(b);
  out["verdict"] = r.possiblyEquivalent ? "EQUIV-POSSIBLE" : "NOT-EQUIVALENT";
  out["reason"] = r.reason;
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmdCorpus(const std::string& family, int count, int degree, unsigned seed,
              const std::string& outDir) {
  if (degree < 1) throw std::runtime_error("--degree must be >= 1");
  std::filesystem::create_directories(outDir);
  std::vector<CubicODE> eqs;
  if (family == "p-only") {
    eqs = pOnlyCorpus(count, std::max(2, degree), seed);
  } else if (family == "random") {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) eqs.push_back(randomFull(rng, degree));
  } else {
    throw std::runtime_error("unknown family: " + family);
  }
  json files = json::array();
  for (size_t i = 0; i < eqs.size(); ++i) {
    std::string name = family + "_" + std::to_string(seed) + "_" +
                       std::to_string(i) + ".json";
    std::string path = (std::filesystem::path(outDir) / name).string();
    writeEquation(eqs[i], path);
    files.push_back(path);
  }
  json out{{"family", family}, {"seed", seed}, {"count", count},
           {"degree", degree}, {"files", files}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential invariants of ODEs cubic in y'"};
  app.require_subcommand(1);

  std::string eqFile, eqFile2, mapFile, outDir = ".";
  std::string suite = "all", mode = "exact", family = "p-only";
  int through = 9, points = 5, bits = 256, count = 10, degree = 4;
  unsigned seed = 0;
  bool asJson = false, checkCovariance = false;

  auto* cClassify = app.add_subcommand("classify", "Classify an equation");
  cClassify->add_option("eq", eqFile, "equation JSON file")->required();

  auto* cInv = app.add_subcommand("invariants", "Print scalar invariants");
  cInv->add_option("eq", eqFile)->required();
  cInv->add_option("--through", through, "highest invariant index");
  cInv->add_flag("--json", asJson, "JSON output");

  auto* cVerify = app.add_subcommand("verify", "Run identity suites");
  cVerify->add_option("eq", eqFile)->required();
  cVerify->add_option("--suite", suite, "core|first-case|bagderina|all");
  cVerify->add_option("--mode", mode, "exact|modular");
  cVerify->add_option("--numeric-points", points, "numeric sample points");
  cVerify->add_option("--precision", bits, "numeric precision in bits");
  cVerify->add_option("--seed", seed, "sampling seed");

  auto* cTransform = app.add_subcommand("transform", "Push an equation through a map");
  cTransform->add_option("eq", eqFile)->required();
  cTransform->add_option("--map", mapFile, "map JSON file")->required();
  cTransform->add_flag("--check-covariance", checkCovariance,
                       "verify pseudofield transport");

  auto* cCompare = app.add_subcommand("compare", "Necessary-condition comparison");
  cCompare->add_option("eq1", eqFile)->required();
  cCompare->add_option("eq2", eqFile2)->required();

  auto* cCorpus = app.add_subcommand("corpus", "Generate equation files");
  cCorpus->add_option("--family", family, "p-only|random");
  cCorpus->add_option("--count", count);
  cCorpus->add_option("--degree", degree);
  cCorpus->add_option("--seed", seed);
  cCorpus->add_option("--out", outDir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cClassify->parsed()) return cmdClassify(eqFile);
    if (cInv->parsed()) return cmdInvariants(eqFile, through, asJson);
    if (cVerify->parsed())
      return cmdVerify(eqFile, suite, mode, points, bits, seed);
    if (cTransform->parsed()) return cmdTransform(eqFile, mapFile, checkCovariance);
    if (cCompare->parsed()) return cmdCompare(eqFile, eqFile2);
    if (cCorpus->parsed()) return cmdCorpus(family, count, degree, seed, outDir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "class precondition: " << e.what() << "\n";
    return kExitClass;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
