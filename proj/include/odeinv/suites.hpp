#pragma once

#include <string>
#include <vector>

#include "odeinv/bagderina.hpp"
#include "odeinv/classify.hpp"

namespace odeinv {

struct CheckResult {
  std::string name;
  std::string mode;  // "exact", "modular", or "numeric"
  bool pass = false;
  std::string detail;  // residual / witness, empty when uninteresting
};

enum class Suite { Core, FirstCase, Bagderina, All };
enum class ZeroMode { Exact, Modular };

Suite suiteFromName(const std::string& name);  // throws std::invalid_argument
std::string suiteName(Suite s);

struct SuiteOptions {
  ZeroMode mode = ZeroMode::Exact;
  unsigned seed = 0;
  int numericPoints = 5;
  int precisionBits = 256;
};

/// Runs the identity checks applicable to the equation's class. Throws
/// std::domain_error when the suite's class precondition fails (e.g. the
/// first-case suite on a non-first-case equation).
std::vector<CheckResult> runSuite(const CubicODE& eq, Suite suite,
                                  const SuiteOptions& opts = {});

/// Weight-covariance transport checks for every field defined on the
/// equation, plus classification invariance, under the given map.
std::vector<CheckResult> covarianceChecks(const CubicODE& eq, const PointMap& map);

bool allPass(const std::vector<CheckResult>& results);

}  // namespace odeinv
