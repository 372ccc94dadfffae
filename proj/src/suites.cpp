#include "odeinv/suites.hpp"

#include <optional>
#include <random>
#include <stdexcept>

#include "odeinv/scalars.hpp"

namespace odeinv {

namespace {

/// Zero testing for rational functions: exact, or Schwartz-Zippel style
/// sampling modulo two primes near 2^61 with exact fallback whenever the
/// primes disagree or a sample is unusable.
class ZeroTest {
 public:
  ZeroTest(ZeroMode mode, unsigned seed) : mode_(mode), rng_(seed * 0x9e3779b97f4a7c15ull + 1) {
    if (mode_ == ZeroMode::Modular) {
      Int base;
      mpz_ui_pow_ui(base.get_mpz_t(), 2, 61);
      mpz_nextprime(p1_.get_mpz_t(), base.get_mpz_t());
      mpz_nextprime(p2_.get_mpz_t(), p1_.get_mpz_t());
    }
  }

  std::string modeName() const {
    return mode_ == ZeroMode::Exact ? "exact" : "modular";
  }

  bool isZero(const RatFunc& f) {
    if (mode_ == ZeroMode::Exact) return f.isZero();
    std::optional<bool> v1 = zeroModPrime(f, p1_);
    std::optional<bool> v2 = zeroModPrime(f, p2_);
    if (!v1 || !v2 || *v1 != *v2) return f.isZero();  // forced exact fallback
    return *v1;
  }

 private:
  std::optional<bool> zeroModPrime(const RatFunc& f, const Int& p) {
    bool allZero = true;
    for (int pt = 0; pt < 3; ++pt) {
      bool sampled = false;
      for (int attempt = 0; attempt < 50 && !sampled; ++attempt) {
        Int x = draw(), y = draw();
        try {
          if (f.evalMod(x, y, p) != 0) allZero = false;
          sampled = true;
        } catch (const std::domain_error&) {
          // denominator hit; resample the point
        } catch (const std::exception&) {
          return std::nullopt;  // coefficient not invertible: unusable prime
        }
      }
      if (!sampled) return std::nullopt;
    }
    return allZero;
  }

  Int draw() {
    unsigned long r = rng_() & ((1ul << 61) - 1);
    return Int(r);
  }

  ZeroMode mode_;
  std::mt19937_64 rng_;
  Int p1_, p2_;
};

struct Runner {
  ZeroTest zt;
  std::vector<CheckResult> out;

  Runner(const SuiteOptions& opts) : zt(opts.mode, opts.seed) {}

  void zero(const std::string& name, const RatFunc& diff) {
    bool z = zt.isZero(diff);
    out.push_back({name, zt.modeName(), z, z ? "" : "non-zero difference"});
  }

  void fact(const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, "exact", pass, detail});
  }
};

struct Pipeline {
  CubicODE eq;
  FundamentalFields ff;
  DegenerationFields df;
  CurvatureData cd;
};

Pipeline buildPipeline(const CubicODE& eq) {
  Pipeline p;
  p.eq = eq;
  p.ff = fundamental(eq);
  p.df = degeneration(eq, p.ff);
  p.cd = curvature(p.df);
  return p;
}

void coreSuite(const CubicODE& eq, Runner& r) {
  FundamentalFields ff = fundamental(eq);
  const RatFunc &A = ff.A, &B = ff.B;
  const RatFunc &P = eq.P, &Q = eq.Q, &R = eq.R, &S = eq.S;
  RatFunc radicand = A * B * A.diff(VarY) + A * B * B.diff(VarX) -
                     A * A * B.diff(VarY) - B * B * A.diff(VarX) - P * B * B * B +
                     Rat(3) * Q * A * B * B - Rat(3) * R * A * A * B + S * A * A * A;
  r.zero("F^5 contracted form vs radicand form   [3.8 = 3.9]", ff.F5 - radicand);

  if (!ff.F5.isZero() || (A.isZero() && B.isZero())) {
    r.fact("degeneration structure checks", true,
           "skipped: not an intermediate-degeneration equation");
    return;
  }

  Pipeline p;
  p.eq = eq;
  p.ff = ff;
  p.df = degeneration(eq, ff);  // asserts branch agreement internally
  p.cd = curvature(p.df);

  if (!B.isZero()) r.zero("3 B N = G   [4.2 via B]", Rat(3) * B * p.df.N - ff.G);
  if (!A.isZero()) r.zero("3 A N = -H   [4.2 via A]", Rat(3) * A * p.df.N + ff.H);
  r.fact("branch formulas agree   [4.3-4.4, 4.15-4.16]", true,
         (!A.isZero() && !B.isZero()) ? "both branches evaluated"
                                      : "single branch defined");
  r.zero("M = A C + B D   [4.11]",
         p.df.M - A * p.df.gammaVec.at({0}) - B * p.df.gammaVec.at({1}));
  r.zero("curvature trace vs phi curl   [5.2 = 5.3]",
         p.cd.omega[0][1] - (p.df.phi[0].diff(VarY) - p.df.phi[1].diff(VarX)));
  r.zero("tr R = (3/5) Omega   [5.8]", p.cd.trR - Rat(3, 5) * p.cd.Omega);
  r.zero("Omega = (5/3) omega_12   [5.3]",
         p.cd.Omega - Rat(5, 3) * p.cd.omega[0][1]);
}

void firstCaseSuite(const Pipeline& p, Runner& r) {
  const RatFunc &N = p.df.N, &M = p.df.M;
  ScalarInvariants si = baseInvariants(p.df, p.ff, p.cd);
  const Expansion& e = si.expansion;

  r.zero("hat Gamma^2_11 = 0   [8.5]", e.coef[1][0][0]);
  r.zero("hat Gamma^1_21 = 0   [8.5]", e.coef[0][1][0]);
  r.zero("hat Gamma^1_11 = -(3/5) N   [8.6]", e.coef[0][0][0] + Rat(3, 5) * N);
  r.zero("hat Gamma^2_21 = -(3/5) N   [8.6]", e.coef[1][1][0] + Rat(3, 5) * N);
  r.zero("hat Gamma^1_12 = -hat Gamma^2_22   [8.9]",
         e.coef[0][0][1] + e.coef[1][1][1]);
  r.zero("I2 = Omega^2 / N   [8.2]", si.I2 - p.cd.Omega * p.cd.Omega / N);

  RatFunc dAN =
      directional(PseudoField::scalar(N, 2), Dir::Alpha, p.df, p.ff).comp[0];
  RatFunc dAM =
      directional(PseudoField::scalar(M, 4), Dir::Alpha, p.df, p.ff).comp[0];
  r.zero("grad_alpha N = M   [8.28]", dAN - M);
  r.zero("grad_alpha M = I4 N^3 + 2 I1 N M   [8.28]",
         dAM - si.at(4) * N.pow(3) - Rat(2) * si.I1 * N * M);

  if (p.cd.Omega.isZero()) {
    RatFunc dGN =
        directional(PseudoField::scalar(N, 2), Dir::Gamma, p.df, p.ff).comp[0];
    RatFunc dGM =
        directional(PseudoField::scalar(M, 4), Dir::Gamma, p.df, p.ff).comp[0];
    r.zero("grad_gamma N = 0   [8.28, zero mean]", dGN);
    r.zero("(grad_gamma M)^2 = N^7 I7   [8.28 squared, zero mean]",
           dGM * dGM - N.pow(7) * si.at(7));
    r.zero("I1 hat Gamma^2_12 = I4 N + (3/5) I1 N + 2 I1^2 N   [8.7, zero mean]",
           si.I1 * e.coef[1][0][1] - si.at(4) * N - Rat(3, 5) * si.I1 * N -
               Rat(2) * si.I1 * si.I1 * N);
    RatFunc lhs = si.I1 * e.coef[1][1][1];
    r.zero("(I1 hat Gamma^2_22)^2 = I7 N^3   [8.8 squared, zero mean]",
           lhs * lhs - si.at(7) * N.pow(3));
  } else {
    r.fact("zero-mean relations", true, "skipped: Omega != 0");
  }
}

void bagderinaSuite(const CubicODE& eq, const Pipeline& p, Runner& r,
                    const SuiteOptions& opts) {
  BgdData b = bgdChain(p.eq, p.ff, p.df, p.cd);  // throws when A == 0
  r.zero("j5 = -125 detR + (45/4) Omega^2   [8.25 = 6.1]",
         b.j5 + Rat(125) * p.cd.detR - Rat(45, 4) * p.cd.Omega * p.cd.Omega);
  r.zero("j5 = (125/4) Disc   [6.2]", b.j5 - Rat(125, 4) * p.cd.Disc);
  r.zero("(I2)^2 j1 = j5^2   [6.4 squared]", b.I2sq * b.j1 - b.j5 * b.j5);
  if (p.cd.Omega.isZero()) {
    r.zero("j5 reduced form   [8.26 = 8.27]",
           b.j5 - Rat(5) * (Rat(2) * b.j1 * b.j3 + b.j2 * b.j2));
    auto pts = findSamplePoints(eq, opts.numericPoints, opts.seed + 11);
    for (const BridgeCheck& ch : verifyBridge(eq, pts, opts.precisionBits)) {
      std::string detail = ch.residual;
      if (!ch.point.empty()) detail += " at " + ch.point;
      r.out.push_back({ch.name, ch.mode, ch.pass, detail});
    }
  } else {
    r.fact("bridge identities", true, "skipped: Omega != 0 (outside scope)");
  }
}

}  // namespace

Suite suiteFromName(const std::string& name) {
  if (name == "core") return Suite::Core;
  if (name == "first-case") return Suite::FirstCase;
  if (name == "bagderina") return Suite::Bagderina;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + name);
}

std::string suiteName(Suite s) {
  switch (s) {
    case Suite::Core: return "core";
    case Suite::FirstCase: return "first-case";
    case Suite::Bagderina: return "bagderina";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<CheckResult> runSuite(const CubicODE& eq, Suite suite,
                                  const SuiteOptions& opts) {
  Runner r(opts);
  bool wantFirst = suite == Suite::FirstCase || suite == Suite::Bagderina ||
                   suite == Suite::All;
  if (suite == Suite::Core || suite == Suite::All) coreSuite(eq, r);
  if (wantFirst) {
    Verdict v = classify(eq);
    if (v.kase != Case::FirstIntermediate)
      throw std::domain_error("suite '" + suiteName(suite) +
                              "' requires the first intermediate case, got " +
                              caseName(v.kase));
    Pipeline p = buildPipeline(eq);
    if (suite != Suite::Bagderina) firstCaseSuite(p, r);
    if (suite == Suite::Bagderina || suite == Suite::All)
      bagderinaSuite(eq, p, r, opts);
  }
  return r.out;
}

std::vector<CheckResult> covarianceChecks(const CubicODE& eq, const PointMap& map) {
  std::vector<CheckResult> out;
  CubicODE push = pushforward(eq, map);
  FundamentalFields ff = fundamental(eq);
  FundamentalFields ffp = fundamental(push);

  auto gold = [&](const std::string& name, const PseudoField& orig,
                  const PseudoField& tilde) {
    bool pass = transformPseudoField(tilde, map) == orig;
    out.push_back({name, "exact", pass, pass ? "" : "transport mismatch"});
  };

  gold("alpha covector, weight 1   [2.4]", ff.alphaCov(), ffp.alphaCov());
  gold("beta covector, weight 3   [2.4]", ff.betaCov(), ffp.betaCov());
  gold("F^5 scalar, weight 5   [2.4]", PseudoField::scalar(ff.F5, 5),
       PseudoField::scalar(ffp.F5, 5));

  if (ff.F5.isZero() && !(ff.A.isZero() && ff.B.isZero())) {
    DegenerationFields df = degeneration(eq, ff);
    DegenerationFields dfp = degeneration(push, ffp);
    gold("N scalar, weight 2   [2.4]", PseudoField::scalar(df.N, 2),
         PseudoField::scalar(dfp.N, 2));
    gold("M scalar, weight 4   [2.4]", PseudoField::scalar(df.M, 4),
         PseudoField::scalar(dfp.M, 4));
    gold("gamma covector, weight 2   [2.4]", df.gammaCov, dfp.gammaCov);
    gold("Omega scalar, weight 1   [2.4]", PseudoField::scalar(df.Omega, 1),
         PseudoField::scalar(dfp.Omega, 1));
  }

  bool inv = classificationInvariance(eq, map);
  out.push_back({"classification invariance", "exact", inv,
                 inv ? "" : "verdict changed under the map"});
  return out;
}

bool allPass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace odeinv
