#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace odeinv {

using Rat = mpq_class;
using Int = mpz_class;

/// Variable slots. Expressions from the parser only use x and y; the
/// auxiliary slots u, v exist for eliminating scalar invariants in
/// equation comparison.
enum Var : int { VarX = 0, VarY = 1, VarU = 2, VarV = 3 };
constexpr int kNumVars = 4;

std::string varName(int v);

struct Mono {
  std::array<uint32_t, kNumVars> e{};

  uint32_t total() const { return e[0] + e[1] + e[2] + e[3]; }
  bool operator==(const Mono&) const = default;
};

/// Graded-lexicographic order with x before y (then u, v). Leading
/// monomial is the glex-greatest one.
struct GlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    uint32_t ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    for (int i = 0; i < kNumVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

class RatFunc;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored coefficient is zero; iteration order is the
/// canonical glex printing order (leading term first).
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GlexGreater>;

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly variable(int var);
  static Poly term(const Mono& m, const Rat& c);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rat constantValue() const;  // requires isConstant()

  const TermMap& terms() const { return terms_; }

  int degree(int var) const;       // -1 for the zero polynomial
  int totalDegree() const;         // -1 for the zero polynomial
  bool usesVar(int var) const { return degree(var) > 0; }

  const Rat& leadingCoeff() const;  // glex leading coefficient
  const Mono& leadingMono() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(unsigned n) const;
  Poly diff(int var) const;

  /// Exact evaluation at a rational point (u, v must not occur).
  Rat eval(const Rat& x, const Rat& y) const;

  /// Evaluation in the prime field Z/p. Throws if a coefficient
  /// denominator is not invertible mod p.
  Int evalMod(const Int& x, const Int& y, const Int& p) const;

  /// Substitute rational functions for x and y (u, v must not occur).
  RatFunc compose(const RatFunc& X, const RatFunc& Y) const;

  /// Signed rational content c: *this == c * primitivePart(), where the
  /// primitive part has coprime integer coefficients and positive
  /// glex-leading coefficient. Zero polynomial has content 0.
  Rat content() const;
  Poly primitivePart() const;

  /// Coefficient of var^k, a polynomial in the remaining variables.
  Poly coeffOf(int var, int k) const;

  std::string toString() const;

  void addTerm(const Mono& m, const Rat& c);

 private:
  TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Primitive gcd (integer coefficients, positive leading coefficient)
/// via the primitive polynomial remainder sequence.
Poly polyGcd(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws std::logic_error when not divisible.
Poly divExact(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b viewed as polynomials in `var`.
Poly prem(const Poly& a, const Poly& b, int var);

/// Sylvester resultant eliminating `var`, sign-normalized so the
/// glex-leading coefficient is positive. Throws if both inputs are
/// constant in `var`.
Poly resultant(const Poly& f, const Poly& g, int var);

/// p with repeated factors stripped, primitive and sign-normalized.
Poly squarefreePart(const Poly& p);

/// p or -p, whichever has a positive glex-leading coefficient.
Poly sgnNormalized(const Poly& p);

}  // namespace odeinv
