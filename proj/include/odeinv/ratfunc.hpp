#pragma once

#include <optional>
#include <string>

#include "odeinv/poly.hpp"

namespace odeinv {

/// Reduced ratio of two polynomials. Canonical form: gcd(num, den) is a
/// unit, den has coprime integer coefficients with positive glex-leading
/// coefficient (the rational content lives in num), and the zero function
/// is 0/1. Two equal values always have identical representations, so
/// operator== is structural.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}
  explicit RatFunc(const Poly& p) : num_(p), den_(Rat(1)) { normalize(); }
  RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

  static RatFunc variable(int var) { return RatFunc(Poly::variable(var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
  Rat constantValue() const { return num_.constantValue() / den_.constantValue(); }
  bool isPolynomial() const { return den_.isConstant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on division by zero function
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc pow(long n) const;  // negative n inverts; throws on 0^-n
  RatFunc diff(int var) const;

  /// Exact value at a rational point; throws std::domain_error at poles.
  Rat eval(const Rat& x, const Rat& y) const;

  /// Value in Z/p; throws std::domain_error when the denominator
  /// vanishes mod p (caller resamples) and when a coefficient
  /// denominator is not invertible (caller changes prime).
  Int evalMod(const Int& x, const Int& y, const Int& p) const;

  /// Substitute rational functions for x and y.
  RatFunc compose(const RatFunc& X, const RatFunc& Y) const;

  std::string toString() const;

 private:
  void normalize();

  Poly num_, den_;
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c) * f; }
inline RatFunc operator+(const Rat& c, const RatFunc& f) { return RatFunc(c) + f; }
inline RatFunc operator-(const Rat& c, const RatFunc& f) { return RatFunc(c) - f; }

}  // namespace odeinv
