#include "odeinv/ratfunc.hpp"

#include <sstream>

namespace odeinv {

void RatFunc::normalize() {
  if (den_.isZero()) throw std::domain_error("division by the zero function");
  if (num_.isZero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = polyGcd(num_, den_);
  if (!(g.isConstant() && g.constantValue() == 1)) {
    num_ = divExact(num_, g);
    den_ = divExact(den_, g);
  }
  Rat c = den_.content();
  if (c != 1) {
    Rat inv = 1 / c;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long n) const {
  if (n == 0) return RatFunc(Rat(1));
  bool inv = n < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  RatFunc r;
  if (inv) {
    if (isZero()) throw std::domain_error("zero function to a negative power");
    r = RatFunc(den_.pow(k), num_.pow(k));
  } else {
    r = RatFunc(num_.pow(k), den_.pow(k));
  }
  return r;
}

RatFunc RatFunc::diff(int var) const {
  // quotient rule; the constructor reduces
  return RatFunc(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

Rat RatFunc::eval(const Rat& x, const Rat& y) const {
  Rat d = den_.eval(x, y);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return num_.eval(x, y) / d;
}

Int RatFunc::evalMod(const Int& x, const Int& y, const Int& p) const {
  Int d = den_.evalMod(x, y, p);
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  Int dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  return num_.evalMod(x, y, p) * dinv % p;
}

RatFunc RatFunc::compose(const RatFunc& X, const RatFunc& Y) const {
  return num_.compose(X, Y) / den_.compose(X, Y);
}

std::string RatFunc::toString() const {
  if (isPolynomial()) {
    Rat d = den_.constantValue();
    return (num_ * (1 / d)).toString();
  }
  // Print with integer numerator coefficients, e.g. 1/3 over y as 1/(3*y).
  Int q(1);
  for (const auto& [m, c] : num_.terms())
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), c.get_den().get_mpz_t());
  Poly pn = num_ * Rat(q), pd = den_ * Rat(q);
  std::ostringstream os;
  if (pn.terms().size() > 1)
    os << "(" << pn.toString() << ")";
  else
    os << pn.toString();
  os << "/(" << pd.toString() << ")";
  return os.str();
}

// Poly::compose lives here so poly.cpp does not depend on RatFunc.
RatFunc Poly::compose(const RatFunc& X, const RatFunc& Y) const {
  RatFunc acc(Rat(0));
  std::vector<RatFunc> px{RatFunc(Rat(1))}, py{RatFunc(Rat(1))};
  auto powCached = [](std::vector<RatFunc>& cache, const RatFunc& base, uint32_t e) {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    if (m.e[VarU] || m.e[VarV]) throw std::logic_error("compose with u/v present");
    acc += RatFunc(c) * powCached(px, X, m.e[VarX]) * powCached(py, Y, m.e[VarY]);
  }
  return acc;
}

}  // namespace odeinv
