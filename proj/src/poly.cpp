#include "odeinv/poly.hpp"

#include <sstream>

#include "odeinv/ratfunc.hpp"

namespace odeinv {

std::string varName(int v) {
  static const char* names[kNumVars] = {"x", "y", "u", "v"};
  return names[v];
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

Poly Poly::variable(int var) {
  Mono m;
  m.e[var] = 1;
  return term(m, Rat(1));
}

Poly Poly::term(const Mono& m, const Rat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

void Poly::addTerm(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rat Poly::constantValue() const {
  if (terms_.empty()) return Rat(0);
  if (!isConstant()) throw std::logic_error("Poly::constantValue on non-constant");
  return terms_.begin()->second;
}

int Poly::degree(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.total());
}

const Rat& Poly::leadingCoeff() const {
  if (terms_.empty()) throw std::logic_error("leadingCoeff of zero");
  return terms_.begin()->second;
}

const Mono& Poly::leadingMono() const {
  if (terms_.empty()) throw std::logic_error("leadingMono of zero");
  return terms_.begin()->first;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.addTerm(m, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r(Rat(1));
  Poly base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Poly Poly::diff(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Mono d = m;
    d.e[var] -= 1;
    r.addTerm(d, c * Rat(static_cast<long>(m.e[var])));
  }
  return r;
}

Rat Poly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    if (m.e[VarU] || m.e[VarV]) throw std::logic_error("eval with u/v present");
    Rat t = c;
    for (uint32_t i = 0; i < m.e[VarX]; ++i) t *= x;
    for (uint32_t i = 0; i < m.e[VarY]; ++i) t *= y;
    acc += t;
  }
  return acc;
}

namespace {
Int powMod(Int base, unsigned long e, const Int& p) {
  Int r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, p.get_mpz_t());
  return r;
}
}  // namespace

Int Poly::evalMod(const Int& x, const Int& y, const Int& p) const {
  Int acc(0);
  for (const auto& [m, c] : terms_) {
    if (m.e[VarU] || m.e[VarV]) throw std::logic_error("evalMod with u/v present");
    Int den = c.get_den();
    Int deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("coefficient denominator not invertible mod p");
    Int t = (c.get_num() % p) * deninv % p;
    t = t * powMod(x % p, m.e[VarX], p) % p;
    t = t * powMod(y % p, m.e[VarY], p) % p;
    acc = (acc + t) % p;
  }
  return (acc % p + p) % p;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num(0), den(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat c(num, den);
  c.canonicalize();
  if (leadingCoeff() < 0) c = -c;
  return c;
}

Poly Poly::primitivePart() const {
  if (terms_.empty()) return Poly();
  Rat c = content();
  Poly r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef / c);
  return r;
}

Poly Poly::coeffOf(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.e[var]) != k) continue;
    Mono d = m;
    d.e[var] = 0;
    r.addTerm(d, c);
  }
  return r;
}

std::string Poly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool hasVars = m.total() > 0;
    if (a != 1 || !hasVars) {
      os << a.get_str();
      if (hasVars) os << "*";
    }
    bool firstVar = true;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.e[v] == 0) continue;
      if (!firstVar) os << "*";
      firstVar = false;
      os << varName(v);
      if (m.e[v] > 1) os << "^" << m.e[v];
    }
  }
  return os.str();
}

Poly divExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::logic_error("divExact by zero");
  Poly rem = a, q;
  const Mono& lmB = b.leadingMono();
  const Rat& lcB = b.leadingCoeff();
  while (!rem.isZero()) {
    const Mono& lmR = rem.leadingMono();
    Mono d;
    for (int i = 0; i < kNumVars; ++i) {
      if (lmR.e[i] < lmB.e[i]) throw std::logic_error("divExact: not divisible");
      d.e[i] = lmR.e[i] - lmB.e[i];
    }
    Rat c = rem.leadingCoeff() / lcB;
    Poly t = Poly::term(d, c);
    q += t;
    rem -= t * b;
  }
  return q;
}

Poly prem(const Poly& a, const Poly& b, int var) {
  int db = b.degree(var);
  if (db < 0) throw std::logic_error("prem by zero");
  Poly lcB = b.coeffOf(var, db);
  Poly r = a;
  int dr = r.degree(var);
  while (!r.isZero() && dr >= db) {
    Poly lcR = r.coeffOf(var, dr);
    Mono shift;
    shift.e[var] = static_cast<uint32_t>(dr - db);
    r = r * lcB - b * (lcR * Poly::term(shift, Rat(1)));
    int nd = r.degree(var);
    if (nd >= dr && !r.isZero()) throw std::logic_error("prem: no degree decrease");
    dr = nd;
  }
  return r;
}

namespace {

// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly contentIn(const Poly& p, int var) {
  Poly c;
  for (int k = 0; k <= p.degree(var); ++k) {
    Poly ck = p.coeffOf(var, k);
    if (!ck.isZero()) c = polyGcd(c, ck);
  }
  return c;
}

int pickMainVar(const Poly& a, const Poly& b) {
  for (int v = 0; v < kNumVars; ++v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

Int intGcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero()) return b.isZero() ? Poly() : b.primitivePart();
  if (b.isZero()) return a.primitivePart();
  Poly A = a.primitivePart(), B = b.primitivePart();
  int v = pickMainVar(A, B);
  if (v < 0) {
    // Both constants; primitive parts are 1.
    Int g = intGcd(A.constantValue().get_num(), B.constantValue().get_num());
    return Poly(Rat(g));
  }
  Poly ca = contentIn(A, v), cb = contentIn(B, v);
  Poly c = polyGcd(ca, cb);
  A = divExact(A, ca);
  B = divExact(B, cb);
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  while (!B.isZero()) {
    Poly r = prem(A, B, v);
    A = B;
    if (r.isZero()) {
      B = Poly();
    } else {
      B = divExact(r, contentIn(r, v)).primitivePart();
    }
  }
  return (c * A.primitivePart()).primitivePart();
}

Poly resultant(const Poly& f, const Poly& g, int var) {
  int n = f.degree(var), m = g.degree(var);
  if (n <= 0 && m <= 0)
    throw std::domain_error("resultant: both inputs constant in " + varName(var));
  if (f.isZero() || g.isZero()) return Poly();
  if (n == 0) return sgnNormalized(f.pow(static_cast<unsigned>(m)));
  if (m == 0) return sgnNormalized(g.pow(static_cast<unsigned>(n)));

  // Sylvester matrix, fraction-free Bareiss elimination.
  int size = n + m;
  std::vector<std::vector<Poly>> M(size, std::vector<Poly>(size));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[r][r + n - k] = f.coeffOf(var, k);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[m + r][r + m - k] = g.coeffOf(var, k);

  Poly prev(Rat(1));
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k].isZero()) {
      int piv = -1;
      for (int i = k + 1; i < size; ++i)
        if (!M[i][k].isZero()) { piv = i; break; }
      if (piv < 0) return Poly();
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        M[i][j] = divExact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly();
    }
    prev = M[k][k];
  }
  Poly det = M[size - 1][size - 1];
  if (sign < 0) det = -det;
  return sgnNormalized(det);
}

Poly sgnNormalized(const Poly& p) {
  if (p.isZero()) return p;
  return p.leadingCoeff() < 0 ? -p : p;
}

Poly squarefreePart(const Poly& p) {
  if (p.isZero()) return p;
  Poly r = p.primitivePart();
  for (int v = 0; v < kNumVars; ++v) {
    if (r.degree(v) <= 0) continue;
    Poly g = polyGcd(r, r.diff(v));
    r = divExact(r, g).primitivePart();
  }
  return r;
}

}  // namespace odeinv
