#include "ffrag/qrational.hpp"

#include <algorithm>

namespace ffrag {

namespace {
Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw Error(ErrorKind::Sort, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd_int(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void ZPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::constant(Int c) { return ZPoly(std::vector<Int>{std::move(c)}); }
ZPoly ZPoly::x() { return ZPoly({0, 1}); }

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (c_.empty() || o.c_.empty()) return ZPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(r));
}

Rational ZPoly::eval(const Rational& r) const {
  // homogenized: sum c_i num^i den^(deg-i), over den^deg
  if (c_.empty()) return Rational(0, 1);
  Int acc = 0, npow = 1;
  std::vector<Int> dpow(c_.size(), 1);
  for (size_t i = c_.size() - 1; i-- > 0;) dpow[i] = dpow[i + 1] * r.den;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * npow * dpow[i];
    npow *= r.num;
  }
  Int den = 1;
  for (size_t i = 1; i < c_.size(); ++i) den *= r.den;
  return Rational(acc, den);
}

bool ZPoly::is_root(const Rational& r) const { return eval(r).num == 0; }

ZPoly ZPoly::primitive() const {
  if (c_.empty()) return *this;
  Int g = 0;
  for (const Int& c : c_) g = gcd_int(g, c);
  std::vector<Int> r = c_;
  for (Int& c : r) c /= g;
  if (r.back() < 0)
    for (Int& c : r) c = -c;
  return ZPoly(std::move(r));
}

namespace {
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<Rational> rational_roots(const ZPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::Sort, "rational_roots of the zero polynomial");
  ZPoly q = p.primitive();
  // factor out x^k
  size_t k = 0;
  while (k < q.coeffs().size() && q.coeffs()[k] == 0) ++k;
  std::vector<Rational> roots;
  if (k > 0) roots.emplace_back(0, 1);
  std::vector<Int> rest(q.coeffs().begin() + k, q.coeffs().end());
  ZPoly core{std::move(rest)};
  if (core.degree() >= 1) {
    const Int& a0 = core.coeffs().front();
    const Int& an = core.coeffs().back();
    for (const Int& r : divisors(a0)) {
      for (const Int& s : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational cand(sign * r, s);
          if (core.is_root(cand)) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ZPoly term_to_zpoly(const Term& t, const std::string& var) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.name != var)
        throw Error(ErrorKind::FreeVariable, "unexpected variable '" + t.name + "'");
      return ZPoly::x();
    case Term::Kind::Const:
      if (t.name == "0.K") return ZPoly();
      if (t.name == "1.K") return ZPoly::constant(1);
      throw Error(ErrorKind::UnknownSymbol, "constant '" + t.name + "' is not a ring constant");
    case Term::Kind::App: {
      ZPoly a = term_to_zpoly(t.args[0], var);
      ZPoly b = term_to_zpoly(t.args[1], var);
      if (t.name == "+.K") return a + b;
      if (t.name == "-.K") return a - b;
      if (t.name == "*.K") return a * b;
      throw Error(ErrorKind::UnknownSymbol, "function '" + t.name + "' is not a ring symbol");
    }
  }
  throw Error(ErrorKind::Sort, "bad term");
}

}  // namespace ffrag
