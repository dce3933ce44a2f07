#ifndef FFRAG_QRATIONAL_HPP
#define FFRAG_QRATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"

namespace ffrag {

using Int = boost::multiprecision::cpp_int;

struct Rational {
  Int num = 0;
  Int den = 1;  // always > 0, gcd(num, den) = 1

  Rational() = default;
  Rational(Int n, Int d);
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  std::string to_string() const;
};

// Integer polynomial, coefficient of x^i at c[i], no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs);
  static ZPoly constant(Int c);
  static ZPoly x();

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  // Exact evaluation at num/den.
  Rational eval(const Rational& r) const;
  bool is_root(const Rational& r) const;

  // content-free part with positive leading coefficient
  ZPoly primitive() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

// All rational roots, by the rational root theorem applied to the primitive
// part: roots r/s in lowest terms need r | a_0 and s | a_n. Sorted ascending.
// Must not be called on the zero polynomial.
std::vector<Rational> rational_roots(const ZPoly& p);

// Interprets a ring term as an integer polynomial in the single variable
// `var` (all other variables are rejected with FreeVariable).
ZPoly term_to_zpoly(const Term& t, const std::string& var);

}  // namespace ffrag

#endif  // FFRAG_QRATIONAL_HPP
