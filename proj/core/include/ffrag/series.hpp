#ifndef FFRAG_SERIES_HPP
#define FFRAG_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"

namespace ffrag {

// An element of F_p[t]/(t^N): coefficients c[0..N-1] reduced mod p.
class TruncatedSeries {
 public:
  TruncatedSeries(uint32_t p, uint32_t prec);
  TruncatedSeries(uint32_t p, uint32_t prec, std::vector<uint32_t> coeffs);

  uint32_t p() const { return p_; }
  uint32_t precision() const { return prec_; }
  uint32_t coeff(uint32_t i) const { return i < prec_ ? c_[i] : 0; }

  static TruncatedSeries constant(uint32_t p, uint32_t prec, uint32_t value);
  static TruncatedSeries t(uint32_t p, uint32_t prec);

  bool is_zero() const;
  // t-adic order; nullopt for the zero series (order >= precision).
  std::optional<uint32_t> valuation() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const;

  // Multiplicative inverse; requires a unit (nonzero constant term).
  TruncatedSeries inverse() const;

  std::string to_string() const;  // e.g. "1+2t+t^2"

 private:
  void check_compat(const TruncatedSeries& o) const;
  uint32_t p_;
  uint32_t prec_;
  std::vector<uint32_t> c_;
};

// A univariate polynomial with TruncatedSeries coefficients.
struct SeriesPoly {
  std::vector<TruncatedSeries> coeff;  // coeff[i] multiplies x^i

  TruncatedSeries eval(const TruncatedSeries& x) const;
  SeriesPoly derivative() const;
};

struct HenselResult {
  TruncatedSeries root;
  int newton_steps;
};

// Lifts a simple residue root a0 of f to a root mod (p, t^N) by Newton
// iteration with quadratic convergence: step count <= ceil(log2 N) + 1.
// Throws NotARoot if f(a0) != 0 mod t, NonSimpleRoot if f'(a0) == 0 mod t.
HenselResult hensel_lift(const SeriesPoly& f, uint32_t a0, uint32_t N);

// Exact polynomials F_p[t] used as witness values.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(uint32_t p, std::vector<uint32_t> coeffs);
  uint32_t p() const { return p_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  void normalize();
  uint32_t p_ = 2;
  std::vector<uint32_t> c_;
};

enum class WitnessStatus { Found, CertifiedByHensel, Unknown };

struct WitnessSearchResult {
  WitnessStatus status = WitnessStatus::Unknown;
  std::map<std::string, FpPoly> witnesses;  // variable -> polynomial, when Found
  std::string evidence;
};

struct WitnessSearchOptions {
  uint64_t max_tuples = 1 << 20;  // cap on witness tuples per prenex leaf
};

// Bounded witness search over F_p((t)) for an existential sentence whose
// atoms are polynomial (dis)equalities over the ring symbols of sort K, with
// the constant varpi (when present) read as t. Found answers exhibit
// polynomial witnesses making every equality an exact identity and every
// disequality exact; CertifiedByHensel applies to the shape "exists x, f=0"
// with a simple residue root. Never claims falsity.
WitnessSearchResult laurent_witness_search(const Sentence& phi, uint32_t p, uint32_t degree_bound,
                                           uint32_t precision,
                                           WitnessSearchOptions opts = {});

}  // namespace ffrag

#endif  // FFRAG_SERIES_HPP
