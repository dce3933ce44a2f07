#include "ffrag/series.hpp"

#include <algorithm>
#include <cmath>

#include "ffrag/fragments.hpp"
#include "ffrag/print.hpp"

namespace ffrag {

TruncatedSeries::TruncatedSeries(uint32_t p, uint32_t prec) : p_(p), prec_(prec), c_(prec, 0) {
  if (p < 2 || prec == 0) throw Error(ErrorKind::Sort, "bad series parameters");
}

TruncatedSeries::TruncatedSeries(uint32_t p, uint32_t prec, std::vector<uint32_t> coeffs)
    : TruncatedSeries(p, prec) {
  for (uint32_t i = 0; i < prec_ && i < coeffs.size(); ++i) c_[i] = coeffs[i] % p_;
}

TruncatedSeries TruncatedSeries::constant(uint32_t p, uint32_t prec, uint32_t value) {
  TruncatedSeries s(p, prec);
  s.c_[0] = value % p;
  return s;
}

TruncatedSeries TruncatedSeries::t(uint32_t p, uint32_t prec) {
  TruncatedSeries s(p, prec);
  if (prec > 1) s.c_[1] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

std::optional<uint32_t> TruncatedSeries::valuation() const {
  for (uint32_t i = 0; i < prec_; ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

void TruncatedSeries::check_compat(const TruncatedSeries& o) const {
  if (p_ != o.p_ || prec_ != o.prec_)
    throw Error(ErrorKind::Sort, "series with different modulus or precision");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compat(o);
  TruncatedSeries r(p_, prec_);
  for (uint32_t i = 0; i < prec_; ++i) r.c_[i] = (c_[i] + o.c_[i]) % p_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compat(o);
  TruncatedSeries r(p_, prec_);
  for (uint32_t i = 0; i < prec_; ++i) r.c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compat(o);
  TruncatedSeries r(p_, prec_);
  for (uint32_t i = 0; i < prec_; ++i) {
    if (c_[i] == 0) continue;
    for (uint32_t j = 0; i + j < prec_; ++j)
      r.c_[i + j] = (r.c_[i + j] + static_cast<uint64_t>(c_[i]) * o.c_[j]) % p_;
  }
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return p_ == o.p_ && prec_ == o.prec_ && c_ == o.c_;
}

namespace {
uint32_t inv_mod(uint32_t a, uint32_t p) {
  // extended Euclid
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw Error(ErrorKind::Sort, "not invertible mod p");
  return static_cast<uint32_t>((t % p + p) % p);
}
}  // namespace

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0] == 0) throw Error(ErrorKind::Sort, "series is not a unit");
  TruncatedSeries r(p_, prec_);
  uint32_t inv0 = inv_mod(c_[0], p_);
  r.c_[0] = inv0;
  // coefficient recursion: (self * r) == 1
  for (uint32_t n = 1; n < prec_; ++n) {
    uint64_t acc = 0;
    for (uint32_t i = 1; i <= n; ++i) acc = (acc + static_cast<uint64_t>(c_[i]) * r.c_[n - i]) % p_;
    r.c_[n] = static_cast<uint32_t>((p_ - acc % p_) % p_ * inv0 % p_);
  }
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (uint32_t i = 0; i < prec_; ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]);
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries SeriesPoly::eval(const TruncatedSeries& x) const {
  if (coeff.empty()) throw Error(ErrorKind::Sort, "empty polynomial");
  TruncatedSeries acc = coeff.back();
  for (size_t i = coeff.size() - 1; i-- > 0;) acc = acc * x + coeff[i];
  return acc;
}

SeriesPoly SeriesPoly::derivative() const {
  SeriesPoly d;
  for (size_t i = 1; i < coeff.size(); ++i) {
    TruncatedSeries scaled = coeff[i] * TruncatedSeries::constant(coeff[i].p(), coeff[i].precision(),
                                                                  static_cast<uint32_t>(i));
    d.coeff.push_back(scaled);
  }
  if (d.coeff.empty())
    d.coeff.push_back(TruncatedSeries(coeff[0].p(), coeff[0].precision()));
  return d;
}

HenselResult hensel_lift(const SeriesPoly& f, uint32_t a0, uint32_t N) {
  if (f.coeff.empty()) throw Error(ErrorKind::Sort, "empty polynomial");
  uint32_t p = f.coeff[0].p();
  SeriesPoly fw;
  for (const auto& c : f.coeff)
    fw.coeff.push_back(TruncatedSeries(p, N, [&] {
      std::vector<uint32_t> cs;
      for (uint32_t i = 0; i < c.precision(); ++i) cs.push_back(c.coeff(i));
      return cs;
    }()));
  TruncatedSeries a = TruncatedSeries::constant(p, N, a0);
  TruncatedSeries r = fw.eval(a);
  if (r.coeff(0) != 0)
    throw Error(ErrorKind::NotARoot, "f(a0) != 0 mod t");
  SeriesPoly df = fw.derivative();
  if (df.eval(a).coeff(0) == 0)
    throw Error(ErrorKind::NonSimpleRoot, "f'(a0) == 0 mod t");

  int cap = static_cast<int>(std::ceil(std::log2(std::max<uint32_t>(N, 2)))) + 1;
  int steps = 0;
  while (!fw.eval(a).is_zero()) {
    if (steps >= cap)
      throw Error(ErrorKind::BudgetExceeded, "Newton iteration failed to converge");
    a = a - fw.eval(a) * df.eval(a).inverse();
    ++steps;
  }
  return {a, steps};
}

FpPoly::FpPoly(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw Error(ErrorKind::Sort, "bad modulus");
  for (auto& x : c_) x %= p_;
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = (a + b) % p_;
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = (a + p_ - b) % p_;
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (c_.empty() || o.c_.empty()) return FpPoly(p_, {});
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(c_[i]) * o.c_[j]) % p_;
  return FpPoly(p_, std::move(r));
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]);
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Term of sort K over ring symbols (plus varpi) evaluated to an exact
// polynomial, given polynomial values for the variables.
FpPoly eval_term_poly(const Term& t, uint32_t p, const std::map<std::string, FpPoly>& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end())
        throw Error(ErrorKind::FreeVariable, "unbound variable '" + t.name + "'");
      return it->second;
    }
    case Term::Kind::Const:
      if (t.name == "0.K") return FpPoly(p, {});
      if (t.name == "1.K") return FpPoly(p, {1});
      if (t.name == "varpi") return FpPoly(p, {0, 1});
      throw Error(ErrorKind::NotExistential, "atom is not a ring-of-K polynomial");
    case Term::Kind::App: {
      FpPoly a = eval_term_poly(t.args[0], p, env);
      FpPoly b = eval_term_poly(t.args[1], p, env);
      if (t.name == "+.K") return a + b;
      if (t.name == "-.K") return a - b;
      if (t.name == "*.K") return a * b;
      throw Error(ErrorKind::NotExistential, "atom is not a ring-of-K polynomial");
    }
  }
  throw Error(ErrorKind::NotExistential, "bad term");
}

// Exact truth value of a quantifier-free body at polynomial witnesses; atoms
// are equalities in F_p[t], which sits inside F_p((t)).
std::optional<bool> eval_body(const Formula& f, uint32_t p,
                              const std::map<std::string, FpPoly>& env) {
  switch (f.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Eq: {
      try {
        return eval_term_poly(f.terms[0], p, env) == eval_term_poly(f.terms[1], p, env);
      } catch (const Error&) {
        return std::nullopt;  // non-polynomial atom
      }
    }
    case Formula::Kind::Rel: return std::nullopt;
    case Formula::Kind::Not: {
      auto v = eval_body(f.kids[0], p, env);
      if (!v) return std::nullopt;
      return !*v;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      auto a = eval_body(f.kids[0], p, env);
      auto b = eval_body(f.kids[1], p, env);
      if (!a || !b) return std::nullopt;
      switch (f.kind) {
        case Formula::Kind::And: return *a && *b;
        case Formula::Kind::Or: return *a || *b;
        case Formula::Kind::Implies: return !*a || *b;
        default: return *a == *b;
      }
    }
    default: return std::nullopt;
  }
}

struct LeafSearch {
  uint32_t p;
  uint32_t D;
  uint64_t max_tuples;

  // Enumerates polynomial tuples for the block variables in a fixed odometer
  // order and returns the first witness making the body true.
  std::optional<std::map<std::string, FpPoly>> search(const Formula& leaf) {
    std::vector<std::pair<std::string, std::string>> vars;
    const Formula* cur = &leaf;
    while (cur->kind == Formula::Kind::Exists) {
      vars.emplace_back(cur->name, cur->sort);
      cur = &cur->kids[0];
    }
    const Formula& body = *cur;
    for (const auto& v : vars)
      if (v.second != "K") return std::nullopt;

    size_t nv = vars.size();
    if (nv == 0) {
      std::map<std::string, FpPoly> env;
      auto v = eval_body(body, p, env);
      if (v && *v) return env;
      return std::nullopt;
    }
    std::vector<std::vector<uint32_t>> coeffs(nv, std::vector<uint32_t>(D + 1, 0));
    uint64_t visited = 0;
    while (true) {
      if (++visited > max_tuples) return std::nullopt;
      std::map<std::string, FpPoly> env;
      for (size_t i = 0; i < nv; ++i) env[vars[i].first] = FpPoly(p, coeffs[i]);
      auto v = eval_body(body, p, env);
      if (v && *v) return env;
      // odometer over all coefficients
      size_t vi = 0, ci = 0;
      while (vi < nv) {
        if (++coeffs[vi][ci] < p) break;
        coeffs[vi][ci] = 0;
        if (++ci > D) {
          ci = 0;
          ++vi;
        }
      }
      if (vi == nv) return std::nullopt;
    }
  }
};

// Recursive Found-search over the and/or skeleton.
std::optional<std::map<std::string, FpPoly>> found_search(const Formula& f, LeafSearch& ls) {
  if (f.kind == Formula::Kind::And) {
    auto a = found_search(f.kids[0], ls);
    if (!a) return std::nullopt;
    auto b = found_search(f.kids[1], ls);
    if (!b) return std::nullopt;
    a->insert(b->begin(), b->end());
    return a;
  }
  if (f.kind == Formula::Kind::Or) {
    if (auto a = found_search(f.kids[0], ls)) return a;
    return found_search(f.kids[1], ls);
  }
  if (f.kind == Formula::Kind::True) return std::map<std::string, FpPoly>{};
  if (f.kind == Formula::Kind::False) return std::nullopt;
  return ls.search(f);
}

// f as a univariate polynomial in `var` with FpPoly coefficients.
std::optional<std::vector<FpPoly>> term_as_uni(const Term& t, uint32_t p, const std::string& var) {
  auto lift0 = [&](FpPoly c) {
    return std::vector<FpPoly>{std::move(c)};
  };
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.name != var) return std::nullopt;
      return std::vector<FpPoly>{FpPoly(p, {}), FpPoly(p, {1})};
    case Term::Kind::Const:
      if (t.name == "0.K") return lift0(FpPoly(p, {}));
      if (t.name == "1.K") return lift0(FpPoly(p, {1}));
      if (t.name == "varpi") return lift0(FpPoly(p, {0, 1}));
      return std::nullopt;
    case Term::Kind::App: {
      auto a = term_as_uni(t.args[0], p, var);
      auto b = term_as_uni(t.args[1], p, var);
      if (!a || !b) return std::nullopt;
      size_t na = a->size(), nb = b->size();
      if (t.name == "+.K" || t.name == "-.K") {
        std::vector<FpPoly> r(std::max(na, nb), FpPoly(p, {}));
        for (size_t i = 0; i < r.size(); ++i) {
          FpPoly x = i < na ? (*a)[i] : FpPoly(p, {});
          FpPoly y = i < nb ? (*b)[i] : FpPoly(p, {});
          r[i] = t.name == "+.K" ? x + y : x - y;
        }
        return r;
      }
      if (t.name == "*.K") {
        std::vector<FpPoly> r(na + nb - 1, FpPoly(p, {}));
        for (size_t i = 0; i < na; ++i)
          for (size_t j = 0; j < nb; ++j) r[i + j] = r[i + j] + (*a)[i] * (*b)[j];
        return r;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

WitnessSearchResult laurent_witness_search(const Sentence& phi, uint32_t p, uint32_t degree_bound,
                                           uint32_t precision, WitnessSearchOptions opts) {
  Membership m = classify(phi);
  if (!m.exists)
    throw Error(ErrorKind::NotExistential, "witness search needs an existential sentence");

  LeafSearch ls{p, degree_bound, opts.max_tuples};
  if (auto w = found_search(phi, ls)) {
    WitnessSearchResult r;
    r.status = WitnessStatus::Found;
    r.witnesses = std::move(*w);
    std::string ev = "exact polynomial witnesses:";
    for (const auto& [k, v] : r.witnesses) ev += " " + k + "=" + v.to_string();
    r.evidence = ev;
    return r;
  }

  // Hensel certification for the shape "exists x, s = t" with f = s - t a
  // univariate polynomial over F_p[t] admitting a simple residue root.
  if (phi.kind == Formula::Kind::Exists && phi.kids[0].kind == Formula::Kind::Eq &&
      phi.sort == "K") {
    const Formula& eq = phi.kids[0];
    auto lhs = term_as_uni(eq.terms[0], p, phi.name);
    auto rhs = term_as_uni(eq.terms[1], p, phi.name);
    if (lhs && rhs) {
      size_t deg = std::max(lhs->size(), rhs->size());
      std::vector<FpPoly> fc(deg, FpPoly(p, {}));
      for (size_t i = 0; i < deg; ++i) {
        FpPoly a = i < lhs->size() ? (*lhs)[i] : FpPoly(p, {});
        FpPoly b = i < rhs->size() ? (*rhs)[i] : FpPoly(p, {});
        fc[i] = a - b;
      }
      // residue polynomial and its derivative over F_p
      for (uint32_t a0 = 0; a0 < p; ++a0) {
        uint64_t val = 0, dval = 0, xpow = 1;
        for (size_t i = 0; i < fc.size(); ++i) {
          uint32_t ci = fc[i].coeffs().empty() ? 0 : fc[i].coeffs()[0];
          val = (val + ci * xpow) % p;
          xpow = xpow * a0 % p;
        }
        xpow = 1;
        for (size_t i = 1; i < fc.size(); ++i) {
          uint32_t ci = fc[i].coeffs().empty() ? 0 : fc[i].coeffs()[0];
          dval = (dval + static_cast<uint64_t>(i % p) * ci % p * xpow) % p;
          xpow = xpow * a0 % p;
        }
        if (val == 0 && dval != 0) {
          SeriesPoly sp;
          for (const auto& c : fc) {
            std::vector<uint32_t> cs = c.coeffs();
            sp.coeff.push_back(TruncatedSeries(p, precision, cs));
          }
          HenselResult h = hensel_lift(sp, a0, precision);
          WitnessSearchResult r;
          r.status = WitnessStatus::CertifiedByHensel;
          r.evidence = "simple residue root " + std::to_string(a0) + "; lift mod t^" +
                       std::to_string(precision) + " = " + h.root.to_string();
          return r;
        }
      }
    }
  }

  WitnessSearchResult r;
  r.status = WitnessStatus::Unknown;
  r.evidence = "no polynomial witness of degree <= " + std::to_string(degree_bound) +
               " and no simple residue root found";
  return r;
}

}  // namespace ffrag
