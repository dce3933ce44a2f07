#include "ffrag/oracle.hpp"

#include <vector>

#include "ffrag/fragments.hpp"
#include "ffrag/model.hpp"
#include "ffrag/print.hpp"
#include "ffrag/qrational.hpp"

namespace ffrag {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Soundness s) {
  switch (s) {
    case Soundness::Exact: return "exact";
    case Soundness::RefutationSound: return "refutation-sound";
    case Soundness::WitnessSound: return "witness-sound";
  }
  return "exact";
}

OracleAnswer decide_finite_field(uint64_t p, const Sentence& s) {
  StructurePtr f = prime_field(p);  // throws NotPrime
  bool v = evaluate(*f, s);
  return {v ? Verdict::Yes : Verdict::No, Soundness::Exact,
          "exhaustive evaluation in F_" + std::to_string(p)};
}

namespace {

struct QLiteral {
  ZPoly poly;
  bool equal;  // poly == 0 vs poly != 0
};

// NNF-expands the quantifier-free body into DNF over polynomial literals.
// "var" may be empty for ground bodies; any other variable is an error.
std::vector<std::vector<QLiteral>> to_dnf(const Formula& f, const std::string& var, bool neg) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True:
      if (!neg) return {{}};  // one empty (always-true) disjunct
      return {};              // no disjuncts: false
    case K::False:
      return neg ? std::vector<std::vector<QLiteral>>{{}} : std::vector<std::vector<QLiteral>>{};
    case K::Eq: {
      ZPoly p = term_to_zpoly(f.terms[0], var) - term_to_zpoly(f.terms[1], var);
      return {{QLiteral{std::move(p), !neg}}};
    }
    case K::Not:
      return to_dnf(f.kids[0], var, !neg);
    case K::And:
    case K::Or: {
      bool conj = (f.kind == K::And) != neg;  // de Morgan
      auto a = to_dnf(f.kids[0], var, neg);
      auto b = to_dnf(f.kids[1], var, neg);
      if (!conj) {
        for (auto& d : b) a.push_back(std::move(d));
        return a;
      }
      std::vector<std::vector<QLiteral>> out;
      for (const auto& da : a)
        for (const auto& db : b) {
          std::vector<QLiteral> d = da;
          d.insert(d.end(), db.begin(), db.end());
          out.push_back(std::move(d));
        }
      return out;
    }
    case K::Implies: {
      // a -> b == !a || b
      Formula equiv = f_or(f_not(f.kids[0]), f.kids[1]);
      return to_dnf(equiv, var, neg);
    }
    case K::Iff: {
      Formula equiv = f_or(f_and(f.kids[0], f.kids[1]), f_and(f_not(f.kids[0]), f_not(f.kids[1])));
      return to_dnf(equiv, var, neg);
    }
    default:
      throw Error(ErrorKind::BudgetExceeded, "nested quantifier in leaf body");
  }
}

bool satisfied_at(const std::vector<QLiteral>& disjunct, const Rational& r) {
  for (const QLiteral& lit : disjunct) {
    bool zero = lit.poly.is_zero() || lit.poly.is_root(r);
    if (lit.equal != zero) return false;
  }
  return true;
}

// Satisfiability over Q of one disjunct in a single variable.
bool disjunct_satisfiable(const std::vector<QLiteral>& disjunct, std::string* evidence) {
  std::vector<const ZPoly*> equations;
  for (const QLiteral& lit : disjunct) {
    if (lit.equal) {
      if (lit.poly.is_zero()) continue;  // 0 = 0, no constraint
      if (lit.poly.degree() == 0) return false;
      equations.push_back(&lit.poly);
    } else {
      if (lit.poly.is_zero()) return false;  // 0 != 0
      // nonzero: either a nonzero constant (always true) or excludes roots
    }
  }
  if (!equations.empty()) {
    for (const Rational& cand : rational_roots(*equations[0])) {
      if (satisfied_at(disjunct, cand)) {
        if (evidence) *evidence = "witness x = " + cand.to_string();
        return true;
      }
    }
    return false;
  }
  // only disequalities: finitely many excluded points in an infinite field,
  // but a witness must still avoid them all
  std::vector<Rational> excluded;
  for (const QLiteral& lit : disjunct)
    if (!lit.equal && lit.poly.degree() >= 1)
      for (const Rational& r : rational_roots(lit.poly)) excluded.push_back(r);
  for (Int k = 0;; ++k) {
    Rational cand(k, 1);
    if (satisfied_at(disjunct, cand)) {
      if (evidence) *evidence = "witness x = " + cand.to_string() + " (Q avoids finitely many points)";
      return true;
    }
    if (k > Int(excluded.size()) + 1)
      throw Error(ErrorKind::Sort, "disequational disjunct with no integer witness");
  }
}

Verdict decide_leaf(const Formula& leaf) {
  std::string var;
  const Formula* body = &leaf;
  if (leaf.kind == Formula::Kind::Exists) {
    var = leaf.name;
    body = &leaf.kids[0];
    if (body->is_quantifier())
      throw Error(ErrorKind::BudgetExceeded, "leaf has more than one quantifier");
    if (leaf.sort != "K") throw Error(ErrorKind::Sort, "quantifier over non-ring sort");
  }
  auto dnf = to_dnf(*body, var, false);
  for (const auto& d : dnf)
    if (disjunct_satisfiable(d, nullptr)) return Verdict::Yes;
  return Verdict::No;
}

Verdict decide_q(const Formula& f) {
  // Th(Q) is complete: conjunction and disjunction split leaf-by-leaf.
  switch (f.kind) {
    case Formula::Kind::True: return Verdict::Yes;
    case Formula::Kind::False: return Verdict::No;
    case Formula::Kind::And: {
      Verdict a = decide_q(f.kids[0]);
      if (a == Verdict::No) return Verdict::No;
      return decide_q(f.kids[1]);
    }
    case Formula::Kind::Or: {
      Verdict a = decide_q(f.kids[0]);
      if (a == Verdict::Yes) return Verdict::Yes;
      return decide_q(f.kids[1]);
    }
    default:
      return decide_leaf(f);
  }
}

}  // namespace

OracleAnswer decide_exists1_Q(const Sentence& s) {
  Membership m = classify(s);
  if (!m.exists)
    throw Error(ErrorKind::NotExistential, "not an existential sentence");
  if (m.exists_budget > 1)
    throw Error(ErrorKind::BudgetExceeded,
                "a prenex leaf has " + std::to_string(m.exists_budget) + " quantifiers");
  Verdict v = decide_q(s);
  return {v, Soundness::Exact, "rational root theorem over primitive integer polynomials"};
}

OracleAnswer bounded_prime_check(const Sentence& s, uint64_t bound) {
  if (bound < 2) throw Error(ErrorKind::Usage, "prime bound must be at least 2");
  std::vector<bool> sieve(bound + 1, true);
  for (uint64_t p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    for (uint64_t q = p * p; q <= bound; q += p) sieve[q] = false;
    StructurePtr f = zmod(p);
    if (!evaluate(*f, s))
      return {Verdict::No, Soundness::RefutationSound,
              "refuted in F_" + std::to_string(p)};
  }
  return {Verdict::Unknown, Soundness::RefutationSound,
          "holds for all primes p <= " + std::to_string(bound)};
}

}  // namespace ffrag
