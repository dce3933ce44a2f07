#include "ffrag/toy.hpp"

#include <algorithm>

#include "ffrag/print.hpp"

namespace ffrag {

namespace {

std::vector<std::string> atom_names(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back("r" + std::to_string(i));
  return names;
}

// atom index (1-based) of a relation name "rN", 0 if not an atom
int atom_of(const std::string& name) {
  if (name.size() < 2 || name[0] != 'r') return 0;
  int n = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
    n = n * 10 + (name[i] - '0');
  }
  return n;
}

// evaluates under the assignment "atom i true iff bit (i-1) set"
bool eval_mask(const Formula& f, uint64_t mask) {
  switch (f.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Rel: {
      int n = atom_of(f.name);
      if (n == 0) throw Error(ErrorKind::SignatureMismatch, "not a toy atom: " + f.name);
      return (mask >> (n - 1)) & 1;
    }
    case Formula::Kind::Not: return !eval_mask(f.kids[0], mask);
    case Formula::Kind::And: return eval_mask(f.kids[0], mask) && eval_mask(f.kids[1], mask);
    case Formula::Kind::Or: return eval_mask(f.kids[0], mask) || eval_mask(f.kids[1], mask);
    case Formula::Kind::Implies: return !eval_mask(f.kids[0], mask) || eval_mask(f.kids[1], mask);
    case Formula::Kind::Iff: return eval_mask(f.kids[0], mask) == eval_mask(f.kids[1], mask);
    default:
      throw Error(ErrorKind::SignatureMismatch, "quantifier in propositional sentence");
  }
}

}  // namespace

ToyInstance::ToyInstance(int window, int guard) : window_(window), guard_(guard) {
  if (window < 1) throw Error(ErrorKind::Usage, "toy window must be at least 1");
  sig_ = std::make_shared<Signature>(propositional_signature(atom_names(window + guard)));
}

Sentence ToyInstance::atom(int n) const {
  if (n < 1 || n > atom_count())
    throw Error(ErrorKind::EnumerationLimit,
                "toy atom index " + std::to_string(n) + " beyond window+guard");
  return f_rel(*sig_, "r" + std::to_string(n), {});
}

Sentence ToyInstance::rho(int n) const { return atom(n); }
Sentence ToyInstance::not_rho(int n) const { return f_not(atom(n)); }

bool ToyInstance::in_language(const Sentence& s) const {
  switch (s.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Rel:
      return atom_of(s.name) >= 1 && atom_of(s.name) <= atom_count();
    case Formula::Kind::Not:
      return s.kids[0].kind == Formula::Kind::Rel && in_language(s.kids[0]);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return in_language(s.kids[0]) && in_language(s.kids[1]);
    default:
      return false;
  }
}

int ToyInstance::max_index(const Sentence& s) const {
  switch (s.kind) {
    case Formula::Kind::Rel: return atom_of(s.name);
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      int m = 0;
      for (const Formula& k : s.kids) m = std::max(m, max_index(k));
      return m;
    }
    default: return 0;
  }
}

bool ToyInstance::in_sigma(const Sentence& s) const {
  int m = max_index(s);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask)
    if (!eval_mask(s, mask)) return false;
  return true;
}

bool ToyInstance::in_sigma0(const Sentence& s) const {
  int m = max_index(s);
  return eval_mask(s, (uint64_t{1} << m) - 1);  // all mentioned atoms true
}

bool ToyInstance::in_sigma_n(const Sentence& s, int n) const {
  if (n < 1) throw Error(ErrorKind::Usage, "stratum index must be >= 1");
  int m = max_index(s);
  // assignments consistent with r_i = 1 (i < n), r_n = 0; unmentioned atoms
  // do not affect s
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    bool consistent = true;
    for (int i = 1; i <= m; ++i) {
      bool bit = (mask >> (i - 1)) & 1;
      if (i < n && !bit) consistent = false;
      if (i == n && bit) consistent = false;
    }
    if (consistent && !eval_mask(s, mask)) return false;
  }
  return true;
}

bool ToyInstance::in_sigma_pos(const Sentence& s) const {
  int m = max_index(s);
  for (int n = 1; n <= m + 2; ++n)
    if (!in_sigma_n(s, n)) return false;
  return true;
}

bool ToyInstance::in_sigma_inf(const Sentence& s) const {
  // membership in Sigma_n is constant for n > max_index + 1; read the
  // stabilized value two indices past the window
  return in_sigma_n(s, max_index(s) + 2);
}

ToyOracleFamily toy_oracles(std::shared_ptr<const ToyInstance> inst) {
  auto check = [inst](const Sentence& s) {
    if (!inst->in_language(s))
      throw Error(ErrorKind::SignatureMismatch,
                  "not a toy language sentence: " + print_canonical(s));
  };
  ToyOracleFamily fam;
  fam.sigma = [inst, check](const Sentence& s) -> OracleAnswer {
    check(s);
    return {inst->in_sigma(s) ? Verdict::Yes : Verdict::No, Soundness::Exact, "truth table"};
  };
  fam.sigma0 = [inst, check](const Sentence& s) -> OracleAnswer {
    check(s);
    return {inst->in_sigma0(s) ? Verdict::Yes : Verdict::No, Soundness::Exact,
            "truth table, all atoms true"};
  };
  fam.at_n = [inst, check](const Sentence& s, int n) -> OracleAnswer {
    check(s);
    return {inst->in_sigma_n(s, n) ? Verdict::Yes : Verdict::No, Soundness::Exact,
            "truth table, stratum " + std::to_string(n)};
  };
  fam.positive = [inst, check](const Sentence& s) -> OracleAnswer {
    check(s);
    return {inst->in_sigma_pos(s) ? Verdict::Yes : Verdict::No, Soundness::Exact,
            "truth table, all strata"};
  };
  fam.eventually = [inst, check](const Sentence& s) -> OracleAnswer {
    check(s);
    return {inst->in_sigma_inf(s) ? Verdict::Yes : Verdict::No, Soundness::Exact,
            "truth table, stabilized stratum"};
  };
  fam.uniform = [inst, check](const Sentence& s, int n) -> OracleAnswer {
    check(s);
    return {inst->in_sigma_n(s, n) ? Verdict::Yes : Verdict::No, Soundness::Exact,
            "truth table, uniform pair at " + std::to_string(n)};
  };
  return fam;
}

LtClassEnumerator::LtClassEnumerator(std::shared_ptr<const ToyInstance> inst)
    : inst_(std::move(inst)) {
  int k = inst_->window();
  if (k > 5) throw Error(ErrorKind::EnumerationLimit, "toy window too large to enumerate classes");
  size_ = uint64_t{1} << (uint64_t{1} << k);
}

Sentence LtClassEnumerator::at(uint64_t i) const {
  if (i >= size_) throw Error(ErrorKind::EnumerationLimit, "class index out of range");
  if (i == 0) return f_false();
  if (i == size_ - 1) return f_true();
  int k = inst_->window();
  std::vector<Formula> minterms;
  for (uint64_t a = 0; a < (uint64_t{1} << k); ++a) {
    if (!((i >> a) & 1)) continue;
    std::vector<Formula> lits;
    for (int bit = 0; bit < k; ++bit) {
      Formula at = inst_->atom(bit + 1);
      lits.push_back((a >> bit) & 1 ? at : f_not(at));
    }
    minterms.push_back(f_and_all(std::move(lits)));
  }
  return f_or_all(std::move(minterms));
}

}  // namespace ffrag
