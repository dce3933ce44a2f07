#include "ffrag/eliminate.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "ffrag/fragments.hpp"
#include "ffrag/print.hpp"

namespace ffrag {

std::pair<uint64_t, uint64_t> enumerate_pairs(uint64_t i) {
  // diagonal d holds the d+1 pairs (d,0), (d-1,1), ..., (0,d)
  uint64_t d = static_cast<uint64_t>((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
  while (d > 0 && d * (d + 1) / 2 > i) --d;
  while ((d + 1) * (d + 2) / 2 <= i) ++d;
  uint64_t m = i - d * (d + 1) / 2;
  return {d - m, m};
}

uint64_t pair_index(uint64_t l, uint64_t m) {
  uint64_t d = l + m;
  return d * (d + 1) / 2 + m;
}

namespace {

class TruthTableProver : public Prover {
 public:
  TruthTableProver(std::vector<StructurePtr> universe, std::vector<Sentence> theory)
      : universe_(std::move(universe)), theory_(std::move(theory)) {}
  std::string name() const override { return "tt"; }
  ProverResult prove_equiv(const Sentence& lhs, const Sentence& rhs,
                           uint64_t ticks) const override {
    if (ticks < 1) return {ProofStatus::Unknown, "no budget"};
    for (const StructurePtr& m : universe_) {
      bool model = true;
      for (const Sentence& ax : theory_)
        if (!evaluate(*m, ax)) {
          model = false;
          break;
        }
      if (!model) continue;
      if (evaluate(*m, lhs) != evaluate(*m, rhs))
        return {ProofStatus::Refuted, "separated by " + m->name()};
    }
    return {ProofStatus::Proved, "equivalent on all universe models"};
  }

 private:
  std::vector<StructurePtr> universe_;
  std::vector<Sentence> theory_;
};

class RefuterProver : public Prover {
 public:
  explicit RefuterProver(std::vector<StructurePtr> battery) : battery_(std::move(battery)) {}
  std::string name() const override { return "refute"; }
  ProverResult prove_equiv(const Sentence& lhs, const Sentence& rhs, uint64_t) const override {
    RefuterOutcome o = finite_model_refuter(battery_, lhs, rhs);
    if (o.refuted) return {ProofStatus::Refuted, "separated by " + o.witness_model};
    return {ProofStatus::Unknown, "no separating model in the battery"};
  }

 private:
  std::vector<StructurePtr> battery_;
};

// ---- ground saturation ----

bool is_ground_term(const Term& t) {
  if (t.kind == Term::Kind::Var) return false;
  for (const Term& a : t.args)
    if (!is_ground_term(a)) return false;
  return true;
}

bool is_ground(const Formula& f) {
  for (const Term& t : f.terms)
    if (!is_ground_term(t)) return false;
  if (f.is_quantifier()) return false;
  for (const Formula& k : f.kids)
    if (!is_ground(k)) return false;
  return true;
}

bool has_quantifier(const Formula& f) {
  if (f.is_quantifier()) return true;
  for (const Formula& k : f.kids)
    if (has_quantifier(k)) return true;
  return false;
}

Term substitute(const Term& t, const std::string& var, const Term& value) {
  if (t.kind == Term::Kind::Var) return t.name == var ? value : t;
  Term r = t;
  for (Term& a : r.args) a = substitute(a, var, value);
  return r;
}

Formula substitute(const Formula& f, const std::string& var, const Term& value) {
  Formula r = f;
  if (f.is_quantifier() && f.name == var) return r;  // shadowed
  for (Term& t : r.terms) t = substitute(t, var, value);
  for (size_t i = 0; i < r.kids.size(); ++i) r.kids[i] = substitute(f.kids[i], var, value);
  return r;
}

// Herbrand terms per sort up to the given application depth.
std::map<std::string, std::vector<Term>> herbrand_terms(const Signature& sig, int depth) {
  std::map<std::string, std::vector<Term>> pool;
  for (const auto& c : sig.constants()) pool[c.sort].push_back(Term::constant(sig, c.name));
  for (int d = 0; d < depth; ++d) {
    std::map<std::string, std::vector<Term>> next = pool;
    for (const auto& f : sig.functions()) {
      if (f.arg_sorts.size() != 2) continue;  // binary suffices for the ring languages
      for (const Term& a : pool[f.arg_sorts[0]])
        for (const Term& b : pool[f.arg_sorts[1]]) {
          if (next[f.result_sort].size() > 64) break;
          next[f.result_sort].push_back(Term::app(sig, f.name, {a, b}));
        }
    }
    pool = std::move(next);
  }
  return pool;
}

class GroundSaturationProver : public Prover {
 public:
  GroundSaturationProver(const Signature* sig, std::vector<Sentence> theory, int depth)
      : sig_(sig), theory_(std::move(theory)), depth_(depth) {}
  std::string name() const override { return "ground:" + std::to_string(depth_); }

  ProverResult prove_equiv(const Sentence& lhs, const Sentence& rhs,
                           uint64_t ticks) const override {
    if (ticks < 1) return {ProofStatus::Unknown, "no budget"};
    Sentence goal = f_iff(lhs, rhs);
    if (lhs == rhs) return {ProofStatus::Proved, "literal identity"};
    // refutational grounding: collect ground consequences of theory + !goal
    std::vector<Formula> ground;
    Formula neg = f_not(goal);
    if (is_ground(neg)) ground.push_back(neg);
    else return {ProofStatus::Unknown, "goal is not ground"};
    for (const Sentence& ax : theory_) {
      if (is_ground(ax)) {
        ground.push_back(ax);
        continue;
      }
      // instantiate outermost universal prefixes over the Herbrand terms
      // (instances are consequences, so this stays sound); skip anything
      // whose body is still quantified
      std::vector<std::pair<std::string, std::string>> prefix;
      const Formula* cur = &ax;
      while (cur->kind == Formula::Kind::Forall) {
        prefix.emplace_back(cur->name, cur->sort);
        cur = &cur->kids[0];
      }
      if (prefix.empty() || has_quantifier(*cur) || !sig_) continue;
      std::map<std::string, std::vector<Term>> pool = herbrand_terms(*sig_, depth_);
      bool ok = true;
      for (const auto& [var, sort] : prefix)
        if (pool[sort].empty()) ok = false;
      if (!ok) continue;
      std::vector<size_t> pick(prefix.size(), 0);
      while (true) {
        Formula inst = *cur;
        for (size_t i = 0; i < prefix.size(); ++i)
          inst = substitute(inst, prefix[i].first, pool[prefix[i].second][pick[i]]);
        if (is_ground(inst)) ground.push_back(std::move(inst));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < pool[prefix[i].second].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
        if (ground.size() > 512) break;
      }
    }
    // exhaustive propositional check over the ground atoms
    std::vector<std::string> atoms;
    std::map<std::string, size_t> atom_ix;
    std::function<void(const Formula&)> collect = [&](const Formula& f) {
      if (f.kind == Formula::Kind::Eq || f.kind == Formula::Kind::Rel) {
        std::string key = print_canonical(f);
        if (!atom_ix.count(key)) {
          atom_ix[key] = atoms.size();
          atoms.push_back(key);
        }
        return;
      }
      for (const Formula& k : f.kids) collect(k);
    };
    for (const Formula& g : ground) collect(g);
    if (atoms.size() > 20) return {ProofStatus::Unknown, "too many ground atoms"};

    // reflexivity constraints t = t are valid; fix them true
    std::function<bool(const Formula&, uint64_t)> eval = [&](const Formula& f,
                                                             uint64_t mask) -> bool {
      switch (f.kind) {
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Eq:
        case Formula::Kind::Rel: {
          if (f.kind == Formula::Kind::Eq && f.terms[0] == f.terms[1]) return true;
          return (mask >> atom_ix.at(print_canonical(f))) & 1;
        }
        case Formula::Kind::Not: return !eval(f.kids[0], mask);
        case Formula::Kind::And: return eval(f.kids[0], mask) && eval(f.kids[1], mask);
        case Formula::Kind::Or: return eval(f.kids[0], mask) || eval(f.kids[1], mask);
        case Formula::Kind::Implies: return !eval(f.kids[0], mask) || eval(f.kids[1], mask);
        case Formula::Kind::Iff: return eval(f.kids[0], mask) == eval(f.kids[1], mask);
        default: return true;
      }
    };
    for (uint64_t mask = 0; mask < (uint64_t{1} << atoms.size()); ++mask) {
      bool sat = true;
      for (const Formula& g : ground)
        if (!eval(g, mask)) {
          sat = false;
          break;
        }
      if (sat) return {ProofStatus::Unknown, "grounding is satisfiable"};
    }
    return {ProofStatus::Proved, "ground refutation"};
  }

 private:
  const Signature* sig_;
  std::vector<Sentence> theory_;
  int depth_;
};

}  // namespace

std::shared_ptr<Prover> truth_table_prover(std::vector<StructurePtr> universe,
                                           std::vector<Sentence> theory) {
  return std::make_shared<TruthTableProver>(std::move(universe), std::move(theory));
}

std::shared_ptr<Prover> finite_model_refuter_prover(std::vector<StructurePtr> battery) {
  return std::make_shared<RefuterProver>(std::move(battery));
}

std::shared_ptr<Prover> ground_saturation_prover(const Signature& sig,
                                                 std::vector<Sentence> theory, int depth) {
  return std::make_shared<GroundSaturationProver>(&sig, std::move(theory), depth);
}

RefuterOutcome finite_model_refuter(const std::vector<StructurePtr>& battery, const Sentence& psi,
                                    const Sentence& iota_phi) {
  for (const StructurePtr& m : battery) {
    if (evaluate(*m, psi) != evaluate(*m, iota_phi)) return {true, m->name()};
  }
  return {false, ""};
}

namespace {

struct CandidateState {
  bool materialized = false;
  bool dead = false;
  Sentence sentence;
  Sentence image;
};

SearchOutcome run_search(const Sentence& psi, const TranslationMap& iota,
                         const CandidateEnumerator& candidates, const Prover& prover,
                         const EliminationOptions& opts,
                         const std::function<bool(const Sentence&)>& admit) {
  SearchOutcome out;

  if (opts.fast_path && iota.invert) {
    if (auto phi0 = iota.invert(psi)) {
      if (iota.apply(*phi0) == psi && (!admit || admit(*phi0))) {
        out.status = SearchOutcome::Status::Found;
        out.candidate = *phi0;
        out.used_fast_path = true;
        out.detail = "syntactic identity psi == iota(phi)";
        return out;
      }
    }
  }

  std::map<uint64_t, CandidateState> states;
  uint64_t dead_count = 0;
  auto kill = [&](CandidateState& st) {
    if (!st.dead) {
      st.dead = true;
      ++dead_count;
    }
  };

  auto [l0, m0] = enumerate_pairs(opts.start_pair);
  uint64_t diag = l0 + m0, m = m0, i = opts.start_pair;
  auto advance = [&] {
    ++i;
    if (++m > diag) {
      m = 0;
      ++diag;
    }
  };
  while (true) {
    if (candidates.size && dead_count == *candidates.size) {
      out.status = SearchOutcome::Status::BudgetExhausted;
      out.frontier = i;
      out.detail = "every candidate refuted";
      return out;
    }
    uint64_t ticks = diag - m;
    if (candidates.size && m >= *candidates.size) {
      // the rest of this diagonal is out of range; hop to the next one
      i += diag - m + 1;
      m = 0;
      ++diag;
      continue;
    }
    CandidateState& st = states[m];
    if (st.dead) {
      advance();
      continue;  // pruned, no budget consumed
    }

    if (out.pairs_visited >= opts.budget) {
      out.status = SearchOutcome::Status::BudgetExhausted;
      out.frontier = i;
      out.detail = "budget exhausted";
      return out;
    }
    ++out.pairs_visited;

    if (!st.materialized) {
      st.sentence = candidates.at(m);
      st.materialized = true;
      if (admit && !admit(st.sentence)) {
        kill(st);
        advance();
        continue;
      }
      st.image = iota.apply(st.sentence);
      if (!opts.refuter_battery.empty()) {
        RefuterOutcome r = finite_model_refuter(opts.refuter_battery, psi, st.image);
        if (r.refuted) {
          kill(st);
          advance();
          continue;
        }
      }
    }

    ProverResult pr = prover.prove_equiv(psi, st.image, ticks);
    if (pr.status == ProofStatus::Proved) {
      out.status = SearchOutcome::Status::Found;
      out.candidate = st.sentence;
      out.frontier = i;
      out.detail = pr.detail;
      return out;
    }
    if (pr.status == ProofStatus::Refuted) kill(st);
    advance();
  }
}

}  // namespace

SearchOutcome search_elimination(const Sentence& psi, const TranslationMap& iota,
                                 const CandidateEnumerator& candidates, const Prover& prover,
                                 EliminationOptions opts) {
  return run_search(psi, iota, candidates, prover, opts, nullptr);
}

SearchOutcome search_elimination_graded(
    const Sentence& psi, const TranslationMap& iota,
    const std::function<CandidateEnumerator(int)>& graded_candidates, const Prover& prover,
    EliminationOptions opts) {
  int budget = quantifier_budget(psi);  // throws NotExistential
  CandidateEnumerator cands = graded_candidates(budget);
  auto admit = [budget](const Sentence& phi) {
    Membership m = classify(phi);
    return m.exists && m.exists_budget <= budget;
  };
  SearchOutcome out = run_search(psi, iota, cands, prover, opts, admit);
  return out;
}

}  // namespace ffrag
