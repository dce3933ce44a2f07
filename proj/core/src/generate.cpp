#include "ffrag/generate.hpp"

namespace ffrag {

uint64_t Rng::next(uint64_t bound) { return bound == 0 ? 0 : g_() % bound; }

namespace {

Term gen_term(Rng& rng, const std::vector<std::string>& scope, int depth) {
  const Signature& sig = ring_signature();
  uint64_t leaf_choices = 2 + scope.size();
  if (depth <= 0 || rng.next(3) == 0) {
    uint64_t c = rng.next(leaf_choices);
    if (c == 0) return Term::constant(sig, "0.K");
    if (c == 1) return Term::constant(sig, "1.K");
    return Term::var(scope[c - 2], "K");
  }
  static const char* funs[] = {"+.K", "-.K", "*.K"};
  const char* f = funs[rng.next(3)];
  Term a = gen_term(rng, scope, depth - 1);
  Term b = gen_term(rng, scope, depth - 1);
  return Term::app(sig, f, {std::move(a), std::move(b)});
}

Formula gen_formula(Rng& rng, std::vector<std::string>& scope, int depth, int& quant_left,
                    const GenOptions& opts, bool with_o) {
  // weights: atoms common, connectives at depth, quantifiers while budget lasts
  uint64_t roll = rng.next(10);
  if (depth <= 0) roll = rng.next(2);  // atom or constant only
  if (roll == 0 && rng.next(4) == 0) return rng.flip() ? f_true() : f_false();
  if (roll <= 3 || depth <= 0) {
    if (with_o && rng.next(3) == 0) {
      Formula o = f_rel(onesorted_signature(), "O", {gen_term(rng, scope, opts.max_term_depth)});
      return rng.flip() ? o : f_not(o);
    }
    Term a = gen_term(rng, scope, opts.max_term_depth);
    Term b = gen_term(rng, scope, opts.max_term_depth);
    Formula eq = f_eq(std::move(a), std::move(b));
    return rng.flip() ? eq : f_not(eq);
  }
  if (roll <= 7 || quant_left == 0) {
    Formula a = gen_formula(rng, scope, depth - 1, quant_left, opts, with_o);
    Formula b = gen_formula(rng, scope, depth - 1, quant_left, opts, with_o);
    switch (rng.next(4)) {
      case 0: return f_and(std::move(a), std::move(b));
      case 1: return f_or(std::move(a), std::move(b));
      case 2: return f_implies(std::move(a), std::move(b));
      default: return f_iff(std::move(a), std::move(b));
    }
  }
  --quant_left;
  std::string name = "x" + std::to_string(scope.size());
  scope.push_back(name);
  Formula body = gen_formula(rng, scope, depth - 1, quant_left, opts, with_o);
  scope.pop_back();
  return rng.flip() ? f_exists(name, "K", std::move(body)) : f_forall(name, "K", std::move(body));
}

Formula gen_qf_body(Rng& rng, const std::vector<std::string>& scope, int depth,
                    const GenOptions& opts) {
  if (depth <= 0 || rng.next(2) == 0) {
    Term a = gen_term(rng, scope, opts.max_term_depth);
    Term b = gen_term(rng, scope, opts.max_term_depth);
    Formula eq = f_eq(std::move(a), std::move(b));
    return rng.flip() ? eq : f_not(eq);
  }
  Formula a = gen_qf_body(rng, scope, depth - 1, opts);
  Formula b = gen_qf_body(rng, scope, depth - 1, opts);
  return rng.flip() ? f_and(std::move(a), std::move(b)) : f_or(std::move(a), std::move(b));
}

}  // namespace

Sentence gen_ring_sentence(Rng& rng, const GenOptions& opts) {
  std::vector<std::string> scope;
  int quant_left = opts.max_quantifiers;
  return gen_formula(rng, scope, opts.max_depth, quant_left, opts, false);
}

Sentence gen_onesorted_sentence(Rng& rng, const GenOptions& opts) {
  std::vector<std::string> scope;
  int quant_left = opts.max_quantifiers;
  return gen_formula(rng, scope, opts.max_depth, quant_left, opts, true);
}

Sentence gen_existential_ring_sentence(Rng& rng, int quantifiers_per_leaf, int depth) {
  if (depth > 0 && rng.next(3) == 0) {
    Sentence a = gen_existential_ring_sentence(rng, quantifiers_per_leaf, depth - 1);
    Sentence b = gen_existential_ring_sentence(rng, quantifiers_per_leaf, depth - 1);
    return rng.flip() ? f_and(std::move(a), std::move(b)) : f_or(std::move(a), std::move(b));
  }
  int nq = static_cast<int>(rng.next(quantifiers_per_leaf + 1));
  std::vector<std::string> scope;
  for (int i = 0; i < nq; ++i) scope.push_back("x" + std::to_string(i));
  GenOptions opts;
  Formula body = gen_qf_body(rng, scope, 2, opts);
  for (int i = nq; i-- > 0;) body = f_exists("x" + std::to_string(i), "K", std::move(body));
  return body;
}

Sentence gen_toy_sentence(Rng& rng, const ToyInstance& inst, int depth) {
  if (depth <= 0 || rng.next(3) == 0) {
    if (rng.next(8) == 0) return rng.flip() ? f_true() : f_false();
    Sentence a = inst.atom(1 + static_cast<int>(rng.next(inst.window())));
    return rng.flip() ? a : f_not(a);
  }
  Sentence a = gen_toy_sentence(rng, inst, depth - 1);
  Sentence b = gen_toy_sentence(rng, inst, depth - 1);
  return rng.flip() ? f_and(std::move(a), std::move(b)) : f_or(std::move(a), std::move(b));
}

}  // namespace ffrag
