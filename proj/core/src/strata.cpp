#include "ffrag/strata.hpp"

#include <algorithm>

#include "ffrag/print.hpp"

namespace ffrag {

CharFamily ring_char_family() {
  CharFamily fam;
  fam.name = "ring";
  auto sum_of_ones = [](int n) {
    const Signature& sig = ring_signature();
    Term one = Term::constant(sig, "1.K");
    Term acc = one;
    for (int i = 1; i < n; ++i) acc = Term::app(sig, "+.K", {one, acc});
    return acc;
  };
  fam.rho = [sum_of_ones](int n) {
    if (n < 1) throw Error(ErrorKind::Usage, "rho index must be >= 1");
    return f_not(f_eq(sum_of_ones(n), Term::constant(ring_signature(), "0.K")));
  };
  fam.not_rho = [sum_of_ones](int n) {
    if (n < 1) throw Error(ErrorKind::Usage, "rho index must be >= 1");
    return f_eq(sum_of_ones(n), Term::constant(ring_signature(), "0.K"));
  };
  return fam;
}

CharFamily toy_char_family(std::shared_ptr<const ToyInstance> inst) {
  CharFamily fam;
  fam.name = "toy";
  fam.rho = [inst](int n) { return inst->rho(n); };
  fam.not_rho = [inst](int n) { return inst->not_rho(n); };
  return fam;
}

StratQuery StratQuery::at(int n) {
  if (n < 1) throw Error(ErrorKind::Usage, "stratum index must be >= 1");
  return {Selector::AtN, n};
}

StratQuery StratQuery::greater_than(int m) {
  if (m < 0) throw Error(ErrorKind::Usage, "stratum bound must be >= 0");
  return {Selector::GreaterThan, m};
}

StratQuery StratQuery::uniform(int n) {
  if (n < 1) throw Error(ErrorKind::Usage, "uniform pair index must be >= 1");
  return {Selector::UniformPair, n};
}

OracleAnswer query_stratum(const ToyInstance& inst, const StratQuery& q, const Sentence& phi) {
  if (!inst.in_language(phi))
    throw Error(ErrorKind::SignatureMismatch, "not a toy language sentence");
  bool verdict = false;
  std::string which;
  switch (q.selector) {
    case StratQuery::Selector::Zero:
      verdict = inst.in_sigma0(phi);
      which = "zero stratum";
      break;
    case StratQuery::Selector::AtN:
      verdict = inst.in_sigma_n(phi, q.n);
      which = "stratum " + std::to_string(q.n);
      break;
    case StratQuery::Selector::GreaterThan: {
      verdict = true;
      int m = inst.max_index(phi);
      for (int n = q.n + 1; n <= std::max(m, q.n) + 2; ++n)
        if (!inst.in_sigma_n(phi, n)) {
          verdict = false;
          break;
        }
      which = "strata past " + std::to_string(q.n);
      break;
    }
    case StratQuery::Selector::Eventually:
      verdict = inst.in_sigma_inf(phi);
      which = "stabilized stratum";
      break;
    case StratQuery::Selector::UniformPair:
      verdict = inst.in_sigma_n(phi, q.n);
      which = "uniform pair at " + std::to_string(q.n);
      break;
  }
  return {verdict ? Verdict::Yes : Verdict::No, Soundness::Exact, "truth table, " + which};
}

Sentence shift(const Sentence& phi, int n, const CharFamily& fam) {
  if (n < 0) throw Error(ErrorKind::Usage, "shift index must be >= 0");
  if (n == 0) return phi;
  std::vector<Formula> parts;
  parts.push_back(phi);
  for (int i = 1; i <= n; ++i) parts.push_back(fam.not_rho(i));
  return f_or_all(std::move(parts));
}

Sentence reduce_uniform(const Sentence& phi, int n, const CharFamily& fam) {
  if (n < 1) throw Error(ErrorKind::Usage, "uniform index must be >= 1");
  return f_or(shift(phi, n - 1, fam), fam.rho(n));
}

void StepTrace::record(int step, const std::string& oracle, const Sentence& query,
                       const OracleAnswer& a) {
  steps.push_back({step, oracle, print_canonical(query), to_string(a.verdict)});
}

namespace {

OracleAnswer unknown_downgrade(const std::string& why) {
  return {Verdict::Unknown, Soundness::RefutationSound, why};
}

}  // namespace

OracleAnswer split_membership(const Sentence& phi, const SentenceOracle& sigma0,
                              const SentenceOracle& sigma_pos, StepTrace* trace) {
  OracleAnswer a0 = sigma0(phi);
  if (trace) trace->record(1, "sigma0", phi, a0);
  if (a0.verdict == Verdict::No)
    return {Verdict::No, a0.soundness, "rejected by the zero-characteristic factor"};
  OracleAnswer ap = sigma_pos(phi);
  if (trace) trace->record(2, "sigma_pos", phi, ap);
  if (ap.verdict == Verdict::No)
    return {Verdict::No, ap.soundness, "rejected by the positive-characteristic factor"};
  if (a0.verdict == Verdict::Unknown || ap.verdict == Verdict::Unknown)
    return unknown_downgrade("a factor answered unknown");
  return {Verdict::Yes, Soundness::Exact, "accepted by both factors"};
}

OracleAnswer decide_zero_char(const Sentence& phi, const SentenceOracle& sigma,
                              const SentenceOracle& sigma_pos, const SentenceOracle& sigma_inf,
                              const CharFamily& fam, AlgorithmOptions opts, StepTrace* trace) {
  OracleAnswer inf = sigma_inf(phi);
  if (trace) trace->record(1, "sigma_inf", phi, inf);
  if (inf.verdict == Verdict::No)
    return {Verdict::No, inf.soundness, "not eventually valid"};
  if (inf.verdict == Verdict::Unknown) return unknown_downgrade("step 1 answered unknown");

  for (int m = 0; m <= opts.step_cap; ++m) {
    Sentence shifted = shift(phi, m, fam);
    OracleAnswer ap = sigma_pos(shifted);
    if (trace) trace->record(2, "sigma_pos", shifted, ap);
    if (ap.verdict == Verdict::Unknown) return unknown_downgrade("step 2 answered unknown");
    if (ap.verdict == Verdict::Yes) {
      OracleAnswer as = sigma(shifted);
      if (trace) trace->record(3, "sigma", shifted, as);
      if (as.verdict == Verdict::Unknown) return unknown_downgrade("step 3 answered unknown");
      std::string m0 = std::to_string(m);
      if (as.verdict == Verdict::Yes)
        return {Verdict::Yes, Soundness::Exact, "m0 = " + m0 + ", shifted sentence in Sigma"};
      return {Verdict::No, Soundness::Exact, "m0 = " + m0 + ", shifted sentence not in Sigma"};
    }
  }
  return unknown_downgrade("step cap " + std::to_string(opts.step_cap) +
                           " reached without finding m0");
}

OracleAnswer decide_positive(const Sentence& phi, const SentenceOracle& sigma_inf,
                             const SentenceOracle& sigma_prime_pos, const IndexedOracle& sigma_N,
                             const CharFamily& fam, AlgorithmOptions opts, StepTrace* trace) {
  OracleAnswer inf = sigma_inf(phi);
  if (trace) trace->record(1, "sigma_inf", phi, inf);
  if (inf.verdict == Verdict::No)
    return {Verdict::No, inf.soundness, "not eventually valid"};
  if (inf.verdict == Verdict::Unknown) return unknown_downgrade("step 1 answered unknown");

  for (int m = 0; m <= opts.step_cap; ++m) {
    Sentence shifted = shift(phi, m, fam);
    OracleAnswer ap = sigma_prime_pos(shifted);
    if (trace) trace->record(2, "sigma_prime_pos", shifted, ap);
    if (ap.verdict == Verdict::Unknown) return unknown_downgrade("step 2 answered unknown");
    if (ap.verdict == Verdict::Yes) {
      for (int n = 1; n <= m; ++n) {
        OracleAnswer an = sigma_N(phi, n);
        if (trace) trace->record(3, "sigma_N(" + std::to_string(n) + ")", phi, an);
        if (an.verdict == Verdict::Unknown) return unknown_downgrade("step 3 answered unknown");
        if (an.verdict == Verdict::No)
          return {Verdict::No, Soundness::Exact,
                  "m0 = " + std::to_string(m) + ", fails stratum " + std::to_string(n)};
      }
      return {Verdict::Yes, Soundness::Exact,
              "m0 = " + std::to_string(m) + ", all strata up to m0 accept"};
    }
  }
  return unknown_downgrade("step cap " + std::to_string(opts.step_cap) +
                           " reached without finding m0");
}

}  // namespace ffrag
