#include <memory>

#include "doctest.h"
#include "ffrag/fragments.hpp"
#include "ffrag/generate.hpp"
#include "ffrag/model.hpp"
#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"
#include "ffrag/strata.hpp"

using namespace ffrag;

TEST_CASE("ring rho and shift") {
  CharFamily fam = ring_char_family();
  CHECK(print_canonical(fam.rho(2)) == "(not (= (+.K 1.K 1.K) 0.K))");
  CHECK(print_canonical(fam.rho(1)) == "(not (= 1.K 0.K))");
  CHECK(print_canonical(fam.rho(3)) == "(not (= (+.K 1.K (+.K 1.K 1.K)) 0.K))");
  CHECK(print_canonical(fam.not_rho(2)) == "(= (+.K 1.K 1.K) 0.K)");
  CHECK(classify(fam.rho(5)).qf);

  // rho_1 holds in every field; rho_2 detects characteristic 2
  CHECK(evaluate(*prime_field(2), fam.rho(1)));
  CHECK(!evaluate(*prime_field(2), fam.rho(2)));
  CHECK(evaluate(*prime_field(3), fam.rho(2)));

  Sentence phi = parse_sentence("(exists (x K) (= (+.K x x) 1.K))", ring_signature());
  CHECK(shift(phi, 0, fam) == phi);
  Sentence s2 = shift(phi, 2, fam);
  CHECK(print_canonical(s2) ==
        "(or " + print_canonical(phi) + " (or (= 1.K 0.K) (= (+.K 1.K 1.K) 0.K)))");
  // shifted sentences hold wherever some not_rho fires: char 2 satisfies
  // not_rho_2 regardless of phi
  CHECK(evaluate(*prime_field(2), s2));
  CHECK(classify(s2).exists);

  // the uniform reduction image in F_2: psi = shift(phi,1) or rho_2;
  // phi fails in F_2 (x + x = 0 there), shift(phi,1) = phi or (1=0) fails,
  // and rho_2 fails, so F_2 refutes the image, matching phi not in the
  // stratum at 2
  Sentence psi = reduce_uniform(phi, 2, fam);
  CHECK(print_canonical(psi) ==
        "(or (or " + print_canonical(phi) + " (= 1.K 0.K)) (not (= (+.K 1.K 1.K) 0.K)))");
  CHECK(!evaluate(*prime_field(2), psi));
  CHECK(!evaluate(*prime_field(2), phi));
}

TEST_CASE("reduce_uniform on the toy instance") {
  auto inst = std::make_shared<ToyInstance>(4);
  CharFamily fam = toy_char_family(inst);
  // (r2, 1) maps to r2 or r1; both sides no
  Sentence r2 = inst->atom(2);
  Sentence img = reduce_uniform(r2, 1, fam);
  CHECK(print_canonical(img) == "(or (r2) (r1))");
  CHECK(!inst->in_sigma_n(r2, 1));
  CHECK(!inst->in_sigma(img));
  CHECK(!inst->in_sigma_pos(img));

  // (top, n): both sides yes
  Sentence top_img = reduce_uniform(f_true(), 3, fam);
  CHECK(inst->in_sigma(top_img));
  CHECK(inst->in_sigma_n(f_true(), 3));
}

TEST_CASE("split_membership on the toy instance") {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  Sentence r1 = inst->atom(1);

  StepTrace t1;
  OracleAnswer taut = split_membership(f_or(r1, f_not(r1)), fam.sigma0, fam.positive, &t1);
  CHECK(taut.verdict == Verdict::Yes);
  CHECK(t1.steps.size() == 2);

  CHECK(split_membership(r1, fam.sigma0, fam.positive).verdict == Verdict::No);
  CHECK(split_membership(f_or(f_not(r1), f_not(inst->atom(2))), fam.sigma0, fam.positive)
            .verdict == Verdict::No);  // fails sigma0

  // unknown propagation downgrades soundness
  SentenceOracle unknown = [](const Sentence&) -> OracleAnswer {
    return {Verdict::Unknown, Soundness::RefutationSound, ""};
  };
  OracleAnswer u = split_membership(f_or(r1, f_not(r1)), fam.sigma0, unknown);
  CHECK(u.verdict == Verdict::Unknown);
  CHECK(u.soundness == Soundness::RefutationSound);
}

TEST_CASE("decide_zero_char traces the three steps") {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  CharFamily cf = toy_char_family(inst);
  Sentence r1 = inst->atom(1);

  // phi = r1: step 2 finds m0 = 1 (r1 or not-r1 is a tautology), step 3 yes
  StepTrace trace;
  OracleAnswer a = decide_zero_char(r1, fam.sigma, fam.positive, fam.eventually, cf, {}, &trace);
  CHECK(a.verdict == Verdict::Yes);
  CHECK(a.evidence.find("m0 = 1") != std::string::npos);
  CHECK(inst->in_sigma0(r1));
  REQUIRE(trace.steps.size() >= 3);
  CHECK(trace.steps[0].oracle == "sigma_inf");
  CHECK(trace.steps.back().oracle == "sigma");

  // phi = not r1: rejected at step 1
  OracleAnswer b = decide_zero_char(f_not(r1), fam.sigma, fam.positive, fam.eventually, cf);
  CHECK(b.verdict == Verdict::No);
  CHECK(b.evidence == "not eventually valid");

  // phi = bottom: step 1 no (consistent strata never prove bottom)
  OracleAnswer c = decide_zero_char(f_false(), fam.sigma, fam.positive, fam.eventually, cf);
  CHECK(c.verdict == Verdict::No);

  // a buggy oracle that never accepts trips the step cap
  SentenceOracle never = [](const Sentence&) -> OracleAnswer {
    return {Verdict::No, Soundness::Exact, ""};
  };
  AlgorithmOptions tight;
  tight.step_cap = 5;
  OracleAnswer d = decide_zero_char(r1, fam.sigma, never, fam.eventually, cf, tight);
  CHECK(d.verdict == Verdict::Unknown);
}

TEST_CASE("decide_positive follows the three steps") {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  CharFamily cf = toy_char_family(inst);
  Sentence r1 = inst->atom(1), r2 = inst->atom(2);

  // phi = r1 or not r2: m0 = 1, then (phi, 1) fails
  StepTrace trace;
  OracleAnswer a = decide_positive(f_or(r1, f_not(r2)), fam.eventually, fam.positive, fam.uniform,
                                   cf, {}, &trace);
  CHECK(a.verdict == Verdict::No);
  CHECK(a.evidence.find("m0 = 1") != std::string::npos);
  CHECK(!inst->in_sigma_pos(f_or(r1, f_not(r2))));

  // tautology: yes at m0 = 0 with no step-3 queries
  OracleAnswer b = decide_positive(f_or(r1, f_not(r1)), fam.eventually, fam.positive, fam.uniform, cf);
  CHECK(b.verdict == Verdict::Yes);
  CHECK(b.evidence.find("m0 = 0") != std::string::npos);

  // not r1: step 1 refuses
  OracleAnswer c = decide_positive(f_not(r1), fam.eventually, fam.positive, fam.uniform, cf);
  CHECK(c.verdict == Verdict::No);
}

TEST_CASE("stratum queries") {
  auto inst = std::make_shared<ToyInstance>(4);
  Sentence r1 = inst->atom(1);
  CHECK(query_stratum(*inst, StratQuery::zero(), r1).verdict == Verdict::Yes);
  CHECK(query_stratum(*inst, StratQuery::at(1), r1).verdict == Verdict::No);
  CHECK(query_stratum(*inst, StratQuery::at(2), r1).verdict == Verdict::Yes);
  // past stratum 1 the axioms force r1
  CHECK(query_stratum(*inst, StratQuery::greater_than(1), r1).verdict == Verdict::Yes);
  CHECK(query_stratum(*inst, StratQuery::greater_than(0), r1).verdict == Verdict::No);
  CHECK(query_stratum(*inst, StratQuery::eventually(), r1).verdict == Verdict::Yes);
  CHECK(query_stratum(*inst, StratQuery::uniform(3), r1).verdict == Verdict::Yes);
  CHECK_THROWS_AS(StratQuery::at(0), Error);
  CHECK_THROWS_AS(StratQuery::uniform(0), Error);
}

TEST_CASE("containments and fragment preservation") {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  CharFamily cf = toy_char_family(inst);
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    Sentence phi = gen_toy_sentence(rng, *inst, 3);
    // yes-set containments
    OracleAnswer split = split_membership(phi, fam.sigma0, fam.positive);
    if (split.verdict == Verdict::Yes) {
      REQUIRE(fam.sigma0(phi).verdict == Verdict::Yes);
      REQUIRE(fam.positive(phi).verdict == Verdict::Yes);
    }
    OracleAnswer pos = decide_positive(phi, fam.eventually, fam.positive, fam.uniform, cf);
    if (pos.verdict == Verdict::Yes) REQUIRE(fam.eventually(phi).verdict == Verdict::Yes);
    // shift and reduce_uniform stay inside the toy language
    REQUIRE(inst->in_language(shift(phi, 3, cf)));
    REQUIRE(inst->in_language(reduce_uniform(phi, 2, cf)));
  }

  // ring shifts preserve the existential fragment
  CharFamily rf = ring_char_family();
  Rng rng2(24);
  for (int i = 0; i < 100; ++i) {
    Sentence phi = gen_existential_ring_sentence(rng2, 2);
    REQUIRE(classify(shift(phi, 2, rf)).exists);
    REQUIRE(classify(reduce_uniform(phi, 2, rf)).exists);
  }
}

TEST_CASE("theory-restriction identity on the toy instance") {
  // (T_L union S)_L = (T union S)_L with S a random literal set (every
  // literal's negation lies in L). Entailment is by truth tables, and the
  // models of T_L are computed from first principles: an assignment models
  // T_L iff it satisfies every L-expressible truth function entailed by T.
  auto inst = std::make_shared<ToyInstance>(4);
  Rng rng(17);
  const int k = 4;
  const uint64_t n_assign = uint64_t{1} << k;
  const uint64_t full = (uint64_t{1} << n_assign) - 1;

  auto table_of = [&](const Sentence& s) {
    uint64_t t = 0;
    for (uint64_t a = 0; a < n_assign; ++a) {
      StructurePtr m = std::make_shared<PropStructure>(inst->sig(), a);
      if (evaluate(*m, s)) t |= uint64_t{1} << a;
    }
    return t;
  };

  for (int trial = 0; trial < 12; ++trial) {
    // T: a few random toy sentences; S: a random set of literals
    uint64_t t_models = full;
    for (int i = 0, n = 1 + static_cast<int>(rng.next(3)); i < n; ++i)
      t_models &= table_of(gen_toy_sentence(rng, *inst, 2));
    uint64_t s_models = full;
    for (int i = 1; i <= k; ++i) {
      if (!rng.flip()) continue;
      Sentence lit = rng.flip() ? inst->atom(i) : f_not(inst->atom(i));
      s_models &= table_of(lit);
    }

    // models of T_L: assignments surviving every L-expressible function
    // entailed by T (L expresses all 2^(2^k) functions via minterm forms)
    uint64_t tl_models = full;
    for (uint64_t f = 0; f <= full; ++f)
      if ((f & t_models) == t_models) tl_models &= f;

    // corpus: random depth-3 sentences; the two entailments agree
    for (int c = 0; c < 40; ++c) {
      uint64_t phi = table_of(gen_toy_sentence(rng, *inst, 3));
      bool left = ((tl_models & s_models) & ~phi) == 0;   // (T_L union S) |= phi
      bool right = ((t_models & s_models) & ~phi) == 0;   // (T union S) |= phi
      REQUIRE(left == right);
    }
  }
}
