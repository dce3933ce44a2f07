#ifndef FFRAG_STRATA_HPP
#define FFRAG_STRATA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/oracle.hpp"
#include "ffrag/toy.hpp"

namespace ffrag {

// The sentences rho_n and their negations; both must lie in the working
// fragment for every queried n.
struct CharFamily {
  std::string name;
  std::function<Sentence(int)> rho;      // n >= 1
  std::function<Sentence(int)> not_rho;  // n >= 1
};

// Field instantiation: rho_n = "the characteristic is not n",
// i.e. (not (= 1+...+1 0.K)) with exactly n right-nested ones.
CharFamily ring_char_family();
// Toy instantiation: rho_n = r_n, not_rho_n = (not (r_n)).
CharFamily toy_char_family(std::shared_ptr<const ToyInstance> inst);

// A stratum query: which derived theory a sentence is asked against.
struct StratQuery {
  enum class Selector { Zero, AtN, GreaterThan, Eventually, UniformPair };
  Selector selector = Selector::Zero;
  int n = 1;  // AtN / UniformPair index (>= 1), GreaterThan bound (>= 0)

  static StratQuery zero() { return {Selector::Zero, 0}; }
  static StratQuery at(int n);
  static StratQuery greater_than(int m);
  static StratQuery eventually() { return {Selector::Eventually, 0}; }
  static StratQuery uniform(int n);
};

// Answers a stratum query against the toy instance's exact oracles.
OracleAnswer query_stratum(const ToyInstance& inst, const StratQuery& q, const Sentence& phi);

// phi_n = phi or not_rho_1 or ... or not_rho_n, right-nested; phi_0 = phi.
Sentence shift(const Sentence& phi, int n, const CharFamily& fam);

// The uniform-theory reduction map: psi = phi_{n-1} or rho_n, with
// (phi, n) in Sigma_N iff psi in Sigma iff psi in Sigma_{>0}.
Sentence reduce_uniform(const Sentence& phi, int n, const CharFamily& fam);

struct StepRecord {
  int step;               // algorithm step number
  std::string oracle;     // which oracle was asked
  std::string sentence;   // canonical text of the query
  std::string verdict;
};

struct StepTrace {
  std::vector<StepRecord> steps;
  void record(int step, const std::string& oracle, const Sentence& query, const OracleAnswer& a);
};

struct AlgorithmOptions {
  int step_cap = 10000;  // bound on the shift search in step 2
};

// Sigma = Sigma_0 intersect Sigma_{>0}: Yes iff both factors answer Yes.
// Unknown propagates with a refutation-sound downgrade.
OracleAnswer split_membership(const Sentence& phi, const SentenceOracle& sigma0,
                              const SentenceOracle& sigma_pos, StepTrace* trace = nullptr);

// Decides phi in Sigma_0:
//   1. answer No unless phi in Sigma_{>>0};
//   2. find minimal m0 with shift(phi, m0) in Sigma_{>0};
//   3. answer Yes iff shift(phi, m0) in Sigma.
OracleAnswer decide_zero_char(const Sentence& phi, const SentenceOracle& sigma,
                              const SentenceOracle& sigma_pos, const SentenceOracle& sigma_inf,
                              const CharFamily& fam, AlgorithmOptions opts = {},
                              StepTrace* trace = nullptr);

// Decides phi in Sigma_{>0}, given oracles for Sigma_{>>0}, a subtheory's
// Sigma'_{>0} (with Sigma' contained in Sigma and equal at >>0; asserted by
// the caller), and the uniform theory Sigma_N:
//   1. answer No unless phi in Sigma_{>>0};
//   2. find minimal m0 with shift(phi, m0) in Sigma'_{>0};
//   3. answer Yes iff (phi, n) in Sigma_N for all 1 <= n <= m0.
OracleAnswer decide_positive(const Sentence& phi, const SentenceOracle& sigma_inf,
                             const SentenceOracle& sigma_prime_pos, const IndexedOracle& sigma_N,
                             const CharFamily& fam, AlgorithmOptions opts = {},
                             StepTrace* trace = nullptr);

}  // namespace ffrag

#endif  // FFRAG_STRATA_HPP
