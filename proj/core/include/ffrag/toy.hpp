#ifndef FFRAG_TOY_HPP
#define FFRAG_TOY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/oracle.hpp"

namespace ffrag {

// The propositional instance that makes every stratification hypothesis
// exactly computable: atoms r_1, r_2, ..., empty base theory, rho_n = r_n.
// The language L is the fragment of and/or combinations of literals.
//
// The signature carries `guard` extra atoms past the query window so that
// shifted sentences (which mention rho up to one index past the sentence's
// own atoms) and the stabilization checks at m+2, m+3 stay inside it.
class ToyInstance {
 public:
  explicit ToyInstance(int window, int guard = 4);

  int window() const { return window_; }
  int atom_count() const { return window_ + guard_; }
  const Signature& sig() const { return *sig_; }

  Sentence atom(int n) const;     // (rn)
  Sentence rho(int n) const;      // rho_n = r_n
  Sentence not_rho(int n) const;  // (not (rn))

  // L-membership: and/or tree over literals and truth constants.
  bool in_language(const Sentence& s) const;

  // Largest atom index mentioned (0 when none).
  int max_index(const Sentence& s) const;

  // Truth-table entailment. Sigma = the L-tautologies; Sigma_0 adds all
  // rho_n as axioms; Sigma_n fixes r_i true for i < n and r_n false;
  // Sigma_(>0) intersects Sigma_n for n up to max_index + 2 (entailment is
  // constant past max_index + 1); Sigma_(>>0) reads off the stabilized value.
  bool in_sigma(const Sentence& s) const;
  bool in_sigma0(const Sentence& s) const;
  bool in_sigma_n(const Sentence& s, int n) const;
  bool in_sigma_pos(const Sentence& s) const;
  bool in_sigma_inf(const Sentence& s) const;

 private:
  int window_;
  int guard_;
  std::shared_ptr<const Signature> sig_;
};

struct ToyOracleFamily {
  SentenceOracle sigma;      // membership in Sigma
  SentenceOracle sigma0;     // Sigma_0
  IndexedOracle at_n;        // Sigma_n
  SentenceOracle positive;   // Sigma_(>0)
  SentenceOracle eventually; // Sigma_(>>0)
  IndexedOracle uniform;     // Sigma_N: (phi, n)
};

// All members are Exact; they may be queried concurrently.
ToyOracleFamily toy_oracles(std::shared_ptr<const ToyInstance> inst);

// Enumerates the Lindenbaum-Tarski classes of the toy language over the
// window atoms: index i is the truth table with bit a giving the value under
// assignment a, represented by its canonical minterm normal form. Total on
// [0, 2^(2^window)), injective, and surjective onto the classes of L.
class LtClassEnumerator {
 public:
  explicit LtClassEnumerator(std::shared_ptr<const ToyInstance> inst);
  uint64_t size() const { return size_; }
  Sentence at(uint64_t i) const;

 private:
  std::shared_ptr<const ToyInstance> inst_;
  uint64_t size_;
};

}  // namespace ffrag

#endif  // FFRAG_TOY_HPP
