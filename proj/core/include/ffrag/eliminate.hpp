#ifndef FFRAG_ELIMINATE_HPP
#define FFRAG_ELIMINATE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/interpret.hpp"
#include "ffrag/model.hpp"

namespace ffrag {

// The dovetailing order: (l,m) before (l',m') iff l+m < l'+m', ties broken
// by smaller m. enumerate_pairs is the order isomorphism from the naturals.
std::pair<uint64_t, uint64_t> enumerate_pairs(uint64_t i);
uint64_t pair_index(uint64_t l, uint64_t m);

enum class ProofStatus { Proved, Refuted, Unknown };

struct ProverResult {
  ProofStatus status = ProofStatus::Unknown;
  std::string detail;
};

// Budgeted semi-decider for T2 |- lhs <-> rhs. Proved must imply semantic
// entailment on the instance's models; Refuted must exhibit a countermodel.
class Prover {
 public:
  virtual ~Prover() = default;
  virtual std::string name() const = 0;
  virtual ProverResult prove_equiv(const Sentence& lhs, const Sentence& rhs,
                                   uint64_t ticks) const = 0;
};

// Exact over a finite universe: Proved iff lhs and rhs agree on every
// universe model of the theory, Refuted otherwise. Needs at least one tick.
std::shared_ptr<Prover> truth_table_prover(std::vector<StructurePtr> universe,
                                           std::vector<Sentence> theory);

// Refuted iff some battery model separates the two sentences; never Proved.
std::shared_ptr<Prover> finite_model_refuter_prover(std::vector<StructurePtr> battery);

// Sound refutational grounding: universal instances of the theory over the
// Herbrand terms up to the given depth, plus the negated goal when it is
// ground, checked by exhaustion over the ground atoms. Proved is
// trustworthy; most goals come back Unknown.
std::shared_ptr<Prover> ground_saturation_prover(const Signature& sig,
                                                 std::vector<Sentence> theory, int depth);

// Standalone refuter: Refuted iff some battery model separates psi and
// iota_phi; Unknown otherwise (including on an empty battery).
struct RefuterOutcome {
  bool refuted = false;
  std::string witness_model;
};
RefuterOutcome finite_model_refuter(const std::vector<StructurePtr>& battery, const Sentence& psi,
                                    const Sentence& iota_phi);

// A total candidate stream; `size` bounds the indices when finite.
struct CandidateEnumerator {
  std::string name;
  std::function<Sentence(uint64_t)> at;
  std::optional<uint64_t> size;
};

struct EliminationOptions {
  uint64_t budget = 10000;   // exercised-pair budget
  bool fast_path = true;     // try the syntactic iota-inverse first
  std::vector<StructurePtr> refuter_battery;  // pre-filter, may be empty
  uint64_t start_pair = 0;   // resume frontier
};

struct SearchOutcome {
  enum class Status { Found, BudgetExhausted } status = Status::BudgetExhausted;
  std::optional<Sentence> candidate;
  uint64_t pairs_visited = 0;  // pairs on which work was done
  uint64_t frontier = 0;       // next pair index to resume from
  bool used_fast_path = false;
  std::string detail;
};

// Walks the pairs (l, m) in the dovetailing order, reading l as the prover
// tick budget and m as the candidate index, and returns the first candidate
// phi_m whose equivalence psi <-> iota(phi_m) the prover establishes.
// Candidates refuted outright (by the battery or by an exact prover) are
// dead: their later pairs are skipped without consuming budget. With the
// fast path enabled, a syntactic inverse image of psi under iota is checked
// first and returned on literal identity.
SearchOutcome search_elimination(const Sentence& psi, const TranslationMap& iota,
                                 const CandidateEnumerator& candidates, const Prover& prover,
                                 EliminationOptions opts = {});

// As search_elimination, but candidates are drawn from the fragment graded
// at the quantifier budget of psi: the factory maps a budget n to an
// enumerator of the candidate fragment intersected with Sent_{exists_n}.
// The returned sentence satisfies e(phi) <= e(psi).
SearchOutcome search_elimination_graded(
    const Sentence& psi, const TranslationMap& iota,
    const std::function<CandidateEnumerator(int)>& graded_candidates, const Prover& prover,
    EliminationOptions opts = {});

}  // namespace ffrag

#endif  // FFRAG_ELIMINATE_HPP
