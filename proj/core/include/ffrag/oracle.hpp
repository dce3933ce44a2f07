#ifndef FFRAG_ORACLE_HPP
#define FFRAG_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "ffrag/ast.hpp"

namespace ffrag {

enum class Verdict { Yes, No, Unknown };
enum class Soundness { Exact, RefutationSound, WitnessSound };

std::string to_string(Verdict v);
std::string to_string(Soundness s);

struct OracleAnswer {
  Verdict verdict = Verdict::Unknown;
  Soundness soundness = Soundness::Exact;
  std::string evidence;
};

using SentenceOracle = std::function<OracleAnswer(const Sentence&)>;
using IndexedOracle = std::function<OracleAnswer(const Sentence&, int)>;

// Full first-order truth in F_p by exhaustion. Exact. Throws NotPrime.
OracleAnswer decide_finite_field(uint64_t p, const Sentence& s);

// Truth in Q of a sentence whose prenex leaves have at most one quantifier:
// per-leaf DNF, the rational root theorem for equation-constrained disjuncts,
// infinitude of Q for purely disequational ones. Exact.
// Throws BudgetExceeded when a leaf has two or more quantifiers,
// NotExistential for non-existential shapes.
OracleAnswer decide_exists1_Q(const Sentence& s);

// Refutation-sound sweep of the primes up to B: No with a witness prime if
// some F_p refutes, otherwise Unknown ("holds for all p <= B"), never Yes.
OracleAnswer bounded_prime_check(const Sentence& s, uint64_t bound);

}  // namespace ffrag

#endif  // FFRAG_ORACLE_HPP
