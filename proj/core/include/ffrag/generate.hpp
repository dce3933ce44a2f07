#ifndef FFRAG_GENERATE_HPP
#define FFRAG_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/toy.hpp"

namespace ffrag {

// Deterministic bounded randomness: raw mt19937_64 output reduced by
// modulus, so corpora are reproducible across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t next(uint64_t bound);  // uniform-ish in [0, bound)
  bool flip() { return next(2) == 1; }

 private:
  std::mt19937_64 g_;
};

struct GenOptions {
  int max_depth = 4;        // connective depth
  int max_quantifiers = 3;  // per sentence
  int max_term_depth = 2;
};

// Closed well-sorted ring sentences with arbitrary connectives/quantifiers.
Sentence gen_ring_sentence(Rng& rng, const GenOptions& opts = {});

// As gen_ring_sentence but over the one-sorted valued-field language, with
// O atoms mixed into the leaves.
Sentence gen_onesorted_sentence(Rng& rng, const GenOptions& opts = {});

// and/or combinations of prenex-existential blocks, each with at most
// `quantifiers_per_leaf` quantifiers.
Sentence gen_existential_ring_sentence(Rng& rng, int quantifiers_per_leaf, int depth = 2);

// Toy-language sentences (literal leaves, and/or spine) of the given depth.
Sentence gen_toy_sentence(Rng& rng, const ToyInstance& inst, int depth);

}  // namespace ffrag

#endif  // FFRAG_GENERATE_HPP
