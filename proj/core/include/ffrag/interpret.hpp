#ifndef FFRAG_INTERPRET_HPP
#define FFRAG_INTERPRET_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/fragments.hpp"
#include "ffrag/model.hpp"

namespace ffrag {

// Relativizes a ring sentence to the residue-field sort: constants and
// operations move to sort k, quantifiers range over k, connectives are
// untouched. Distributes over and/or as a syntactic identity.
Sentence residue_interpret(const Sentence& phi);

// Moves a one-sorted valued-field sentence into the three-sorted language:
// ring material goes to sort K unchanged, O(t) becomes (not (v(t) < 0)), so
// quantifier-free formulas stay quantifier-free.
Sentence onesorted_to_valued(const Sentence& phi);

// A total computable sentence map, optionally with a syntactic partial
// inverse (used by the elimination fast path) and declared source/target
// fragments (checked corpus-relative by fragments_respected).
struct TranslationMap {
  std::string name;
  std::function<Sentence(const Sentence&)> apply;
  std::function<std::optional<Sentence>(const Sentence&)> invert;  // may be empty
  std::optional<FragmentDescriptor> source_fragment;
  std::optional<FragmentDescriptor> target_fragment;
};

// True iff the map sends every corpus member of its source fragment into
// its target fragment (vacuously true when fragments are undeclared).
bool fragments_respected(const TranslationMap& map, const std::vector<Sentence>& corpus);

TranslationMap identity_map();
TranslationMap residue_map();
TranslationMap onesorted_map();
// Renames propositional atoms by index between two signatures of equal
// arity, e.g. r_i -> s_i; invertible.
TranslationMap prop_rename_map(std::shared_ptr<const Signature> from,
                               std::shared_ptr<const Signature> to);

// A theory: an explicit finite sentence set, or an intensional handle.
class Theory {
 public:
  static Theory explicit_theory(std::vector<Sentence> axioms);
  static Theory intensional(std::function<bool(const Sentence&)> member,
                            std::function<Sentence(size_t)> enumerate,
                            std::function<bool(const Structure&)> satisfies);

  bool is_explicit() const { return explicit_.has_value(); }
  const std::vector<Sentence>& axioms() const;
  bool member(const Sentence& s) const;
  // Does the model satisfy the theory? Explicit theories evaluate every
  // axiom; intensional ones defer to the supplied predicate.
  bool satisfied_by(const Structure& m) const;

 private:
  std::optional<std::vector<Sentence>> explicit_;
  std::function<bool(const Sentence&)> member_;
  std::function<Sentence(size_t)> enumerate_;
  std::function<bool(const Structure&)> satisfies_;
};

// Fragment restriction view T_L: membership in T and in L.
std::function<bool(const Sentence&)> fragment_restriction(const Theory& t,
                                                          const FragmentDescriptor& frag);

struct Context {
  FragmentDescriptor fragment;
  Theory theory;
  const Signature* sig;
};

struct BridgeDescriptor {
  std::string name;
  Context c1, c2;
  std::function<StructurePtr(const StructurePtr&)> sigma;
};

struct ArchDescriptor {
  BridgeDescriptor base;
  BridgeDescriptor hat;  // fragment extension: same theories, larger fragments
  TranslationMap iota;
};

struct LawReport {
  std::string law;
  bool pass = true;
  std::string witness;  // first failing sentence / model pair
  std::string corpus_hash;
};

// Corpus-relative arch invariants: the hat bridge carries the same theories
// over larger fragments, and iota maps base-L1 corpus members into base-L2.
std::vector<LawReport> check_arch(const ArchDescriptor& arch,
                                  const std::vector<Sentence>& corpus1);

// Corpus- and universe-relative check of the translation laws:
//   T1 |= phi  iff  T2 |= tau1(phi)        (and dually for tau2 if present)
//   T1 |= phi <-> tau2(tau1(phi))          (bitranslation, first law)
//   T2 |= psi <-> tau1(tau2(psi))          (bitranslation, second law)
// Entailment means truth in every universe model of the theory. Throws
// UniverseEmpty when a needed universe is empty.
std::vector<LawReport> verify_translation_laws(
    const TranslationMap& tau1, const TranslationMap* tau2, const Context& c1, const Context& c2,
    const std::vector<StructurePtr>& universe1, const std::vector<StructurePtr>& universe2,
    const std::vector<Sentence>& corpus1, const std::vector<Sentence>& corpus2);

struct BridgeAxiomReports {
  LawReport sur, mon, wm;
};

// Corpus-relative bridge axioms over finite universes. corpus_hat is the
// fragment-extension corpus used by (wm); pass the L1 corpus again when no
// extension is meant.
BridgeAxiomReports verify_bridge_axioms(const BridgeDescriptor& b,
                                        const std::vector<StructurePtr>& universe2,
                                        const std::vector<StructurePtr>& universe1,
                                        const std::vector<Sentence>& corpus1,
                                        const std::vector<Sentence>& corpus2,
                                        const std::vector<Sentence>& corpus_hat);

// FNV-1a over the canonical texts; recorded in every report.
std::string corpus_hash(const std::vector<Sentence>& corpus);

}  // namespace ffrag

#endif  // FFRAG_INTERPRET_HPP
