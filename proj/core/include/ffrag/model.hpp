#ifndef FFRAG_MODEL_HPP
#define FFRAG_MODEL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"

namespace ffrag {

// A finite structure: carriers are 0..size-1 per sort, elements addressed by
// index. Implementations are immutable after construction.
class Structure {
 public:
  virtual ~Structure() = default;
  virtual const Signature& sig() const = 0;
  virtual std::string name() const = 0;
  virtual size_t carrier_size(const std::string& sort) const = 0;
  virtual size_t apply(const std::string& fun, const std::vector<size_t>& args) const = 0;
  virtual bool holds(const std::string& rel, const std::vector<size_t>& args) const = 0;
  virtual size_t constant_value(const std::string& name) const = 0;
  virtual std::string element_name(const std::string& sort, size_t idx) const;
};

using StructurePtr = std::shared_ptr<const Structure>;

// Tarski semantics with quantifier exhaustion over the finite carriers.
// Throws SignatureMismatch when the sentence uses a symbol or sort the
// structure's signature does not provide.
bool evaluate(const Structure& m, const Sentence& s);

// Table-backed structure, loadable from the JSON format
//   {"sorts": {"K": ["0","1"]},
//    "functions": {"+.K": [["0","0","0"], ...]},
//    "relations": {"O": [["0"], ...]},
//    "constants": {"0.K": "0"}}
// Tables must be total and sort-correct.
class TableStructure : public Structure {
 public:
  TableStructure(std::string name, Signature sig,
                 std::map<std::string, std::vector<std::string>> sorts,
                 std::map<std::string, std::map<std::vector<size_t>, size_t>> functions,
                 std::map<std::string, std::set<std::vector<size_t>>> relations,
                 std::map<std::string, size_t> constants);

  static std::shared_ptr<TableStructure> from_json_text(const std::string& json_text,
                                                        const Signature& sig,
                                                        const std::string& name);

  const Signature& sig() const override { return sig_; }
  std::string name() const override { return name_; }
  size_t carrier_size(const std::string& sort) const override;
  size_t apply(const std::string& fun, const std::vector<size_t>& args) const override;
  bool holds(const std::string& rel, const std::vector<size_t>& args) const override;
  size_t constant_value(const std::string& name) const override;
  std::string element_name(const std::string& sort, size_t idx) const override;

 private:
  std::string name_;
  Signature sig_;
  std::map<std::string, std::vector<std::string>> sorts_;
  std::map<std::string, std::map<std::vector<size_t>, size_t>> functions_;
  std::map<std::string, std::set<std::vector<size_t>>> relations_;
  std::map<std::string, size_t> constants_;
};

// Z/n as a ring-signature structure with computed (not tabulated) arithmetic,
// so prime fields stay cheap for moduli in the thousands.
class ZmodStructure : public Structure {
 public:
  explicit ZmodStructure(uint64_t n);
  const Signature& sig() const override;
  std::string name() const override { return "Z/" + std::to_string(n_); }
  size_t carrier_size(const std::string& sort) const override;
  size_t apply(const std::string& fun, const std::vector<size_t>& args) const override;
  bool holds(const std::string& rel, const std::vector<size_t>& args) const override;
  size_t constant_value(const std::string& name) const override;
  std::string element_name(const std::string& sort, size_t idx) const override;

 private:
  uint64_t n_;
};

StructurePtr zmod(uint64_t n);
StructurePtr prime_field(uint64_t p);  // Z/p; throws NotPrime
StructurePtr gf4();                    // the field with four elements
StructurePtr f2_dual_numbers();        // F_2[x]/(x^2)

// True iff the ring-signature structure satisfies the commutative ring axioms
// with 1 (checked exhaustively).
bool is_ring(const Structure& m);
// True iff additionally 0 != 1 and every nonzero element has an inverse.
bool is_field(const Structure& m);

// The trivially valued three-sorted wrapper of a finite field F: K and k are
// F itself, G = {0, inf}, v(x) = 0 for x != 0 and v(0) = inf, res = identity.
// Throws NotAField.
StructurePtr trivially_valued(StructurePtr field);

// A propositional structure: an assignment to the nullary relation symbols,
// bit i of `assignment` giving the value of the i-th relation.
class PropStructure : public Structure {
 public:
  PropStructure(Signature sig, uint64_t assignment);
  const Signature& sig() const override { return sig_; }
  std::string name() const override;
  size_t carrier_size(const std::string& sort) const override;
  size_t apply(const std::string& fun, const std::vector<size_t>& args) const override;
  bool holds(const std::string& rel, const std::vector<size_t>& args) const override;
  size_t constant_value(const std::string& name) const override;
  uint64_t assignment() const { return assignment_; }

 private:
  Signature sig_;
  uint64_t assignment_;
};

// All 2^k assignments over the given propositional signature.
std::vector<StructurePtr> all_assignments(const Signature& prop_sig);

struct InclusionResult {
  bool included = true;
  // On failure: an existential sentence (at most n quantifiers) true in M and
  // false in N, plus the generating tuple that produced it.
  std::optional<Sentence> witness;
  std::vector<std::string> generator_names;
};

// Decides Th_{exists_n}(M) <= Th_{exists_n}(N) via the substructure
// criterion: every substructure of M generated by at most n elements must
// embed into N. Candidates are tried in carrier-index order, so the result
// and witness are deterministic.
InclusionResult exists_n_inclusion(const Structure& M, const Structure& N, int n);

}  // namespace ffrag

#endif  // FFRAG_MODEL_HPP
