#ifndef FFRAG_FRAGMENTS_HPP
#define FFRAG_FRAGMENTS_HPP

#include <optional>
#include <string>

#include "ffrag/ast.hpp"

namespace ffrag {

enum class FragmentKind { QF, Exists, ExistsN, Forall, ForallN, BarExists, BarForall, All };

struct FragmentDescriptor {
  FragmentKind kind = FragmentKind::All;
  int n = 0;  // ExistsN / ForallN bound
  const Signature* sig = nullptr;

  std::string cli_name() const;  // qf, exists, exists:N, forall, forall:N, bar-exists, all
};

FragmentDescriptor fragment_qf(const Signature& sig);
FragmentDescriptor fragment_exists(const Signature& sig);
FragmentDescriptor fragment_exists_n(const Signature& sig, int n);
FragmentDescriptor fragment_forall(const Signature& sig);
FragmentDescriptor fragment_forall_n(const Signature& sig, int n);
FragmentDescriptor fragment_bar_exists(const Signature& sig);
FragmentDescriptor fragment_all(const Signature& sig);
std::optional<FragmentDescriptor> fragment_from_cli_name(const std::string& name, const Signature& sig);

// Structural membership flags. A sentence is in Sent_exists iff it is built
// by and/or from prenex-existential sentences (a quantifier-free sentence is
// a prenex block with zero quantifiers); dually for Sent_forall. Bar
// fragments admit negation at prenex leaves only. The quantifier budgets are
// the max block size over leaves, -1 when the flag is unset.
struct Membership {
  bool qf = false;
  bool exists = false;
  bool forall = false;
  bool bar_exists = false;
  bool bar_forall = false;
  int exists_budget = -1;
  int forall_budget = -1;

  bool in(const FragmentDescriptor& f) const;
};

Membership classify(const Sentence& s);

// min n with s in Sent_{exists_n}; throws NotExistential when the flag is unset.
int quantifier_budget(const Sentence& s);

// True iff s is built by and/or from members of base and negations of
// prenex leaves of base. base must be Exists or Forall.
bool bar_member(const Sentence& s, const FragmentDescriptor& base);

}  // namespace ffrag

#endif  // FFRAG_FRAGMENTS_HPP
