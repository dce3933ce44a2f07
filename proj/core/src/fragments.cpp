#include "ffrag/fragments.hpp"

namespace ffrag {

std::string FragmentDescriptor::cli_name() const {
  switch (kind) {
    case FragmentKind::QF: return "qf";
    case FragmentKind::Exists: return "exists";
    case FragmentKind::ExistsN: return "exists:" + std::to_string(n);
    case FragmentKind::Forall: return "forall";
    case FragmentKind::ForallN: return "forall:" + std::to_string(n);
    case FragmentKind::BarExists: return "bar-exists";
    case FragmentKind::BarForall: return "bar-forall";
    case FragmentKind::All: return "all";
  }
  return "all";
}

FragmentDescriptor fragment_qf(const Signature& sig) { return {FragmentKind::QF, 0, &sig}; }
FragmentDescriptor fragment_exists(const Signature& sig) { return {FragmentKind::Exists, 0, &sig}; }
FragmentDescriptor fragment_exists_n(const Signature& sig, int n) {
  return {FragmentKind::ExistsN, n, &sig};
}
FragmentDescriptor fragment_forall(const Signature& sig) { return {FragmentKind::Forall, 0, &sig}; }
FragmentDescriptor fragment_forall_n(const Signature& sig, int n) {
  return {FragmentKind::ForallN, n, &sig};
}
FragmentDescriptor fragment_bar_exists(const Signature& sig) {
  return {FragmentKind::BarExists, 0, &sig};
}
FragmentDescriptor fragment_all(const Signature& sig) { return {FragmentKind::All, 0, &sig}; }

std::optional<FragmentDescriptor> fragment_from_cli_name(const std::string& name,
                                                         const Signature& sig) {
  if (name == "qf") return fragment_qf(sig);
  if (name == "exists") return fragment_exists(sig);
  if (name == "forall") return fragment_forall(sig);
  if (name == "bar-exists") return fragment_bar_exists(sig);
  if (name == "bar-forall") return FragmentDescriptor{FragmentKind::BarForall, 0, &sig};
  if (name == "all") return fragment_all(sig);
  auto parse_n = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      size_t used = 0;
      int n = std::stoi(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size() || n < 0) return std::nullopt;
      return n;
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto n = parse_n("exists:")) return fragment_exists_n(sig, *n);
  if (auto n = parse_n("forall:")) return fragment_forall_n(sig, *n);
  return std::nullopt;
}

namespace {

bool is_qf(const Formula& f) {
  if (f.is_quantifier()) return false;
  for (const Formula& k : f.kids)
    if (!is_qf(k)) return false;
  return true;
}

// Number of quantifiers when f is a prenex block of the given polarity over
// a quantifier-free body (zero quantifiers included); nullopt otherwise.
std::optional<int> prenex_block(const Formula& f, bool exists) {
  const Formula* cur = &f;
  int count = 0;
  Formula::Kind want = exists ? Formula::Kind::Exists : Formula::Kind::Forall;
  while (cur->kind == want) {
    ++count;
    cur = &cur->kids[0];
  }
  if (!is_qf(*cur)) return std::nullopt;
  return count;
}

// max leaf block size when f is an and/or combination of prenex blocks of
// the given polarity (and truth constants); nullopt otherwise.
std::optional<int> combo_budget(const Formula& f, bool exists) {
  if (f.kind == Formula::Kind::True || f.kind == Formula::Kind::False) return 0;
  if (f.kind == Formula::Kind::And || f.kind == Formula::Kind::Or) {
    auto a = combo_budget(f.kids[0], exists);
    if (!a) return std::nullopt;
    auto b = combo_budget(f.kids[1], exists);
    if (!b) return std::nullopt;
    return std::max(*a, *b);
  }
  return prenex_block(f, exists);
}

// Negation is admitted at prenex leaves only, and a universal block counts
// as the (de-Morganized) negation of an existential one, so the bar closure
// of either polarity is the fragment of and/or combinations of existential
// and universal sentences.
bool bar_leaf(const Formula& f) {
  const Formula* g = f.kind == Formula::Kind::Not ? &f.kids[0] : &f;
  return prenex_block(*g, true).has_value() || prenex_block(*g, false).has_value();
}

bool bar_combo(const Formula& f) {
  if (f.kind == Formula::Kind::True || f.kind == Formula::Kind::False) return true;
  if (f.kind == Formula::Kind::And || f.kind == Formula::Kind::Or)
    return bar_combo(f.kids[0]) && bar_combo(f.kids[1]);
  return bar_leaf(f);
}

}  // namespace

Membership classify(const Sentence& s) {
  Membership m;
  m.qf = is_qf(s);
  if (auto e = combo_budget(s, true)) {
    m.exists = true;
    m.exists_budget = *e;
  }
  if (auto u = combo_budget(s, false)) {
    m.forall = true;
    m.forall_budget = *u;
  }
  m.bar_exists = bar_combo(s);
  m.bar_forall = m.bar_exists;
  return m;
}

bool Membership::in(const FragmentDescriptor& f) const {
  switch (f.kind) {
    case FragmentKind::QF: return qf;
    case FragmentKind::Exists: return exists;
    case FragmentKind::ExistsN: return exists && exists_budget <= f.n;
    case FragmentKind::Forall: return forall;
    case FragmentKind::ForallN: return forall && forall_budget <= f.n;
    case FragmentKind::BarExists: return bar_exists;
    case FragmentKind::BarForall: return bar_forall;
    case FragmentKind::All: return true;
  }
  return false;
}

int quantifier_budget(const Sentence& s) {
  auto e = combo_budget(s, true);
  if (!e) throw Error(ErrorKind::NotExistential, "sentence is not in the existential fragment");
  return *e;
}

bool bar_member(const Sentence& s, const FragmentDescriptor& base) {
  if (base.kind != FragmentKind::Exists && base.kind != FragmentKind::Forall)
    throw Error(ErrorKind::Usage, "bar base must be exists or forall");
  return bar_combo(s);
}

}  // namespace ffrag
