#include "ffrag/interpret.hpp"

#include "ffrag/print.hpp"

namespace ffrag {

namespace {

Term residue_term(const Term& t) {
  const Signature& val = valued_signature();
  switch (t.kind) {
    case Term::Kind::Var:
      return Term::var(t.name, "k");
    case Term::Kind::Const:
      if (t.name == "0.K") return Term::constant(val, "0.k");
      if (t.name == "1.K") return Term::constant(val, "1.k");
      throw Error(ErrorKind::UnknownSymbol, "not a ring constant: " + t.name);
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const Term& a : t.args) args.push_back(residue_term(a));
      if (t.name == "+.K") return Term::app(val, "+.k", std::move(args));
      if (t.name == "-.K") return Term::app(val, "-.k", std::move(args));
      if (t.name == "*.K") return Term::app(val, "*.k", std::move(args));
      throw Error(ErrorKind::UnknownSymbol, "not a ring function: " + t.name);
    }
  }
  throw Error(ErrorKind::Sort, "bad term");
}

}  // namespace

Sentence residue_interpret(const Sentence& phi) {
  Formula r = phi;
  switch (phi.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return r;
    case Formula::Kind::Eq:
      return f_eq(residue_term(phi.terms[0]), residue_term(phi.terms[1]));
    case Formula::Kind::Rel:
      throw Error(ErrorKind::UnknownSymbol, "ring language has no relations");
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      r.sort = "k";
      r.kids[0] = residue_interpret(phi.kids[0]);
      return r;
    default:
      for (size_t i = 0; i < r.kids.size(); ++i) r.kids[i] = residue_interpret(phi.kids[i]);
      return r;
  }
}

Sentence onesorted_to_valued(const Sentence& phi) {
  const Signature& val = valued_signature();
  Formula r = phi;
  switch (phi.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Eq:
      return r;  // ring terms carry sort K unchanged
    case Formula::Kind::Rel: {
      if (phi.name != "O")
        throw Error(ErrorKind::UnknownSymbol, "unexpected relation " + phi.name);
      Term v = Term::app(val, "v", {phi.terms[0]});
      return f_not(f_rel(val, "<.G", {std::move(v), Term::constant(val, "0.G")}));
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      r.kids[0] = onesorted_to_valued(phi.kids[0]);
      return r;  // quantifiers stay over K
    default:
      for (size_t i = 0; i < r.kids.size(); ++i) r.kids[i] = onesorted_to_valued(phi.kids[i]);
      return r;
  }
}

TranslationMap identity_map() {
  TranslationMap m;
  m.name = "identity";
  m.apply = [](const Sentence& s) { return s; };
  m.invert = [](const Sentence& s) -> std::optional<Sentence> { return s; };
  return m;
}

TranslationMap residue_map() {
  TranslationMap m;
  m.name = "residue";
  m.apply = residue_interpret;
  m.source_fragment = fragment_exists(ring_signature());
  m.target_fragment = fragment_exists(valued_signature());
  m.invert = [](const Sentence& s) -> std::optional<Sentence> {
    // de-relativize: succeeds exactly on the image of residue_interpret
    std::function<std::optional<Term>(const Term&)> term = [&](const Term& t) -> std::optional<Term> {
      const Signature& ring = ring_signature();
      switch (t.kind) {
        case Term::Kind::Var:
          if (t.sort != "k") return std::nullopt;
          return Term::var(t.name, "K");
        case Term::Kind::Const:
          if (t.name == "0.k") return Term::constant(ring, "0.K");
          if (t.name == "1.k") return Term::constant(ring, "1.K");
          return std::nullopt;
        case Term::Kind::App: {
          std::string base;
          if (t.name == "+.k") base = "+.K";
          else if (t.name == "-.k") base = "-.K";
          else if (t.name == "*.k") base = "*.K";
          else return std::nullopt;
          std::vector<Term> args;
          for (const Term& a : t.args) {
            auto r = term(a);
            if (!r) return std::nullopt;
            args.push_back(std::move(*r));
          }
          return Term::app(ring, base, std::move(args));
        }
      }
      return std::nullopt;
    };
    std::function<std::optional<Formula>(const Formula&)> go =
        [&](const Formula& f) -> std::optional<Formula> {
      Formula r = f;
      switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
          return r;
        case Formula::Kind::Eq: {
          auto a = term(f.terms[0]);
          auto b = term(f.terms[1]);
          if (!a || !b) return std::nullopt;
          return f_eq(std::move(*a), std::move(*b));
        }
        case Formula::Kind::Rel:
          return std::nullopt;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
          if (f.sort != "k") return std::nullopt;
          auto body = go(f.kids[0]);
          if (!body) return std::nullopt;
          r.sort = "K";
          r.kids[0] = std::move(*body);
          return r;
        }
        default: {
          for (size_t i = 0; i < r.kids.size(); ++i) {
            auto k = go(f.kids[i]);
            if (!k) return std::nullopt;
            r.kids[i] = std::move(*k);
          }
          return r;
        }
      }
    };
    return go(s);
  };
  return m;
}

TranslationMap onesorted_map() {
  TranslationMap m;
  m.name = "onesorted";
  m.apply = onesorted_to_valued;
  return m;
}

TranslationMap prop_rename_map(std::shared_ptr<const Signature> from,
                               std::shared_ptr<const Signature> to) {
  if (from->relations().size() != to->relations().size())
    throw Error(ErrorKind::SignatureMismatch, "atom counts differ");
  auto rename = [](std::shared_ptr<const Signature> src, std::shared_ptr<const Signature> dst,
                   const Sentence& s) -> std::optional<Sentence> {
    std::function<std::optional<Formula>(const Formula&)> go =
        [&](const Formula& f) -> std::optional<Formula> {
      Formula r = f;
      if (f.kind == Formula::Kind::Rel) {
        for (size_t i = 0; i < src->relations().size(); ++i)
          if (src->relations()[i].name == f.name) {
            r.name = dst->relations()[i].name;
            return r;
          }
        return std::nullopt;
      }
      if (f.is_quantifier()) return std::nullopt;
      for (size_t i = 0; i < r.kids.size(); ++i) {
        auto k = go(f.kids[i]);
        if (!k) return std::nullopt;
        r.kids[i] = std::move(*k);
      }
      return r;
    };
    return go(s);
  };
  TranslationMap m;
  m.name = "rename(" + from->name() + "->" + to->name() + ")";
  m.apply = [=](const Sentence& s) {
    auto r = rename(from, to, s);
    if (!r) throw Error(ErrorKind::SignatureMismatch, "sentence not over the source atoms");
    return *r;
  };
  m.invert = [=](const Sentence& s) { return rename(to, from, s); };
  return m;
}

Theory Theory::explicit_theory(std::vector<Sentence> axioms) {
  Theory t;
  t.explicit_ = std::move(axioms);
  return t;
}

Theory Theory::intensional(std::function<bool(const Sentence&)> member,
                           std::function<Sentence(size_t)> enumerate,
                           std::function<bool(const Structure&)> satisfies) {
  Theory t;
  t.member_ = std::move(member);
  t.enumerate_ = std::move(enumerate);
  t.satisfies_ = std::move(satisfies);
  return t;
}

const std::vector<Sentence>& Theory::axioms() const {
  if (!explicit_) throw Error(ErrorKind::Usage, "intensional theory has no finite axiom list");
  return *explicit_;
}

bool Theory::member(const Sentence& s) const {
  if (explicit_) {
    for (const Sentence& a : *explicit_)
      if (a == s) return true;
    return false;
  }
  return member_(s);
}

bool Theory::satisfied_by(const Structure& m) const {
  if (explicit_) {
    for (const Sentence& a : *explicit_)
      if (!evaluate(m, a)) return false;
    return true;
  }
  if (!satisfies_)
    throw Error(ErrorKind::Usage, "intensional theory without a satisfaction predicate");
  return satisfies_(m);
}

std::function<bool(const Sentence&)> fragment_restriction(const Theory& t,
                                                          const FragmentDescriptor& frag) {
  return [t, frag](const Sentence& s) { return classify(s).in(frag) && t.member(s); };
}

bool fragments_respected(const TranslationMap& map, const std::vector<Sentence>& corpus) {
  if (!map.source_fragment || !map.target_fragment) return true;
  for (const Sentence& s : corpus) {
    if (!classify(s).in(*map.source_fragment)) continue;
    if (!classify(map.apply(s)).in(*map.target_fragment)) return false;
  }
  return true;
}

std::vector<LawReport> check_arch(const ArchDescriptor& arch,
                                  const std::vector<Sentence>& corpus1) {
  std::vector<LawReport> out;
  std::string h = corpus_hash(corpus1);

  LawReport theories{"arch: theories unchanged", true, "", h};
  auto same_theory = [](const Theory& a, const Theory& b) {
    if (a.is_explicit() != b.is_explicit()) return false;
    if (!a.is_explicit()) return true;  // intensional handles compare by use
    return a.axioms() == b.axioms();
  };
  if (!same_theory(arch.base.c1.theory, arch.hat.c1.theory) ||
      !same_theory(arch.base.c2.theory, arch.hat.c2.theory))
    theories.pass = false;
  out.push_back(theories);

  LawReport subfragment{"arch: base fragments contained in hat fragments", true, "", h};
  for (const Sentence& s : corpus1) {
    Membership m = classify(s);
    if (m.in(arch.base.c1.fragment) && !m.in(arch.hat.c1.fragment)) {
      subfragment.pass = false;
      subfragment.witness = print_canonical(s);
      break;
    }
  }
  out.push_back(subfragment);

  LawReport lands{"arch: iota maps base L1 into base L2", true, "", h};
  for (const Sentence& s : corpus1) {
    if (!classify(s).in(arch.base.c1.fragment)) continue;
    if (!classify(arch.iota.apply(s)).in(arch.base.c2.fragment)) {
      lands.pass = false;
      lands.witness = print_canonical(s);
      break;
    }
  }
  out.push_back(lands);
  return out;
}

std::string corpus_hash(const std::vector<Sentence>& corpus) {
  uint64_t h = 1469598103934665603ull;
  for (const Sentence& s : corpus) {
    std::string text = print_canonical(s);
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x0a;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// entailment relative to the universe: true in every model of the theory
bool entails(const Theory& t, const std::vector<StructurePtr>& universe, const Sentence& s) {
  for (const StructurePtr& m : universe)
    if (t.satisfied_by(*m) && !evaluate(*m, s)) return false;
  return true;
}

// truth of s in every theory-model where phi holds iff psi holds
bool entails_iff(const Theory& t, const std::vector<StructurePtr>& universe, const Sentence& a,
                 const Sentence& b) {
  for (const StructurePtr& m : universe)
    if (t.satisfied_by(*m) && evaluate(*m, a) != evaluate(*m, b)) return false;
  return true;
}

}  // namespace

std::vector<LawReport> verify_translation_laws(
    const TranslationMap& tau1, const TranslationMap* tau2, const Context& c1, const Context& c2,
    const std::vector<StructurePtr>& universe1, const std::vector<StructurePtr>& universe2,
    const std::vector<Sentence>& corpus1, const std::vector<Sentence>& corpus2) {
  if (universe1.empty() || universe2.empty())
    throw Error(ErrorKind::UniverseEmpty, "translation laws need nonempty universes");
  std::vector<LawReport> out;
  std::string h1 = corpus_hash(corpus1), h2 = corpus_hash(corpus2);

  LawReport trans1{"translation(tau1)", true, "", h1};
  for (const Sentence& phi : corpus1) {
    bool lhs = entails(c1.theory, universe1, phi);
    bool rhs = entails(c2.theory, universe2, tau1.apply(phi));
    if (lhs != rhs) {
      trans1.pass = false;
      trans1.witness = print_canonical(phi);
      break;
    }
  }
  out.push_back(trans1);

  if (tau2) {
    LawReport trans2{"translation(tau2)", true, "", h2};
    for (const Sentence& psi : corpus2) {
      bool lhs = entails(c2.theory, universe2, psi);
      bool rhs = entails(c1.theory, universe1, tau2->apply(psi));
      if (lhs != rhs) {
        trans2.pass = false;
        trans2.witness = print_canonical(psi);
        break;
      }
    }
    out.push_back(trans2);

    LawReport bi1{"bitranslation(tau2.tau1)", true, "", h1};
    for (const Sentence& phi : corpus1) {
      if (!entails_iff(c1.theory, universe1, phi, tau2->apply(tau1.apply(phi)))) {
        bi1.pass = false;
        bi1.witness = print_canonical(phi);
        break;
      }
    }
    out.push_back(bi1);

    LawReport bi2{"bitranslation(tau1.tau2)", true, "", h2};
    for (const Sentence& psi : corpus2) {
      if (!entails_iff(c2.theory, universe2, psi, tau1.apply(tau2->apply(psi)))) {
        bi2.pass = false;
        bi2.witness = print_canonical(psi);
        break;
      }
    }
    out.push_back(bi2);
  }
  return out;
}

namespace {

// corpus-relative theory of a model: the subset of the corpus it satisfies
std::vector<bool> theory_vector(const Structure& m, const std::vector<Sentence>& corpus) {
  std::vector<bool> v;
  v.reserve(corpus.size());
  for (const Sentence& s : corpus) v.push_back(evaluate(m, s));
  return v;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

BridgeAxiomReports verify_bridge_axioms(const BridgeDescriptor& b,
                                        const std::vector<StructurePtr>& universe2,
                                        const std::vector<StructurePtr>& universe1,
                                        const std::vector<Sentence>& corpus1,
                                        const std::vector<Sentence>& corpus2,
                                        const std::vector<Sentence>& corpus_hat) {
  BridgeAxiomReports rep;
  std::string h = corpus_hash(corpus1);
  rep.sur = {"sur", true, "", h};
  rep.mon = {"mon", true, "", h};
  rep.wm = {"wm", true, "", h};

  std::vector<StructurePtr> models2;
  for (const StructurePtr& m : universe2)
    if (b.c2.theory.satisfied_by(*m)) models2.push_back(m);
  std::vector<StructurePtr> models1;
  for (const StructurePtr& n : universe1)
    if (b.c1.theory.satisfied_by(*n)) models1.push_back(n);

  // (sur): every T1-model matches the sigma-image of some T2-model on the
  // L1 corpus
  for (const StructurePtr& n : models1) {
    std::vector<bool> tn = theory_vector(*n, corpus1);
    bool found = false;
    for (const StructurePtr& m : models2) {
      if (theory_vector(*b.sigma(m), corpus1) == tn) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.sur.pass = false;
      rep.sur.witness = n->name();
      break;
    }
  }

  // (mon)
  for (const StructurePtr& m : models2) {
    std::vector<bool> sm1 = theory_vector(*b.sigma(m), corpus1);
    std::vector<bool> m2 = theory_vector(*m, corpus2);
    for (const StructurePtr& mp : models2) {
      std::vector<bool> smp1 = theory_vector(*b.sigma(mp), corpus1);
      if (!subset(sm1, smp1)) continue;
      std::vector<bool> mp2 = theory_vector(*mp, corpus2);
      if (!subset(m2, mp2)) {
        rep.mon.pass = false;
        rep.mon.witness = m->name() + " vs " + mp->name();
        break;
      }
    }
    if (!rep.mon.pass) break;
  }

  // (wm)
  for (const StructurePtr& m : models2) {
    std::vector<bool> sm1 = theory_vector(*b.sigma(m), corpus1);
    std::vector<bool> m2 = theory_vector(*m, corpus2);
    for (const StructurePtr& n : models1) {
      if (!subset(theory_vector(*n, corpus1), sm1)) continue;
      std::vector<bool> n_hat = theory_vector(*n, corpus_hat);
      bool found = false;
      for (const StructurePtr& mp : models2) {
        if (theory_vector(*b.sigma(mp), corpus_hat) == n_hat &&
            subset(theory_vector(*mp, corpus2), m2)) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.wm.pass = false;
        rep.wm.witness = m->name() + " / " + n->name();
        break;
      }
    }
    if (!rep.wm.pass) break;
  }

  return rep;
}

}  // namespace ffrag
