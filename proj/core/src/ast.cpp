#include "ffrag/ast.hpp"

#include <algorithm>
#include <set>

namespace ffrag {

Signature::Signature(std::string name, std::vector<std::string> sorts,
                     std::vector<FunctionSymbol> functions,
                     std::vector<RelationSymbol> relations,
                     std::vector<ConstantSymbol> constants)
    : name_(std::move(name)),
      sorts_(std::move(sorts)),
      functions_(std::move(functions)),
      relations_(std::move(relations)),
      constants_(std::move(constants)) {
  for (size_t i = 0; i < sorts_.size(); ++i) {
    if (!sort_idx_.emplace(sorts_[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::Sort, "duplicate sort '" + sorts_[i] + "'");
  }
  auto need_sort = [&](const std::string& s, const std::string& sym) {
    if (!sort_idx_.count(s))
      throw Error(ErrorKind::Sort, "symbol '" + sym + "' references undeclared sort '" + s + "'");
  };
  std::set<std::string> names;
  auto claim = [&](const std::string& n) {
    if (!names.insert(n).second)
      throw Error(ErrorKind::Syntax, "duplicate symbol name '" + n + "'");
  };
  for (size_t i = 0; i < functions_.size(); ++i) {
    claim(functions_[i].name);
    for (const auto& s : functions_[i].arg_sorts) need_sort(s, functions_[i].name);
    need_sort(functions_[i].result_sort, functions_[i].name);
    fun_index_[functions_[i].name] = static_cast<int>(i);
  }
  for (size_t i = 0; i < relations_.size(); ++i) {
    claim(relations_[i].name);
    for (const auto& s : relations_[i].arg_sorts) need_sort(s, relations_[i].name);
    rel_index_[relations_[i].name] = static_cast<int>(i);
  }
  for (size_t i = 0; i < constants_.size(); ++i) {
    claim(constants_[i].name);
    need_sort(constants_[i].sort, constants_[i].name);
    const_index_[constants_[i].name] = static_cast<int>(i);
  }
}

bool Signature::has_sort(const std::string& s) const { return sort_idx_.count(s) > 0; }

int Signature::sort_index(const std::string& s) const {
  auto it = sort_idx_.find(s);
  return it == sort_idx_.end() ? -1 : it->second;
}

const FunctionSymbol* Signature::function(const std::string& n) const {
  auto it = fun_index_.find(n);
  return it == fun_index_.end() ? nullptr : &functions_[it->second];
}

const RelationSymbol* Signature::relation(const std::string& n) const {
  auto it = rel_index_.find(n);
  return it == rel_index_.end() ? nullptr : &relations_[it->second];
}

const ConstantSymbol* Signature::constant(const std::string& n) const {
  auto it = const_index_.find(n);
  return it == const_index_.end() ? nullptr : &constants_[it->second];
}

bool Signature::has_symbol(const std::string& n) const {
  return fun_index_.count(n) || rel_index_.count(n) || const_index_.count(n);
}

namespace {

std::vector<FunctionSymbol> ring_functions(const std::string& sort, const std::string& suffix) {
  return {
      {"+" + suffix, {sort, sort}, sort},
      {"-" + suffix, {sort, sort}, sort},
      {"*" + suffix, {sort, sort}, sort},
  };
}

std::vector<ConstantSymbol> ring_constants(const std::string& sort, const std::string& suffix) {
  return {{"0" + suffix, sort}, {"1" + suffix, sort}};
}

Signature make_ring() {
  return Signature("ring", {"K"}, ring_functions("K", ".K"), {}, ring_constants("K", ".K"));
}

Signature make_valued(bool with_varpi) {
  std::vector<FunctionSymbol> funs = ring_functions("K", ".K");
  for (auto& f : ring_functions("k", ".k")) funs.push_back(f);
  funs.push_back({"+.G", {"G", "G"}, "G"});
  funs.push_back({"v", {"K"}, "G"});
  funs.push_back({"res", {"K"}, "k"});
  std::vector<RelationSymbol> rels = {{"<.G", {"G", "G"}}};
  std::vector<ConstantSymbol> consts = ring_constants("K", ".K");
  for (auto& c : ring_constants("k", ".k")) consts.push_back(c);
  consts.push_back({"0.G", "G"});
  consts.push_back({"inf.G", "G"});
  if (with_varpi) consts.push_back({"varpi", "K"});
  return Signature(with_varpi ? "valued-varpi" : "valued", {"K", "k", "G"}, std::move(funs),
                   std::move(rels), std::move(consts));
}

Signature make_onesorted() {
  return Signature("onesorted", {"K"}, ring_functions("K", ".K"), {{"O", {"K"}}},
                   ring_constants("K", ".K"));
}

}  // namespace

const Signature& ring_signature() {
  static const Signature sig = make_ring();
  return sig;
}

const Signature& valued_signature() {
  static const Signature sig = make_valued(false);
  return sig;
}

const Signature& valued_varpi_signature() {
  static const Signature sig = make_valued(true);
  return sig;
}

const Signature& onesorted_signature() {
  static const Signature sig = make_onesorted();
  return sig;
}

Signature propositional_signature(const std::vector<std::string>& atoms) {
  std::vector<RelationSymbol> rels;
  rels.reserve(atoms.size());
  for (const auto& a : atoms) rels.push_back({a, {}});
  return Signature("prop", {}, {}, std::move(rels), {});
}

Term Term::var(std::string name, std::string sort) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  t.sort = std::move(sort);
  return t;
}

Term Term::constant(const Signature& sig, const std::string& name) {
  const ConstantSymbol* c = sig.constant(name);
  if (!c) throw Error(ErrorKind::UnknownSymbol, "unknown constant '" + name + "'");
  Term t;
  t.kind = Kind::Const;
  t.name = name;
  t.sort = c->sort;
  return t;
}

Term Term::app(const Signature& sig, const std::string& fun, std::vector<Term> args) {
  const FunctionSymbol* f = sig.function(fun);
  if (!f) throw Error(ErrorKind::UnknownSymbol, "unknown function '" + fun + "'");
  if (f->arg_sorts.size() != args.size())
    throw Error(ErrorKind::Sort, "function '" + fun + "' expects " +
                                     std::to_string(f->arg_sorts.size()) + " arguments");
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort != f->arg_sorts[i])
      throw Error(ErrorKind::Sort, "argument " + std::to_string(i) + " of '" + fun + "' has sort " +
                                       args[i].sort + ", expected " + f->arg_sorts[i]);
  }
  Term t;
  t.kind = Kind::App;
  t.name = fun;
  t.sort = f->result_sort;
  t.args = std::move(args);
  return t;
}

bool Term::operator==(const Term& o) const {
  return kind == o.kind && name == o.name && sort == o.sort && args == o.args;
}

bool Formula::operator==(const Formula& o) const {
  return kind == o.kind && name == o.name && sort == o.sort && terms == o.terms && kids == o.kids;
}

Formula f_true() { return Formula{}; }

Formula f_false() {
  Formula f;
  f.kind = Formula::Kind::False;
  return f;
}

Formula f_eq(Term lhs, Term rhs) {
  if (lhs.sort != rhs.sort)
    throw Error(ErrorKind::Sort, "equality between sorts " + lhs.sort + " and " + rhs.sort);
  Formula f;
  f.kind = Formula::Kind::Eq;
  f.terms = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula f_rel(const Signature& sig, const std::string& rel, std::vector<Term> args) {
  const RelationSymbol* r = sig.relation(rel);
  if (!r) throw Error(ErrorKind::UnknownSymbol, "unknown relation '" + rel + "'");
  if (r->arg_sorts.size() != args.size())
    throw Error(ErrorKind::Sort, "relation '" + rel + "' expects " +
                                     std::to_string(r->arg_sorts.size()) + " arguments");
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort != r->arg_sorts[i])
      throw Error(ErrorKind::Sort, "argument " + std::to_string(i) + " of '" + rel + "' has sort " +
                                       args[i].sort + ", expected " + r->arg_sorts[i]);
  }
  Formula f;
  f.kind = Formula::Kind::Rel;
  f.name = rel;
  f.terms = std::move(args);
  return f;
}

namespace {
Formula unary(Formula::Kind k, Formula f) {
  Formula r;
  r.kind = k;
  r.kids = {std::move(f)};
  return r;
}
Formula binary(Formula::Kind k, Formula a, Formula b) {
  Formula r;
  r.kind = k;
  r.kids = {std::move(a), std::move(b)};
  return r;
}
}  // namespace

Formula f_not(Formula f) { return unary(Formula::Kind::Not, std::move(f)); }
Formula f_and(Formula a, Formula b) { return binary(Formula::Kind::And, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(Formula::Kind::Or, std::move(a), std::move(b)); }
Formula f_implies(Formula a, Formula b) {
  return binary(Formula::Kind::Implies, std::move(a), std::move(b));
}
Formula f_iff(Formula a, Formula b) { return binary(Formula::Kind::Iff, std::move(a), std::move(b)); }

Formula f_exists(std::string var, std::string sort, Formula body) {
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.name = std::move(var);
  f.sort = std::move(sort);
  f.kids = {std::move(body)};
  return f;
}

Formula f_forall(std::string var, std::string sort, Formula body) {
  Formula f;
  f.kind = Formula::Kind::Forall;
  f.name = std::move(var);
  f.sort = std::move(sort);
  f.kids = {std::move(body)};
  return f;
}

Formula f_and_all(std::vector<Formula> fs) {
  if (fs.empty()) throw Error(ErrorKind::Syntax, "f_and_all on empty list");
  Formula acc = std::move(fs.back());
  for (size_t i = fs.size() - 1; i-- > 0;) acc = f_and(std::move(fs[i]), std::move(acc));
  return acc;
}

Formula f_or_all(std::vector<Formula> fs) {
  if (fs.empty()) throw Error(ErrorKind::Syntax, "f_or_all on empty list");
  Formula acc = std::move(fs.back());
  for (size_t i = fs.size() - 1; i-- > 0;) acc = f_or(std::move(fs[i]), std::move(acc));
  return acc;
}

namespace {

struct SortChecker {
  const Signature& sig;
  std::vector<SortViolation> out;
  std::vector<std::pair<std::string, std::string>> scope;  // (name, sort)

  void bad(ErrorKind k, const std::string& m) { out.push_back({k, m}); }

  void term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->first == t.name) {
            if (it->second != t.sort)
              bad(ErrorKind::Sort, "variable '" + t.name + "' has sort " + t.sort +
                                       " but binder declares " + it->second);
            return;
          }
        }
        bad(ErrorKind::FreeVariable, "unbound variable '" + t.name + "'");
        return;
      }
      case Term::Kind::Const: {
        const ConstantSymbol* c = sig.constant(t.name);
        if (!c) {
          bad(ErrorKind::UnknownSymbol, "unknown constant '" + t.name + "'");
        } else if (c->sort != t.sort) {
          bad(ErrorKind::Sort, "constant '" + t.name + "' has sort " + c->sort + ", node says " + t.sort);
        }
        return;
      }
      case Term::Kind::App: {
        const FunctionSymbol* f = sig.function(t.name);
        if (!f) {
          bad(ErrorKind::UnknownSymbol, "unknown function '" + t.name + "'");
        } else {
          if (f->arg_sorts.size() != t.args.size())
            bad(ErrorKind::Sort, "function '" + t.name + "' arity mismatch");
          else
            for (size_t i = 0; i < t.args.size(); ++i)
              if (t.args[i].sort != f->arg_sorts[i])
                bad(ErrorKind::Sort, "argument " + std::to_string(i) + " of '" + t.name +
                                         "' has sort " + t.args[i].sort + ", expected " +
                                         f->arg_sorts[i]);
          if (f->result_sort != t.sort)
            bad(ErrorKind::Sort, "result of '" + t.name + "' is " + f->result_sort + ", node says " + t.sort);
        }
        for (const Term& a : t.args) term(a);
        return;
      }
    }
  }

  void formula(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True:
      case Formula::Kind::False:
        return;
      case Formula::Kind::Eq:
        if (f.terms.size() != 2) {
          bad(ErrorKind::Sort, "equality expects two terms");
        } else if (f.terms[0].sort != f.terms[1].sort) {
          bad(ErrorKind::Sort,
              "equality between sorts " + f.terms[0].sort + " and " + f.terms[1].sort);
        }
        for (const Term& t : f.terms) term(t);
        return;
      case Formula::Kind::Rel: {
        const RelationSymbol* r = sig.relation(f.name);
        if (!r) {
          bad(ErrorKind::UnknownSymbol, "unknown relation '" + f.name + "'");
        } else if (r->arg_sorts.size() != f.terms.size()) {
          bad(ErrorKind::Sort, "relation '" + f.name + "' arity mismatch");
        } else {
          for (size_t i = 0; i < f.terms.size(); ++i)
            if (f.terms[i].sort != r->arg_sorts[i])
              bad(ErrorKind::Sort, "argument " + std::to_string(i) + " of '" + f.name +
                                       "' has sort " + f.terms[i].sort + ", expected " +
                                       r->arg_sorts[i]);
        }
        for (const Term& t : f.terms) term(t);
        return;
      }
      case Formula::Kind::Not:
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
      case Formula::Kind::Iff:
        for (const Formula& k : f.kids) formula(k);
        return;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        if (!sig.has_sort(f.sort))
          bad(ErrorKind::Sort, "quantifier binds undeclared sort '" + f.sort + "'");
        scope.emplace_back(f.name, f.sort);
        formula(f.kids[0]);
        scope.pop_back();
        return;
    }
  }
};

void collect_free(const Formula& f, std::vector<std::string>& scope, std::set<std::string>& out);

void collect_free_term(const Term& t, std::vector<std::string>& scope, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (std::find(scope.begin(), scope.end(), t.name) == scope.end()) out.insert(t.name);
  }
  for (const Term& a : t.args) collect_free_term(a, scope, out);
}

void collect_free(const Formula& f, std::vector<std::string>& scope, std::set<std::string>& out) {
  for (const Term& t : f.terms) collect_free_term(t, scope, out);
  if (f.is_quantifier()) {
    scope.push_back(f.name);
    collect_free(f.kids[0], scope, out);
    scope.pop_back();
    return;
  }
  for (const Formula& k : f.kids) collect_free(k, scope, out);
}

}  // namespace

std::vector<SortViolation> check_well_sorted(const Formula& f, const Signature& sig) {
  SortChecker c{sig, {}, {}};
  c.formula(f);
  return std::move(c.out);
}

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> scope;
  collect_free(f, scope, out);
  return {out.begin(), out.end()};
}

}  // namespace ffrag
