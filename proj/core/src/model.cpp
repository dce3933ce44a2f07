#include "ffrag/model.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "ffrag/print.hpp"

namespace ffrag {

std::string Structure::element_name(const std::string&, size_t idx) const {
  return std::to_string(idx);
}

namespace {

struct Evaluator {
  const Structure& m;
  std::map<std::string, std::pair<std::string, size_t>> env;  // var -> (sort, element)

  size_t term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var: {
        auto it = env.find(t.name);
        if (it == env.end())
          throw Error(ErrorKind::FreeVariable, "unbound variable '" + t.name + "' in evaluation");
        return it->second.second;
      }
      case Term::Kind::Const:
        if (!m.sig().constant(t.name))
          throw Error(ErrorKind::SignatureMismatch, "structure lacks constant '" + t.name + "'");
        return m.constant_value(t.name);
      case Term::Kind::App: {
        if (!m.sig().function(t.name))
          throw Error(ErrorKind::SignatureMismatch, "structure lacks function '" + t.name + "'");
        std::vector<size_t> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(term(a));
        return m.apply(t.name, args);
      }
    }
    return 0;
  }

  bool formula(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True: return true;
      case Formula::Kind::False: return false;
      case Formula::Kind::Eq: return term(f.terms[0]) == term(f.terms[1]);
      case Formula::Kind::Rel: {
        if (!m.sig().relation(f.name))
          throw Error(ErrorKind::SignatureMismatch, "structure lacks relation '" + f.name + "'");
        std::vector<size_t> args;
        args.reserve(f.terms.size());
        for (const Term& t : f.terms) args.push_back(term(t));
        return m.holds(f.name, args);
      }
      case Formula::Kind::Not: return !formula(f.kids[0]);
      case Formula::Kind::And: return formula(f.kids[0]) && formula(f.kids[1]);
      case Formula::Kind::Or: return formula(f.kids[0]) || formula(f.kids[1]);
      case Formula::Kind::Implies: return !formula(f.kids[0]) || formula(f.kids[1]);
      case Formula::Kind::Iff: return formula(f.kids[0]) == formula(f.kids[1]);
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        if (!m.sig().has_sort(f.sort))
          throw Error(ErrorKind::SignatureMismatch, "structure lacks sort '" + f.sort + "'");
        size_t n = m.carrier_size(f.sort);
        bool exists = f.kind == Formula::Kind::Exists;
        std::optional<std::pair<std::string, size_t>> saved;
        if (auto it = env.find(f.name); it != env.end()) saved = it->second;
        for (size_t i = 0; i < n; ++i) {
          env[f.name] = {f.sort, i};
          bool v = formula(f.kids[0]);
          if (exists && v) {
            if (saved) env[f.name] = *saved; else env.erase(f.name);
            return true;
          }
          if (!exists && !v) {
            if (saved) env[f.name] = *saved; else env.erase(f.name);
            return false;
          }
        }
        if (saved) env[f.name] = *saved; else env.erase(f.name);
        return !exists;
      }
    }
    return false;
  }
};

}  // namespace

bool evaluate(const Structure& m, const Sentence& s) {
  Evaluator e{m, {}};
  return e.formula(s);
}

TableStructure::TableStructure(std::string name, Signature sig,
                               std::map<std::string, std::vector<std::string>> sorts,
                               std::map<std::string, std::map<std::vector<size_t>, size_t>> functions,
                               std::map<std::string, std::set<std::vector<size_t>>> relations,
                               std::map<std::string, size_t> constants)
    : name_(std::move(name)),
      sig_(std::move(sig)),
      sorts_(std::move(sorts)),
      functions_(std::move(functions)),
      relations_(std::move(relations)),
      constants_(std::move(constants)) {
  for (const auto& s : sig_.sorts())
    if (!sorts_.count(s)) throw Error(ErrorKind::Sort, "missing carrier for sort '" + s + "'");
  // totality of function tables
  for (const auto& f : sig_.functions()) {
    auto it = functions_.find(f.name);
    if (it == functions_.end())
      throw Error(ErrorKind::Sort, "missing table for function '" + f.name + "'");
    size_t expect = 1;
    for (const auto& a : f.arg_sorts) expect *= sorts_.at(a).size();
    if (it->second.size() != expect)
      throw Error(ErrorKind::Sort, "table for '" + f.name + "' is not total");
    size_t res_size = sorts_.at(f.result_sort).size();
    for (const auto& [args, val] : it->second) {
      if (args.size() != f.arg_sorts.size() || val >= res_size)
        throw Error(ErrorKind::Sort, "bad row in table for '" + f.name + "'");
      for (size_t i = 0; i < args.size(); ++i)
        if (args[i] >= sorts_.at(f.arg_sorts[i]).size())
          throw Error(ErrorKind::Sort, "bad row in table for '" + f.name + "'");
    }
  }
  for (const auto& c : sig_.constants())
    if (!constants_.count(c.name))
      throw Error(ErrorKind::Sort, "missing value for constant '" + c.name + "'");
}

size_t TableStructure::carrier_size(const std::string& sort) const {
  auto it = sorts_.find(sort);
  if (it == sorts_.end()) throw Error(ErrorKind::SignatureMismatch, "no sort '" + sort + "'");
  return it->second.size();
}

size_t TableStructure::apply(const std::string& fun, const std::vector<size_t>& args) const {
  return functions_.at(fun).at(args);
}

bool TableStructure::holds(const std::string& rel, const std::vector<size_t>& args) const {
  auto it = relations_.find(rel);
  if (it == relations_.end()) return false;
  return it->second.count(args) > 0;
}

size_t TableStructure::constant_value(const std::string& name) const {
  return constants_.at(name);
}

std::string TableStructure::element_name(const std::string& sort, size_t idx) const {
  return sorts_.at(sort)[idx];
}

std::shared_ptr<TableStructure> TableStructure::from_json_text(const std::string& json_text,
                                                               const Signature& sig,
                                                               const std::string& name) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::map<std::string, std::vector<std::string>> sorts;
  std::map<std::string, std::map<std::string, size_t>> index;
  for (auto& [sort, elems] : j.at("sorts").items()) {
    std::vector<std::string> names = elems.get<std::vector<std::string>>();
    for (size_t i = 0; i < names.size(); ++i) index[sort][names[i]] = i;
    sorts[sort] = std::move(names);
  }
  auto elem = [&](const std::string& sort, const std::string& name_) -> size_t {
    auto s = index.find(sort);
    if (s == index.end()) throw Error(ErrorKind::Sort, "unknown sort '" + sort + "' in model");
    auto e = s->second.find(name_);
    if (e == s->second.end())
      throw Error(ErrorKind::Sort, "unknown element '" + name_ + "' of sort " + sort);
    return e->second;
  };
  std::map<std::string, std::map<std::vector<size_t>, size_t>> functions;
  if (j.contains("functions")) {
    for (auto& [fname, rows] : j.at("functions").items()) {
      const FunctionSymbol* f = sig.function(fname);
      if (!f) throw Error(ErrorKind::UnknownSymbol, "unknown function '" + fname + "' in model");
      for (auto& row : rows) {
        std::vector<std::string> cells = row.get<std::vector<std::string>>();
        if (cells.size() != f->arg_sorts.size() + 1)
          throw Error(ErrorKind::Sort, "bad row arity for '" + fname + "'");
        std::vector<size_t> args;
        for (size_t i = 0; i < f->arg_sorts.size(); ++i)
          args.push_back(elem(f->arg_sorts[i], cells[i]));
        functions[fname][args] = elem(f->result_sort, cells.back());
      }
    }
  }
  std::map<std::string, std::set<std::vector<size_t>>> relations;
  if (j.contains("relations")) {
    for (auto& [rname, rows] : j.at("relations").items()) {
      const RelationSymbol* r = sig.relation(rname);
      if (!r) throw Error(ErrorKind::UnknownSymbol, "unknown relation '" + rname + "' in model");
      for (auto& row : rows) {
        std::vector<std::string> cells = row.get<std::vector<std::string>>();
        if (cells.size() != r->arg_sorts.size())
          throw Error(ErrorKind::Sort, "bad row arity for '" + rname + "'");
        std::vector<size_t> args;
        for (size_t i = 0; i < r->arg_sorts.size(); ++i)
          args.push_back(elem(r->arg_sorts[i], cells[i]));
        relations[rname].insert(args);
      }
    }
  }
  std::map<std::string, size_t> constants;
  if (j.contains("constants")) {
    for (auto& [cname, val] : j.at("constants").items()) {
      const ConstantSymbol* c = sig.constant(cname);
      if (!c) throw Error(ErrorKind::UnknownSymbol, "unknown constant '" + cname + "' in model");
      constants[cname] = elem(c->sort, val.get<std::string>());
    }
  }
  return std::make_shared<TableStructure>(name, sig, std::move(sorts), std::move(functions),
                                          std::move(relations), std::move(constants));
}

ZmodStructure::ZmodStructure(uint64_t n) : n_(n) {
  if (n == 0) throw Error(ErrorKind::Sort, "modulus must be positive");
}

const Signature& ZmodStructure::sig() const { return ring_signature(); }

size_t ZmodStructure::carrier_size(const std::string& sort) const {
  if (sort != "K") throw Error(ErrorKind::SignatureMismatch, "no sort '" + sort + "'");
  return n_;
}

size_t ZmodStructure::apply(const std::string& fun, const std::vector<size_t>& args) const {
  uint64_t a = args[0], b = args[1];
  if (fun == "+.K") return (a + b) % n_;
  if (fun == "-.K") return (a + n_ - b) % n_;
  if (fun == "*.K") return (a * b) % n_;
  throw Error(ErrorKind::SignatureMismatch, "no function '" + fun + "'");
}

bool ZmodStructure::holds(const std::string& rel, const std::vector<size_t>&) const {
  throw Error(ErrorKind::SignatureMismatch, "no relation '" + rel + "'");
}

size_t ZmodStructure::constant_value(const std::string& name) const {
  if (name == "0.K") return 0;
  if (name == "1.K") return 1 % n_;
  throw Error(ErrorKind::SignatureMismatch, "no constant '" + name + "'");
}

std::string ZmodStructure::element_name(const std::string&, size_t idx) const {
  return std::to_string(idx);
}

StructurePtr zmod(uint64_t n) { return std::make_shared<ZmodStructure>(n); }

namespace {
bool is_prime_u64(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

StructurePtr prime_field(uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return zmod(p);
}

namespace {

StructurePtr make_small_field(const std::string& name,
                              const std::function<size_t(size_t, size_t)>& add,
                              const std::function<size_t(size_t, size_t)>& mul,
                              const std::function<size_t(size_t, size_t)>& sub,
                              const std::vector<std::string>& elems) {
  std::map<std::string, std::map<std::vector<size_t>, size_t>> functions;
  size_t n = elems.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      functions["+.K"][{a, b}] = add(a, b);
      functions["-.K"][{a, b}] = sub(a, b);
      functions["*.K"][{a, b}] = mul(a, b);
    }
  std::map<std::string, std::vector<std::string>> sorts = {{"K", elems}};
  std::map<std::string, size_t> constants = {{"0.K", 0}, {"1.K", 1}};
  return std::make_shared<TableStructure>(name, ring_signature(), std::move(sorts),
                                          std::move(functions),
                                          std::map<std::string, std::set<std::vector<size_t>>>{},
                                          std::move(constants));
}

}  // namespace

StructurePtr gf4() {
  // elements as polynomials over F_2: 0, 1, a, a+1 with a^2 = a+1
  auto add = [](size_t a, size_t b) { return a ^ b; };
  auto mul = [](size_t a, size_t b) -> size_t {
    size_t r = 0;
    // bit 0 = constant, bit 1 = coefficient of a
    size_t a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
    size_t c0 = a0 & b0, c1 = (a0 & b1) ^ (a1 & b0), c2 = a1 & b1;
    // a^2 = a + 1
    r = (c0 ^ c2) | ((c1 ^ c2) << 1);
    return r;
  };
  return make_small_field("F_4", add, mul, add, {"0", "1", "a", "a+1"});
}

StructurePtr f2_dual_numbers() {
  // 0, 1, e, 1+e with e^2 = 0
  auto add = [](size_t a, size_t b) { return a ^ b; };
  auto mul = [](size_t a, size_t b) -> size_t {
    size_t a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
    size_t c0 = a0 & b0, c1 = (a0 & b1) ^ (a1 & b0);  // e^2 vanishes
    return c0 | (c1 << 1);
  };
  return make_small_field("F_2[e]/(e^2)", add, mul, add, {"0", "1", "e", "1+e"});
}

bool is_ring(const Structure& m) {
  size_t n = m.carrier_size("K");
  size_t zero = m.constant_value("0.K"), one = m.constant_value("1.K");
  auto add = [&](size_t a, size_t b) { return m.apply("+.K", {a, b}); };
  auto mul = [&](size_t a, size_t b) { return m.apply("*.K", {a, b}); };
  auto sub = [&](size_t a, size_t b) { return m.apply("-.K", {a, b}); };
  for (size_t a = 0; a < n; ++a) {
    if (add(a, zero) != a || mul(a, one) != a) return false;
    if (add(sub(zero, a), a) != zero) return false;
    for (size_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      if (sub(a, b) != add(a, sub(zero, b))) return false;
      for (size_t c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_field(const Structure& m) {
  if (!is_ring(m)) return false;
  size_t n = m.carrier_size("K");
  size_t zero = m.constant_value("0.K"), one = m.constant_value("1.K");
  if (zero == one) return false;
  for (size_t a = 0; a < n; ++a) {
    if (a == zero) continue;
    bool inv = false;
    for (size_t b = 0; b < n; ++b)
      if (m.apply("*.K", {a, b}) == one) {
        inv = true;
        break;
      }
    if (!inv) return false;
  }
  return true;
}

namespace {

// G-sort elements: 0 -> "0", 1 -> "inf".
class TrivialValuationStructure : public Structure {
 public:
  explicit TrivialValuationStructure(StructurePtr base) : base_(std::move(base)) {
    zero_ = base_->constant_value("0.K");
  }
  const Signature& sig() const override { return valued_signature(); }
  std::string name() const override { return "trivval(" + base_->name() + ")"; }
  size_t carrier_size(const std::string& sort) const override {
    if (sort == "K" || sort == "k") return base_->carrier_size("K");
    if (sort == "G") return 2;
    throw Error(ErrorKind::SignatureMismatch, "no sort '" + sort + "'");
  }
  size_t apply(const std::string& fun, const std::vector<size_t>& args) const override {
    if (fun == "v") return args[0] == zero_ ? 1 : 0;
    if (fun == "res") return args[0];
    if (fun == "+.G") return args[0] | args[1];  // inf absorbs
    if (fun.size() == 3 && fun.substr(1) == ".k")
      return base_->apply(fun.substr(0, 1) + ".K", args);
    return base_->apply(fun, args);
  }
  bool holds(const std::string& rel, const std::vector<size_t>& args) const override {
    if (rel == "<.G") return args[0] == 0 && args[1] == 1;
    throw Error(ErrorKind::SignatureMismatch, "no relation '" + rel + "'");
  }
  size_t constant_value(const std::string& name) const override {
    if (name == "0.G") return 0;
    if (name == "inf.G") return 1;
    if (name.size() == 3 && name.substr(1) == ".k")
      return base_->constant_value(name.substr(0, 1) + ".K");
    return base_->constant_value(name);
  }
  std::string element_name(const std::string& sort, size_t idx) const override {
    if (sort == "G") return idx == 0 ? "0" : "inf";
    return base_->element_name("K", idx);
  }

 private:
  StructurePtr base_;
  size_t zero_;
};

}  // namespace

StructurePtr trivially_valued(StructurePtr field) {
  if (!is_field(*field))
    throw Error(ErrorKind::NotAField, field->name() + " is not a field");
  return std::make_shared<TrivialValuationStructure>(std::move(field));
}

PropStructure::PropStructure(Signature sig, uint64_t assignment)
    : sig_(std::move(sig)), assignment_(assignment) {}

std::string PropStructure::name() const {
  std::string s = "assignment{";
  for (size_t i = 0; i < sig_.relations().size(); ++i) {
    if (i) s += ',';
    s += sig_.relations()[i].name;
    s += (assignment_ >> i) & 1 ? "=1" : "=0";
  }
  return s + "}";
}

size_t PropStructure::carrier_size(const std::string& sort) const {
  throw Error(ErrorKind::SignatureMismatch, "propositional structure has no sort '" + sort + "'");
}

size_t PropStructure::apply(const std::string& fun, const std::vector<size_t>&) const {
  throw Error(ErrorKind::SignatureMismatch, "no function '" + fun + "'");
}

bool PropStructure::holds(const std::string& rel, const std::vector<size_t>&) const {
  for (size_t i = 0; i < sig_.relations().size(); ++i)
    if (sig_.relations()[i].name == rel) return (assignment_ >> i) & 1;
  throw Error(ErrorKind::SignatureMismatch, "no relation '" + rel + "'");
}

size_t PropStructure::constant_value(const std::string& name) const {
  throw Error(ErrorKind::SignatureMismatch, "no constant '" + name + "'");
}

std::vector<StructurePtr> all_assignments(const Signature& prop_sig) {
  size_t k = prop_sig.relations().size();
  std::vector<StructurePtr> out;
  out.reserve(size_t{1} << k);
  for (uint64_t a = 0; a < (uint64_t{1} << k); ++a)
    out.push_back(std::make_shared<PropStructure>(prop_sig, a));
  return out;
}

namespace {

struct SubElement {
  std::string sort;
  size_t value;  // element of M
  Term term;     // term over the generators denoting it
};

// Closure of constants plus generators under the functions, with a
// denoting term recorded for every element reached.
std::vector<SubElement> generated_substructure(const Structure& M,
                                               const std::vector<std::pair<std::string, size_t>>& gens) {
  const Signature& sig = M.sig();
  std::vector<SubElement> elems;
  auto find = [&](const std::string& sort, size_t v) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i].sort == sort && elems[i].value == v) return static_cast<int>(i);
    return -1;
  };
  for (const auto& c : sig.constants())
    if (find(c.sort, M.constant_value(c.name)) < 0)
      elems.push_back({c.sort, M.constant_value(c.name), Term::constant(sig, c.name)});
  for (size_t g = 0; g < gens.size(); ++g)
    if (find(gens[g].first, gens[g].second) < 0)
      elems.push_back({gens[g].first, gens[g].second,
                       Term::var("x" + std::to_string(g), gens[g].first)});
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : sig.functions()) {
      std::vector<std::vector<size_t>> pools;  // indices into elems per argument slot
      pools.resize(f.arg_sorts.size());
      for (size_t i = 0; i < f.arg_sorts.size(); ++i)
        for (size_t e = 0; e < elems.size(); ++e)
          if (elems[e].sort == f.arg_sorts[i]) pools[i].push_back(e);
      std::vector<size_t> pick(f.arg_sorts.size(), 0);
      bool done = f.arg_sorts.empty() ? false : [&] {
        for (const auto& p : pools)
          if (p.empty()) return true;
        return false;
      }();
      if (done) continue;
      while (true) {
        std::vector<size_t> args;
        std::vector<Term> arg_terms;
        for (size_t i = 0; i < pick.size(); ++i) {
          args.push_back(elems[pools[i][pick[i]]].value);
          arg_terms.push_back(elems[pools[i][pick[i]]].term);
        }
        size_t v = M.apply(f.name, args);
        if (find(f.result_sort, v) < 0) {
          elems.push_back({f.result_sort, v, Term::app(sig, f.name, arg_terms)});
          changed = true;
        }
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < pools[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
        if (pick.empty()) break;
      }
    }
  }
  return elems;
}

// Backtracking search for an embedding of the substructure into N: injective
// per sort, constant- and function-compatible, relation-preserving and
// -reflecting. Candidates tried in carrier-index order.
bool embeds(const Structure& M, const Structure& N, const std::vector<SubElement>& sub) {
  const Signature& sig = M.sig();
  size_t n = sub.size();
  std::vector<size_t> img(n, 0);
  std::vector<bool> assigned(n, false);

  auto find_sub = [&](const std::string& sort, size_t v) -> int {
    for (size_t i = 0; i < n; ++i)
      if (sub[i].sort == sort && sub[i].value == v) return static_cast<int>(i);
    return -1;
  };

  // partial consistency: all facts among assigned elements must transfer
  auto consistent = [&]() {
    for (const auto& c : sig.constants()) {
      int i = find_sub(c.sort, M.constant_value(c.name));
      if (i >= 0 && assigned[i] && img[i] != N.constant_value(c.name)) return false;
    }
    for (const auto& f : sig.functions()) {
      std::vector<std::vector<size_t>> pools(f.arg_sorts.size());
      for (size_t i = 0; i < f.arg_sorts.size(); ++i)
        for (size_t e = 0; e < n; ++e)
          if (sub[e].sort == f.arg_sorts[i] && assigned[e]) pools[i].push_back(e);
      std::vector<size_t> pick(f.arg_sorts.size(), 0);
      bool any_empty = false;
      for (const auto& p : pools) any_empty |= p.empty();
      if (any_empty && !f.arg_sorts.empty()) continue;
      while (true) {
        std::vector<size_t> argsM, argsN;
        for (size_t i = 0; i < pick.size(); ++i) {
          argsM.push_back(sub[pools[i][pick[i]]].value);
          argsN.push_back(img[pools[i][pick[i]]]);
        }
        int r = find_sub(f.result_sort, M.apply(f.name, argsM));
        if (r >= 0 && assigned[r] && N.apply(f.name, argsN) != img[r]) return false;
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < pools[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size() || pick.empty()) break;
      }
    }
    for (const auto& r : sig.relations()) {
      std::vector<std::vector<size_t>> pools(r.arg_sorts.size());
      for (size_t i = 0; i < r.arg_sorts.size(); ++i)
        for (size_t e = 0; e < n; ++e)
          if (sub[e].sort == r.arg_sorts[i] && assigned[e]) pools[i].push_back(e);
      std::vector<size_t> pick(r.arg_sorts.size(), 0);
      bool any_empty = false;
      for (const auto& p : pools) any_empty |= p.empty();
      if (any_empty && !r.arg_sorts.empty()) continue;
      while (true) {
        std::vector<size_t> argsM, argsN;
        for (size_t i = 0; i < pick.size(); ++i) {
          argsM.push_back(sub[pools[i][pick[i]]].value);
          argsN.push_back(img[pools[i][pick[i]]]);
        }
        if (M.holds(r.name, argsM) != N.holds(r.name, argsN)) return false;
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < pools[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size() || pick.empty()) break;
      }
    }
    return true;
  };

  std::function<bool(size_t)> go = [&](size_t idx) -> bool {
    if (idx == n) return true;
    size_t limit = N.carrier_size(sub[idx].sort);
    for (size_t cand = 0; cand < limit; ++cand) {
      bool taken = false;
      for (size_t j = 0; j < idx; ++j)
        if (sub[j].sort == sub[idx].sort && assigned[j] && img[j] == cand) taken = true;
      if (taken) continue;
      img[idx] = cand;
      assigned[idx] = true;
      if (consistent() && go(idx + 1)) return true;
      assigned[idx] = false;
    }
    return false;
  };
  return go(0);
}

// The quantifier-free atomic diagram of the substructure over the generator
// variables: function facts, relation facts both ways, pairwise distinctness.
// The caller wraps it in the existential prefix.
Formula diagram_body(const Structure& M, const std::vector<SubElement>& sub) {
  const Signature& sig = M.sig();
  std::vector<Formula> facts;
  for (const auto& f : sig.functions()) {
    std::vector<std::vector<size_t>> pools(f.arg_sorts.size());
    for (size_t i = 0; i < f.arg_sorts.size(); ++i)
      for (size_t e = 0; e < sub.size(); ++e)
        if (sub[e].sort == f.arg_sorts[i]) pools[i].push_back(e);
    std::vector<size_t> pick(f.arg_sorts.size(), 0);
    bool any_empty = false;
    for (const auto& p : pools) any_empty |= p.empty();
    if (any_empty && !f.arg_sorts.empty()) continue;
    while (true) {
      std::vector<size_t> args;
      std::vector<Term> arg_terms;
      for (size_t i = 0; i < pick.size(); ++i) {
        args.push_back(sub[pools[i][pick[i]]].value);
        arg_terms.push_back(sub[pools[i][pick[i]]].term);
      }
      size_t v = M.apply(f.name, args);
      for (size_t e = 0; e < sub.size(); ++e)
        if (sub[e].sort == f.result_sort && sub[e].value == v) {
          facts.push_back(f_eq(Term::app(sig, f.name, arg_terms), sub[e].term));
          break;
        }
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < pools[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size() || pick.empty()) break;
    }
  }
  for (const auto& r : sig.relations()) {
    std::vector<std::vector<size_t>> pools(r.arg_sorts.size());
    for (size_t i = 0; i < r.arg_sorts.size(); ++i)
      for (size_t e = 0; e < sub.size(); ++e)
        if (sub[e].sort == r.arg_sorts[i]) pools[i].push_back(e);
    std::vector<size_t> pick(r.arg_sorts.size(), 0);
    bool any_empty = false;
    for (const auto& p : pools) any_empty |= p.empty();
    if (any_empty && !r.arg_sorts.empty()) continue;
    while (true) {
      std::vector<size_t> args;
      std::vector<Term> arg_terms;
      for (size_t i = 0; i < pick.size(); ++i) {
        args.push_back(sub[pools[i][pick[i]]].value);
        arg_terms.push_back(sub[pools[i][pick[i]]].term);
      }
      Formula atom = f_rel(sig, r.name, arg_terms);
      facts.push_back(M.holds(r.name, args) ? atom : f_not(atom));
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < pools[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size() || pick.empty()) break;
    }
  }
  for (size_t a = 0; a < sub.size(); ++a)
    for (size_t b = a + 1; b < sub.size(); ++b)
      if (sub[a].sort == sub[b].sort)
        facts.push_back(f_not(f_eq(sub[a].term, sub[b].term)));
  return facts.empty() ? f_true() : f_and_all(std::move(facts));
}

}  // namespace

InclusionResult exists_n_inclusion(const Structure& M, const Structure& N, int n) {
  if (M.sig().name() != N.sig().name())
    throw Error(ErrorKind::SignatureMismatch, "structures are over different signatures");
  const Signature& sig = M.sig();

  // all (sort, element) slots of M in deterministic order
  std::vector<std::pair<std::string, size_t>> slots;
  for (const auto& s : sig.sorts())
    for (size_t v = 0; v < M.carrier_size(s); ++v) slots.emplace_back(s, v);

  // combinations with repetition of n slots, lexicographic
  std::vector<size_t> combo(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<std::pair<std::string, size_t>> gens;
    for (size_t i = 0; i < combo.size(); ++i) gens.push_back(slots[combo[i]]);
    std::vector<SubElement> sub = generated_substructure(M, gens);
    if (!embeds(M, N, sub)) {
      Sentence witness = diagram_body(M, sub);
      for (size_t g = gens.size(); g-- > 0;)
        witness = f_exists("x" + std::to_string(g), gens[g].first, std::move(witness));
      InclusionResult r;
      r.included = false;
      r.witness = std::move(witness);
      for (const auto& g : gens) r.generator_names.push_back(M.element_name(g.first, g.second));
      return r;
    }
    if (combo.empty()) break;
    int i = static_cast<int>(combo.size()) - 1;
    while (i >= 0 && combo[i] == slots.size() - 1) --i;
    if (i < 0) break;
    ++combo[i];
    for (size_t j = i + 1; j < combo.size(); ++j) combo[j] = combo[i];
  }
  return {};
}

}  // namespace ffrag
