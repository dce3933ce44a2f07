#include "ffrag/print.hpp"

#include <map>

namespace ffrag {

namespace {

void print_term_to(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      out += t.name;
      return;
    case Term::Kind::App:
      out += '(';
      out += t.name;
      for (const Term& a : t.args) {
        out += ' ';
        print_term_to(a, out);
      }
      out += ')';
      return;
  }
}

void print_to(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::True:
      out += "(true)";
      return;
    case Formula::Kind::False:
      out += "(false)";
      return;
    case Formula::Kind::Eq:
      out += "(= ";
      print_term_to(f.terms[0], out);
      out += ' ';
      print_term_to(f.terms[1], out);
      out += ')';
      return;
    case Formula::Kind::Rel:
      out += '(';
      out += f.name;
      for (const Term& t : f.terms) {
        out += ' ';
        print_term_to(t, out);
      }
      out += ')';
      return;
    case Formula::Kind::Not:
      out += "(not ";
      print_to(f.kids[0], out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      out += '(';
      switch (f.kind) {
        case Formula::Kind::And: out += "and"; break;
        case Formula::Kind::Or: out += "or"; break;
        case Formula::Kind::Implies: out += "->"; break;
        default: out += "<->"; break;
      }
      out += ' ';
      print_to(f.kids[0], out);
      out += ' ';
      print_to(f.kids[1], out);
      out += ')';
      return;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind == Formula::Kind::Exists ? "(exists (" : "(forall (";
      out += f.name;
      out += ' ';
      out += f.sort;
      out += ") ";
      print_to(f.kids[0], out);
      out += ')';
      return;
  }
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& env) {
  Term r = t;
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.name);
    if (it != env.end()) r.name = it->second;
    return r;
  }
  for (Term& a : r.args) a = rename_term(a, env);
  return r;
}

Formula rename(const Formula& f, std::map<std::string, std::string> env, int depth) {
  Formula r = f;
  if (f.is_quantifier()) {
    std::string fresh = "x" + std::to_string(depth);
    env[f.name] = fresh;
    r.name = fresh;
    r.kids[0] = rename(f.kids[0], env, depth + 1);
    return r;
  }
  for (Term& t : r.terms) t = rename_term(t, env);
  for (size_t i = 0; i < r.kids.size(); ++i) r.kids[i] = rename(f.kids[i], env, depth);
  return r;
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_canonical(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

Formula canonicalize(const Formula& f) { return rename(f, {}, 0); }

}  // namespace ffrag
