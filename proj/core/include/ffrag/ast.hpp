#ifndef FFRAG_AST_HPP
#define FFRAG_AST_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffrag {

enum class ErrorKind {
  Syntax,
  Sort,
  FreeVariable,
  UnknownSymbol,
  SignatureMismatch,
  NotAField,
  NotPrime,
  NotARoot,
  NonSimpleRoot,
  NotExistential,
  BudgetExceeded,
  UniverseEmpty,
  EnumerationLimit,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct FunctionSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
};

struct RelationSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;
};

struct ConstantSymbol {
  std::string name;
  std::string sort;
};

// A multi-sorted first-order signature. Symbol names are unique across
// functions, relations and constants, and every symbol references a
// declared sort (checked on construction).
class Signature {
 public:
  Signature(std::string name, std::vector<std::string> sorts,
            std::vector<FunctionSymbol> functions,
            std::vector<RelationSymbol> relations,
            std::vector<ConstantSymbol> constants);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }
  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<ConstantSymbol>& constants() const { return constants_; }

  bool has_sort(const std::string& s) const;
  int sort_index(const std::string& s) const;  // -1 if absent

  const FunctionSymbol* function(const std::string& n) const;
  const RelationSymbol* relation(const std::string& n) const;
  const ConstantSymbol* constant(const std::string& n) const;
  bool has_symbol(const std::string& n) const;

 private:
  std::string name_;
  std::vector<std::string> sorts_;
  std::vector<FunctionSymbol> functions_;
  std::vector<RelationSymbol> relations_;
  std::vector<ConstantSymbol> constants_;
  std::map<std::string, int> fun_index_, rel_index_, const_index_, sort_idx_;
};

// The four built-in languages. Each call returns the same immutable object.
const Signature& ring_signature();          // sorts {K}; +.K,-.K,*.K,0.K,1.K
const Signature& valued_signature();        // sorts {K,k,G}; ring per field sort, +.G,<.G,0.G,inf.G,v,res
const Signature& valued_varpi_signature();  // valued_signature plus constant varpi : K
const Signature& onesorted_signature();     // ring_signature plus unary relation O

// A signature of nullary relation symbols only (no sorts): the propositional
// languages used by the toy instances.
Signature propositional_signature(const std::vector<std::string>& atoms);

// Terms carry their resolved sort: variables inherit it from their binder at
// parse/build time, constants and applications from the signature.
struct Term {
  enum class Kind { Var, Const, App };
  Kind kind = Kind::Const;
  std::string name;
  std::string sort;
  std::vector<Term> args;

  static Term var(std::string name, std::string sort);
  static Term constant(const Signature& sig, const std::string& name);
  static Term app(const Signature& sig, const std::string& fun, std::vector<Term> args);

  bool operator==(const Term& o) const;
};

struct Formula {
  enum class Kind { True, False, Eq, Rel, Not, And, Or, Implies, Iff, Exists, Forall };
  Kind kind = Kind::True;
  std::string name;            // Rel: relation name; Exists/Forall: bound variable name
  std::string sort;            // Exists/Forall: variable sort
  std::vector<Term> terms;     // Eq: exactly 2; Rel: the arguments
  std::vector<Formula> kids;   // Not: 1; And/Or/Implies/Iff: 2; quantifier: 1

  bool operator==(const Formula& o) const;

  bool is_quantifier() const { return kind == Kind::Exists || kind == Kind::Forall; }
  bool is_binary() const {
    return kind == Kind::And || kind == Kind::Or || kind == Kind::Implies || kind == Kind::Iff;
  }
};

// A sentence is a formula with no free variables; parse_sentence and the
// builders in this library only ever hand out well-sorted ASTs.
using Sentence = Formula;

Formula f_true();
Formula f_false();
Formula f_eq(Term lhs, Term rhs);
Formula f_rel(const Signature& sig, const std::string& rel, std::vector<Term> args);
Formula f_not(Formula f);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_iff(Formula a, Formula b);
Formula f_exists(std::string var, std::string sort, Formula body);
Formula f_forall(std::string var, std::string sort, Formula body);

// Right-nested n-ary connective helpers; require at least one operand.
Formula f_and_all(std::vector<Formula> fs);
Formula f_or_all(std::vector<Formula> fs);

struct SortViolation {
  ErrorKind kind;  // Sort, FreeVariable or UnknownSymbol
  std::string message;
};

// Collects every violation instead of aborting on the first.
std::vector<SortViolation> check_well_sorted(const Formula& f, const Signature& sig);

// Names of the variables occurring free in f.
std::vector<std::string> free_variables(const Formula& f);

}  // namespace ffrag

#endif  // FFRAG_AST_HPP
