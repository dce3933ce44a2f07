#include "ffrag/parse.hpp"

#include <vector>

namespace ffrag {

namespace {

struct Token {
  enum class Kind { LParen, RParen, Atom };
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Kind::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")"});
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && text[j] != '(' && text[j] != ')' && text[j] != ' ' &&
             text[j] != '\t' && text[j] != '\n' && text[j] != '\r')
        ++j;
      out.push_back({Token::Kind::Atom, text.substr(i, j - i)});
      i = j;
    }
  }
  return out;
}

struct Parser {
  const Signature& sig;
  const std::vector<Token>& toks;
  size_t pos = 0;
  // innermost binding last: (source name, canonical name, sort)
  std::vector<std::tuple<std::string, std::string, std::string>> scope;

  [[noreturn]] void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

  const Token& peek() {
    if (pos >= toks.size()) fail(ErrorKind::Syntax, "unexpected end of input");
    return toks[pos];
  }
  Token next() {
    const Token& t = peek();
    ++pos;
    return t;
  }
  void expect_rparen(const std::string& ctx) {
    if (next().kind != Token::Kind::RParen)
      fail(ErrorKind::Syntax, "expected ')' after " + ctx);
  }

  Term term() {
    const Token t = next();
    if (t.kind == Token::Kind::RParen) fail(ErrorKind::Syntax, "unexpected ')' in term position");
    if (t.kind == Token::Kind::Atom) {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (std::get<0>(*it) == t.text) return Term::var(std::get<1>(*it), std::get<2>(*it));
      }
      if (sig.constant(t.text)) return Term::constant(sig, t.text);
      if (sig.has_symbol(t.text))
        fail(ErrorKind::Syntax, "symbol '" + t.text + "' is not a constant");
      fail(ErrorKind::FreeVariable, "unbound variable '" + t.text + "'");
    }
    // application
    const Token head = next();
    if (head.kind != Token::Kind::Atom) fail(ErrorKind::Syntax, "expected function symbol");
    if (!sig.function(head.text)) {
      if (sig.has_symbol(head.text))
        fail(ErrorKind::Syntax, "symbol '" + head.text + "' is not a function");
      fail(ErrorKind::UnknownSymbol, "unknown function '" + head.text + "'");
    }
    std::vector<Term> args;
    while (peek().kind != Token::Kind::RParen) args.push_back(term());
    next();  // ')'
    return Term::app(sig, head.text, std::move(args));
  }

  Formula quantifier(bool exists) {
    if (next().kind != Token::Kind::LParen)
      fail(ErrorKind::Syntax, "expected '(var SORT)' binder");
    const Token var = next();
    if (var.kind != Token::Kind::Atom) fail(ErrorKind::Syntax, "expected variable name");
    if (sig.has_symbol(var.text))
      fail(ErrorKind::Syntax, "binder name '" + var.text + "' collides with a declared symbol");
    const Token sort = next();
    if (sort.kind != Token::Kind::Atom) fail(ErrorKind::Syntax, "expected sort name");
    if (!sig.has_sort(sort.text)) fail(ErrorKind::Sort, "unknown sort '" + sort.text + "'");
    expect_rparen("binder");
    std::string canonical = "x" + std::to_string(scope.size());
    scope.emplace_back(var.text, canonical, sort.text);
    Formula body = formula();
    scope.pop_back();
    expect_rparen("quantified formula");
    return exists ? f_exists(canonical, sort.text, std::move(body))
                  : f_forall(canonical, sort.text, std::move(body));
  }

  Formula nary(bool conj) {
    std::vector<Formula> parts;
    while (peek().kind != Token::Kind::RParen) parts.push_back(formula());
    next();  // ')'
    if (parts.size() < 2)
      fail(ErrorKind::Syntax, std::string(conj ? "and" : "or") + " needs at least two operands");
    return conj ? f_and_all(std::move(parts)) : f_or_all(std::move(parts));
  }

  Formula formula() {
    if (next().kind != Token::Kind::LParen) fail(ErrorKind::Syntax, "expected '('");
    const Token head = next();
    if (head.kind != Token::Kind::Atom) fail(ErrorKind::Syntax, "expected formula head");
    const std::string& h = head.text;
    if (h == "true") {
      expect_rparen("(true");
      return f_true();
    }
    if (h == "false") {
      expect_rparen("(false");
      return f_false();
    }
    if (h == "=") {
      Term lhs = term();
      Term rhs = term();
      expect_rparen("equality");
      if (lhs.sort != rhs.sort)
        fail(ErrorKind::Sort, "equality between sorts " + lhs.sort + " and " + rhs.sort);
      return f_eq(std::move(lhs), std::move(rhs));
    }
    if (h == "not") {
      Formula f = formula();
      expect_rparen("negation");
      return f_not(std::move(f));
    }
    if (h == "and") return nary(true);
    if (h == "or") return nary(false);
    if (h == "->" || h == "<->") {
      Formula a = formula();
      Formula b = formula();
      expect_rparen(h);
      return h == "->" ? f_implies(std::move(a), std::move(b)) : f_iff(std::move(a), std::move(b));
    }
    if (h == "exists") return quantifier(true);
    if (h == "forall") return quantifier(false);
    if (sig.relation(h)) {
      std::vector<Term> args;
      while (peek().kind != Token::Kind::RParen) args.push_back(term());
      next();  // ')'
      return f_rel(sig, h, std::move(args));
    }
    if (sig.has_symbol(h)) fail(ErrorKind::Syntax, "symbol '" + h + "' is not a relation");
    fail(ErrorKind::UnknownSymbol, "unknown head '" + h + "'");
  }
};

}  // namespace

Sentence parse_sentence(const std::string& text, const Signature& sig) {
  std::vector<Token> toks = tokenize(text);
  Parser p{sig, toks, 0, {}};
  Formula f = p.formula();
  if (p.pos != toks.size()) throw Error(ErrorKind::Syntax, "trailing input after sentence");
  return f;
}

}  // namespace ffrag
