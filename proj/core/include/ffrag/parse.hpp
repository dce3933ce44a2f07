#ifndef FFRAG_PARSE_HPP
#define FFRAG_PARSE_HPP

#include <string>

#include "ffrag/ast.hpp"

namespace ffrag {

// Parses the canonical S-expression grammar:
//
//   form := "(true)" | "(false)" | "(= t t)" | "(" rel t* ")" | "(not f)"
//         | "(and f f+)" | "(or f f+)" | "(-> f f)" | "(<-> f f)"
//         | "(exists (x SORT) f)" | "(forall (x SORT) f)"
//   term := var | const | "(" fun t* ")"
//
// n-ary and/or are accepted and canonicalized to right-nested binary form;
// bound variables are renamed to x0,x1,... by quantifier depth. The result
// is closed and well-sorted or an Error is thrown: Syntax (malformed input),
// Sort (ill-sorted application), FreeVariable (unbound identifier),
// UnknownSymbol (unknown head).
Sentence parse_sentence(const std::string& text, const Signature& sig);

}  // namespace ffrag

#endif  // FFRAG_PARSE_HPP
