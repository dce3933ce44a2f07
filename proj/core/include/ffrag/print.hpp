#ifndef FFRAG_PRINT_HPP
#define FFRAG_PRINT_HPP

#include <string>

#include "ffrag/ast.hpp"

namespace ffrag {

// Deterministic canonical text: single spaces, binary right-nested and/or,
// no trailing whitespace. Binder names are emitted as stored; parser output
// and every transform in this library name binders x0,x1,... by quantifier
// depth, so parse(print(s)) == s on all values the library produces.
std::string print_canonical(const Formula& f);
std::string print_term(const Term& t);

// Renames binders to the canonical depth-based scheme (x0 at the outermost
// quantifier, x1 one level in, ...). Occurrences follow their binder.
Formula canonicalize(const Formula& f);

}  // namespace ffrag

#endif  // FFRAG_PRINT_HPP
