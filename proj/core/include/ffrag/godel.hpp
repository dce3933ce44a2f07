#ifndef FFRAG_GODEL_HPP
#define FFRAG_GODEL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "ffrag/ast.hpp"

namespace ffrag {

using Natural = boost::multiprecision::cpp_int;

// code(s) = big-endian base-256 value of 0x01 followed by the UTF-8 bytes of
// print_canonical(s). The 0x01 prefix keeps leading bytes nonzero, so the
// coding is injective and code order equals shortlex order on canonical text.
Natural godel_code(const Sentence& s);

// Decidable image: peel the bytes, demand the 0x01 prefix, parse, re-print
// and compare bytes. Returns the sentence, or nullopt when n is not a code.
std::optional<Sentence> godel_decode(const Natural& n, const Signature& sig);

// Code of an arbitrary canonical text (used for ordering diagnostics).
Natural godel_code_of_text(const std::string& text);

}  // namespace ffrag

#endif  // FFRAG_GODEL_HPP
