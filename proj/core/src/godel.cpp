#include "ffrag/godel.hpp"

#include <vector>

#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"

namespace ffrag {

Natural godel_code_of_text(const std::string& text) {
  std::vector<unsigned char> bytes;
  bytes.reserve(text.size() + 1);
  bytes.push_back(0x01);
  bytes.insert(bytes.end(), text.begin(), text.end());
  Natural n;
  boost::multiprecision::import_bits(n, bytes.begin(), bytes.end(), 8, true);
  return n;
}

Natural godel_code(const Sentence& s) { return godel_code_of_text(print_canonical(s)); }

std::optional<Sentence> godel_decode(const Natural& n, const Signature& sig) {
  if (n <= 0) return std::nullopt;
  std::vector<unsigned char> bytes;
  boost::multiprecision::export_bits(n, std::back_inserter(bytes), 8, true);
  if (bytes.empty() || bytes[0] != 0x01) return std::nullopt;
  std::string text(bytes.begin() + 1, bytes.end());
  try {
    Sentence s = parse_sentence(text, sig);
    if (print_canonical(s) != text) return std::nullopt;
    return s;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace ffrag
