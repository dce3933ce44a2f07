#ifndef FFRAG_ENUMERATE_HPP
#define FFRAG_ENUMERATE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffrag/ast.hpp"
#include "ffrag/fragments.hpp"

namespace ffrag {

// Desk-scale resource bounds for the grammar-driven enumeration. The
// enumeration itself is total; these only cap what this process will
// materialize before reporting EnumerationLimit.
struct EnumLimits {
  size_t max_length = 72;
  size_t max_strings = 6000000;
};

// All canonical sentences of a signature in ascending Gödel-code order.
// Since every code starts with the byte 0x01, code order is shortlex order
// on canonical text, so the pool is grown one text length at a time and
// sorted lexicographically within each length.
class SentenceEnumerator {
 public:
  explicit SentenceEnumerator(const Signature& sig, EnumLimits limits = {});
  ~SentenceEnumerator();
  SentenceEnumerator(SentenceEnumerator&&) noexcept;

  const Signature& signature() const;
  const std::string& text_at(size_t i);
  Sentence at(size_t i);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Members of one fragment, in ascending Gödel-code order: the base
// enumeration filtered by structural membership. Total and injective in the
// index, surjective onto the fragment's member set.
class FragmentEnumerator {
 public:
  explicit FragmentEnumerator(FragmentDescriptor frag, EnumLimits limits = {});

  const FragmentDescriptor& fragment() const { return frag_; }
  const std::string& text_at(size_t i);
  Sentence at(size_t i);

 private:
  FragmentDescriptor frag_;
  SentenceEnumerator base_;
  std::vector<size_t> members_;
  size_t scanned_ = 0;
};

// Convenience wrapper with a process-wide cache per (signature, fragment).
Sentence enumerate_fragment(const FragmentDescriptor& f, size_t i);

}  // namespace ffrag

#endif  // FFRAG_ENUMERATE_HPP
