#include "ffrag/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "ffrag/parse.hpp"

namespace ffrag {

namespace {

constexpr int kInf = 1 << 28;

std::string scope_key(const std::vector<std::string>& scope) {
  std::string k;
  for (const auto& s : scope) {
    k += s;
    k += ',';
  }
  return k;
}

std::string level_name(size_t level) { return "x" + std::to_string(level); }

}  // namespace

struct SentenceEnumerator::Impl {
  const Signature& sig;
  EnumLimits limits;
  size_t total_strings = 0;

  std::map<std::pair<int, std::string>, std::vector<std::string>> form_memo;
  std::map<std::tuple<int, std::string, std::string>, std::vector<std::string>> term_memo;
  std::map<std::string, std::map<std::string, int>> min_term_memo;
  std::map<std::string, int> min_form_memo;

  std::vector<std::string> all;
  int next_len = 1;  // nullary relation atoms can be shorter than "(true)"

  explicit Impl(const Signature& s, EnumLimits l) : sig(s), limits(l) {}

  void guard(size_t n) {
    total_strings += n;
    if (total_strings > limits.max_strings)
      throw Error(ErrorKind::EnumerationLimit,
                  "enumeration pool exceeds " + std::to_string(limits.max_strings) + " strings");
  }

  // Shortest term length per sort under the given scope, by fixpoint.
  const std::map<std::string, int>& min_term_lens(const std::vector<std::string>& scope) {
    std::string key = scope_key(scope);
    auto it = min_term_memo.find(key);
    if (it != min_term_memo.end()) return it->second;
    std::map<std::string, int> m;
    for (const auto& s : sig.sorts()) m[s] = kInf;
    for (const auto& c : sig.constants())
      m[c.sort] = std::min(m[c.sort], static_cast<int>(c.name.size()));
    for (size_t lvl = 0; lvl < scope.size(); ++lvl)
      m[scope[lvl]] = std::min(m[scope[lvl]], static_cast<int>(level_name(lvl).size()));
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& f : sig.functions()) {
        int len = 2 + static_cast<int>(f.name.size());
        for (const auto& a : f.arg_sorts) {
          if (m[a] >= kInf) {
            len = kInf;
            break;
          }
          len += 1 + m[a];
        }
        if (len < m[f.result_sort]) {
          m[f.result_sort] = len;
          changed = true;
        }
      }
    }
    return min_term_memo.emplace(key, std::move(m)).first->second;
  }

  // Shortest form length under the given scope: "(true)" or the shortest
  // atom. Compound forms always contain a form plus positive overhead.
  int min_form_len(const std::vector<std::string>& scope) {
    std::string key = scope_key(scope);
    auto it = min_form_memo.find(key);
    if (it != min_form_memo.end()) return it->second;
    const auto& mins = min_term_lens(scope);
    int best = 6;  // "(true)"
    for (const auto& s : sig.sorts()) {
      int mt = mins.at(s);
      if (mt < kInf) best = std::min(best, 5 + 2 * mt);
    }
    for (const auto& r : sig.relations()) {
      int len = 2 + static_cast<int>(r.name.size());
      for (const auto& a : r.arg_sorts) {
        int mt = mins.at(a);
        if (mt >= kInf) {
          len = kInf;
          break;
        }
        len += 1 + mt;
      }
      best = std::min(best, len);
    }
    min_form_memo[key] = best;
    return best;
  }

  // Appends to out every " t1 t2 ..." argument tail of exactly `remaining`
  // characters (each argument costs one separating space plus its term).
  void arg_seqs(const std::vector<std::string>& arg_sorts, size_t idx, int remaining,
                const std::string& prefix, const std::vector<std::string>& scope,
                const std::function<void(const std::string&)>& emit) {
    if (idx == arg_sorts.size()) {
      if (remaining == 0) emit(prefix);
      return;
    }
    const auto& mins = min_term_lens(scope);
    int rest_min = 0;
    for (size_t j = idx + 1; j < arg_sorts.size(); ++j) {
      int ms = mins.at(arg_sorts[j]);
      if (ms >= kInf) return;
      rest_min += 1 + ms;
    }
    int own_min = mins.at(arg_sorts[idx]);
    if (own_min >= kInf) return;
    for (int tl = own_min; 1 + tl + rest_min <= remaining; ++tl) {
      for (const std::string& t : terms(tl, arg_sorts[idx], scope))
        arg_seqs(arg_sorts, idx + 1, remaining - 1 - tl, prefix + " " + t, scope, emit);
    }
  }

  const std::vector<std::string>& terms(int len, const std::string& sort,
                                        const std::vector<std::string>& scope) {
    auto key = std::make_tuple(len, sort, scope_key(scope));
    auto it = term_memo.find(key);
    if (it != term_memo.end()) return it->second;
    std::vector<std::string> out;
    if (len > 0) {
      for (size_t lvl = 0; lvl < scope.size(); ++lvl) {
        if (scope[lvl] == sort) {
          std::string n = level_name(lvl);
          if (static_cast<int>(n.size()) == len) out.push_back(std::move(n));
        }
      }
      for (const auto& c : sig.constants())
        if (c.sort == sort && static_cast<int>(c.name.size()) == len) out.push_back(c.name);
      for (const auto& f : sig.functions()) {
        if (f.result_sort != sort) continue;
        int overhead = 2 + static_cast<int>(f.name.size());
        if (overhead >= len && !f.arg_sorts.empty()) continue;
        arg_seqs(f.arg_sorts, 0, len - overhead, "", scope,
                 [&](const std::string& tail) { out.push_back("(" + f.name + tail + ")"); });
      }
    }
    guard(out.size());
    return term_memo.emplace(std::move(key), std::move(out)).first->second;
  }

  const std::vector<std::string>& forms(int len, const std::vector<std::string>& scope) {
    auto key = std::make_pair(len, scope_key(scope));
    auto it = form_memo.find(key);
    if (it != form_memo.end()) return it->second;
    std::vector<std::string> out;
    const auto& mins = min_term_lens(scope);

    if (len == 6) out.push_back("(true)");
    if (len == 7) out.push_back("(false)");

    // (= t1 t2) : 5 + |t1| + |t2|
    for (const auto& sort : sig.sorts()) {
      int mn = mins.at(sort);
      if (mn >= kInf) continue;
      for (int l1 = mn; 5 + l1 + mn <= len; ++l1) {
        int l2 = len - 5 - l1;
        if (l2 < mn) continue;
        for (const std::string& t1 : terms(l1, sort, scope))
          for (const std::string& t2 : terms(l2, sort, scope))
            out.push_back("(= " + t1 + " " + t2 + ")");
      }
    }

    // ( rel t* )
    for (const auto& r : sig.relations()) {
      int overhead = 2 + static_cast<int>(r.name.size());
      if (r.arg_sorts.empty()) {
        if (overhead == len) out.push_back("(" + r.name + ")");
        continue;
      }
      if (overhead >= len) continue;
      arg_seqs(r.arg_sorts, 0, len - overhead, "", scope,
               [&](const std::string& tail) { out.push_back("(" + r.name + tail + ")"); });
    }

    // (not f) : 6 + |f|
    int minf = min_form_len(scope);
    if (len >= 6 + minf)
      for (const std::string& f : forms(len - 6, scope)) out.push_back("(not " + f + ")");

    // binary connectives
    struct Bin {
      const char* name;
      int overhead;  // "(" + name + " " ... " " ... ")"
    };
    for (const Bin& b : {Bin{"and", 7}, Bin{"or", 6}, Bin{"->", 6}, Bin{"<->", 7}}) {
      for (int l1 = minf; b.overhead + l1 + minf <= len; ++l1) {
        int l2 = len - b.overhead - l1;
        for (const std::string& f : forms(l1, scope))
          for (const std::string& g : forms(l2, scope))
            out.push_back("(" + std::string(b.name) + " " + f + " " + g + ")");
      }
    }

    // (exists (xN S) f) / (forall (xN S) f) : 13 + |name| + |sort| + |f|
    std::string name = level_name(scope.size());
    for (const auto& sort : sig.sorts()) {
      int overhead = 13 + static_cast<int>(name.size()) + static_cast<int>(sort.size());
      int fl = len - overhead;
      std::vector<std::string> probe = scope;
      probe.push_back(sort);
      if (fl < min_form_len(probe)) continue;
      std::vector<std::string> inner = scope;
      inner.push_back(sort);
      for (const std::string& f : forms(fl, inner)) {
        out.push_back("(exists (" + name + " " + sort + ") " + f + ")");
        out.push_back("(forall (" + name + " " + sort + ") " + f + ")");
      }
    }

    guard(out.size());
    return form_memo.emplace(std::move(key), std::move(out)).first->second;
  }

  void extend() {
    if (next_len > static_cast<int>(limits.max_length))
      throw Error(ErrorKind::EnumerationLimit,
                  "enumeration beyond max canonical length " + std::to_string(limits.max_length));
    std::vector<std::string> cls = forms(next_len, {});
    std::sort(cls.begin(), cls.end());
    all.insert(all.end(), cls.begin(), cls.end());
    ++next_len;
  }
};

SentenceEnumerator::SentenceEnumerator(const Signature& sig, EnumLimits limits)
    : impl_(std::make_unique<Impl>(sig, limits)) {}
SentenceEnumerator::~SentenceEnumerator() = default;
SentenceEnumerator::SentenceEnumerator(SentenceEnumerator&&) noexcept = default;

const Signature& SentenceEnumerator::signature() const { return impl_->sig; }

const std::string& SentenceEnumerator::text_at(size_t i) {
  while (impl_->all.size() <= i) impl_->extend();
  return impl_->all[i];
}

Sentence SentenceEnumerator::at(size_t i) { return parse_sentence(text_at(i), impl_->sig); }

FragmentEnumerator::FragmentEnumerator(FragmentDescriptor frag, EnumLimits limits)
    : frag_(frag), base_(*frag.sig, limits) {}

const std::string& FragmentEnumerator::text_at(size_t i) {
  while (members_.size() <= i) {
    const std::string& t = base_.text_at(scanned_);
    if (classify(parse_sentence(t, *frag_.sig)).in(frag_)) members_.push_back(scanned_);
    ++scanned_;
  }
  return base_.text_at(members_[i]);
}

Sentence FragmentEnumerator::at(size_t i) { return parse_sentence(text_at(i), *frag_.sig); }

Sentence enumerate_fragment(const FragmentDescriptor& f, size_t i) {
  static std::mutex mu;
  static std::map<std::pair<const Signature*, std::string>, std::unique_ptr<FragmentEnumerator>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f.sig, f.cli_name());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<FragmentEnumerator>(f)).first;
  return it->second->at(i);
}

}  // namespace ffrag
