#ifndef RGF_AVOID_HPP
#define RGF_AVOID_HPP

// Pattern containment for set partitions.
//
// A partition sigma contains a pattern pi when restricting sigma to some
// support set and standardizing gives pi. On words this reads: some
// subsequence of sigma's RGF, relabeled by first occurrence, equals pi's
// RGF. Only the pattern of equalities and first appearances matters; the
// relative order of the letter values does not.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rgf/enumerate.hpp"
#include "rgf/parallel.hpp"

namespace rgf {

struct Pattern {
  Word word;          // canonical RGF of the pattern
  std::string label;  // partition spelling, e.g. "13/2/4"

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.word == b.word; }
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.word < b.word; }
};

// Patterns are spelled as partitions: "1234" is the one-block partition.
inline Pattern parse_pattern(const std::string& s) {
  SetPartition p = parse_partition(s);
  return Pattern{rgf_from_partition(p), to_string(p)};
}

// Comma separated pattern list, e.g. "12/3,1/24/3".
inline std::vector<Pattern> parse_pattern_list(const std::string& s) {
  std::vector<Pattern> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("parse_pattern_list: empty pattern in '" + s + "'");
    out.push_back(parse_pattern(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Backtracking matcher. Pattern letters map injectively onto word letter
// values; a pattern letter seen before must reuse its value, a new one must
// take a value not yet used.
inline bool contains(const Word& w, const Word& pattern_word) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern_word.size());
  if (k == 0) return true;
  if (n < k) return false;
  const int kmax = max_letter(pattern_word);
  const int wmax = max_letter(w);
  std::vector<int> assigned(kmax + 1, 0);
  std::vector<char> used(wmax + 1, 0);
  std::function<bool(int, int)> rec = [&](int pi, int wi) -> bool {
    if (pi == k) return true;
    const int letter = pattern_word[pi];
    const int last_start = n - (k - pi);
    for (int i = wi; i <= last_start; ++i) {
      const int v = w[i];
      if (assigned[letter] != 0) {
        if (v != assigned[letter]) continue;
        if (rec(pi + 1, i + 1)) return true;
      } else {
        if (used[v]) continue;
        assigned[letter] = v;
        used[v] = 1;
        const bool ok = rec(pi + 1, i + 1);
        assigned[letter] = 0;
        used[v] = 0;
        if (ok) return true;
      }
    }
    return false;
  };
  return rec(0, 0);
}

inline bool contains(const Word& w, const Pattern& p) { return contains(w, p.word); }

inline bool avoids(const Word& w, const std::vector<Pattern>& patterns) {
  for (const auto& p : patterns)
    if (contains(w, p.word)) return false;
  return true;
}

inline bool avoids(const Word& w, const Pattern& p) { return !contains(w, p.word); }

// All length-n avoiders of every listed pattern, in lexicographic order.
inline std::vector<Word> avoidance_class(int n, const std::vector<Pattern>& patterns) {
  std::vector<Word> out;
  for_each_rgf(n, [&](const Word& w) {
    if (avoids(w, patterns)) out.push_back(w);
  });
  return out;
}

inline BigCount count_avoiders(int n, const std::vector<Pattern>& patterns, int threads = 1) {
  if (threads <= 1) {
    long long c = 0;
    for_each_rgf(n, [&](const Word& w) {
      if (avoids(w, patterns)) ++c;
    });
    return BigCount(c);
  }
  std::vector<Word> words = all_rgfs(n);
  std::vector<long long> per_chunk(chunk_count(words.size(), threads), 0);
  run_chunked(words.size(), threads, [&](std::size_t c, std::size_t b, std::size_t e) {
    long long local = 0;
    for (std::size_t i = b; i < e; ++i)
      if (avoids(words[i], patterns)) ++local;
    per_chunk[c] = local;
  });
  BigCount total = 0;
  for (long long c : per_chunk) total += BigCount(c);
  return total;
}

// Shared word list with per-pattern avoidance masks. Audits touching many
// classes at one length reuse a single table.
class AvoiderTable {
 public:
  explicit AvoiderTable(int n, int threads = 1) : n_(n), threads_(threads), words_(all_rgfs(n)) {}

  int n() const { return n_; }
  const std::vector<Word>& words() const { return words_; }

  // mask[i] == 1 when words()[i] avoids p.
  const std::vector<char>& mask(const Pattern& p) {
    auto it = masks_.find(p.word);
    if (it != masks_.end()) return it->second;
    std::vector<char> m(words_.size(), 0);
    run_chunked(words_.size(), threads_, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) m[i] = contains(words_[i], p.word) ? 0 : 1;
    });
    return masks_.emplace(p.word, std::move(m)).first->second;
  }

  std::vector<char> class_mask(const std::vector<Pattern>& patterns) {
    std::vector<char> m(words_.size(), 1);
    for (const auto& p : patterns) {
      const auto& pm = mask(p);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] & pm[i];
    }
    return m;
  }

  std::vector<Word> members(const std::vector<Pattern>& patterns) {
    auto m = class_mask(patterns);
    std::vector<Word> out;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) out.push_back(words_[i]);
    return out;
  }

  BigCount count(const std::vector<Pattern>& patterns) {
    auto m = class_mask(patterns);
    long long c = 0;
    for (char b : m) c += b;
    return BigCount(c);
  }

 private:
  int n_;
  int threads_;
  std::vector<Word> words_;
  std::map<Word, std::vector<char>> masks_;
};

}  // namespace rgf

#endif
