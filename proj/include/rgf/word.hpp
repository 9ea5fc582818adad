#ifndef RGF_WORD_HPP
#define RGF_WORD_HPP

// Set partitions in restricted-growth form.
//
// A restricted growth function (RGF) over [n] is a word w with w(1) = 1 and
// w(i) <= 1 + max(w(1)..w(i-1)). Reading letter values as block indices in
// order of block minima makes RGFs a canonical form for set partitions.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgf {

using Word = std::vector<int>;

// Blocks sorted ascending internally and ordered by their minima.
using SetPartition = std::vector<std::vector<int>>;

inline bool is_rgf(const Word& w) {
  int mx = 0;
  for (int a : w) {
    if (a < 1 || a > mx + 1) return false;
    mx = std::max(mx, a);
  }
  return true;
}

inline void require_rgf(const Word& w, const char* where) {
  if (w.empty()) throw std::invalid_argument(std::string(where) + ": empty word");
  if (!is_rgf(w)) throw std::invalid_argument(std::string(where) + ": not a restricted growth function");
}

inline int max_letter(const Word& w) {
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

// mult[i-1] is the multiplicity of letter i; the vector has max_letter entries.
inline std::vector<int> multiplicities(const Word& w) {
  std::vector<int> m(max_letter(w), 0);
  for (int a : w) ++m[a - 1];
  return m;
}

inline bool weakly_increasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

inline Word parse_word(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_word: empty input");
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("parse_word: expected digits 1-9, got '" + std::string(1, c) + "'");
    w.push_back(c - '0');
  }
  require_rgf(w, "parse_word");
  return w;
}

inline std::string to_string(const Word& w) {
  std::string s;
  bool wide = max_letter(w) > 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

inline SetPartition partition_from_rgf(const Word& w) {
  require_rgf(w, "partition_from_rgf");
  SetPartition blocks(max_letter(w));
  for (size_t i = 0; i < w.size(); ++i) blocks[w[i] - 1].push_back(static_cast<int>(i) + 1);
  return blocks;
}

namespace detail {

inline void canonicalize(SetPartition& p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end(), [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}

}  // namespace detail

// Elements must form {1..n} with no repeats; blocks may arrive in any order.
inline Word rgf_from_partition(const SetPartition& p) {
  SetPartition q = p;
  for (const auto& b : q)
    if (b.empty()) throw std::invalid_argument("rgf_from_partition: empty block");
  detail::canonicalize(q);
  size_t n = 0;
  for (const auto& b : q) n += b.size();
  std::vector<int> letter_of(n + 1, 0);
  for (size_t bi = 0; bi < q.size(); ++bi)
    for (int e : q[bi]) {
      if (e < 1 || static_cast<size_t>(e) > n || letter_of[e] != 0)
        throw std::invalid_argument("rgf_from_partition: elements must form 1..n without repeats");
      letter_of[e] = static_cast<int>(bi) + 1;
    }
  Word w(n);
  for (size_t e = 1; e <= n; ++e) w[e - 1] = letter_of[e];
  require_rgf(w, "rgf_from_partition");
  return w;
}

// Accepts "1347/25/68" (one digit per element) or "13,4/2/5,11" (comma
// separated elements, needed past 9).
inline SetPartition parse_partition(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_partition: empty input");
  SetPartition p;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t slash = s.find('/', pos);
    std::string block = s.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (block.empty()) throw std::invalid_argument("parse_partition: empty block in '" + s + "'");
    std::vector<int> b;
    if (block.find(',') != std::string::npos) {
      size_t p2 = 0;
      while (p2 <= block.size()) {
        size_t comma = block.find(',', p2);
        std::string tok = block.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("parse_partition: bad element '" + tok + "'");
        b.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        p2 = comma + 1;
      }
    } else {
      for (char c : block) {
        if (c < '1' || c > '9') throw std::invalid_argument("parse_partition: bad element '" + std::string(1, c) + "'");
        b.push_back(c - '0');
      }
    }
    p.push_back(std::move(b));
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  detail::canonicalize(p);
  return p;
}

inline std::string to_string(const SetPartition& p) {
  int mx = 0;
  for (const auto& b : p)
    for (int e : b) mx = std::max(mx, e);
  std::string s;
  for (size_t bi = 0; bi < p.size(); ++bi) {
    if (bi) s += '/';
    for (size_t i = 0; i < p[bi].size(); ++i) {
      if (mx > 9 && i) s += ',';
      s += std::to_string(p[bi][i]);
    }
  }
  return s;
}

// Complement: element x becomes n+1-x. Defined for partitions of {1..n}.
inline SetPartition complement(const SetPartition& p) {
  size_t n = 0;
  for (const auto& b : p) n += b.size();
  std::vector<char> seen(n + 1, 0);
  SetPartition q;
  q.reserve(p.size());
  for (const auto& b : p) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) {
      if (e < 1 || static_cast<size_t>(e) > n || seen[e]) throw std::invalid_argument("complement: elements must form 1..n");
      seen[e] = 1;
      nb.push_back(static_cast<int>(n) + 1 - e);
    }
    q.push_back(std::move(nb));
  }
  detail::canonicalize(q);
  return q;
}

inline Word complement(const Word& w) { return rgf_from_partition(complement(partition_from_rgf(w))); }

// Keep only the named elements; blocks keep their original labels.
inline SetPartition restrict_to(const SetPartition& p, const std::set<int>& keep) {
  SetPartition q;
  for (const auto& b : p) {
    std::vector<int> nb;
    for (int e : b)
      if (keep.count(e)) nb.push_back(e);
    if (!nb.empty()) q.push_back(std::move(nb));
  }
  detail::canonicalize(q);
  return q;
}

// Relabel the elements order-isomorphically onto {1..k}.
inline SetPartition standardize(const SetPartition& p) {
  std::set<int> elems;
  for (const auto& b : p)
    for (int e : b)
      if (!elems.insert(e).second) throw std::invalid_argument("standardize: repeated element");
  std::map<int, int> rank;
  int r = 0;
  for (int e : elems) rank[e] = ++r;
  SetPartition q;
  q.reserve(p.size());
  for (const auto& b : p) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back(rank[e]);
    q.push_back(std::move(nb));
  }
  detail::canonicalize(q);
  return q;
}

// Relabel an arbitrary letter sequence by order of first occurrence; the
// result is always an RGF. This is the equality test behind containment.
inline Word first_occurrence_standardization(const std::vector<int>& v) {
  std::map<int, int> label;
  Word out;
  out.reserve(v.size());
  for (int a : v) {
    auto it = label.find(a);
    if (it == label.end()) it = label.emplace(a, static_cast<int>(label.size()) + 1).first;
    out.push_back(it->second);
  }
  return out;
}

// Maximal runs of one letter, in left-to-right order.
struct Run {
  int start;   // 0-based position
  int length;
};

inline std::vector<Run> runs_of_letter(const Word& w, int letter) {
  std::vector<Run> runs;
  int i = 0, n = static_cast<int>(w.size());
  while (i < n) {
    if (w[i] == letter) {
      int j = i;
      while (j < n && w[j] == letter) ++j;
      runs.push_back({i, j - i});
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

// Run-shape classes for one letter.
//
//   Block:           all occurrences form a single run.
//   BlockSingleton:  a run, then exactly one later occurrence.
//   SingletonBlock:  one occurrence, then exactly one later run.
//
// A letter with two single occurrences fits both two-run shapes; the enum
// reports BlockSingleton for it, and the predicates below each answer true.
enum class LetterShape { Block, BlockSingleton, SingletonBlock, Other };

namespace detail {
inline std::vector<Run> runs_checked(const Word& w, int letter, const char* where) {
  auto runs = runs_of_letter(w, letter);
  if (runs.empty()) throw std::invalid_argument(std::string(where) + ": letter does not occur");
  return runs;
}
}  // namespace detail

inline bool is_block_letter(const Word& w, int letter) {
  return detail::runs_checked(w, letter, "is_block_letter").size() == 1;
}

inline bool is_block_singleton_letter(const Word& w, int letter) {
  auto runs = detail::runs_checked(w, letter, "is_block_singleton_letter");
  return runs.size() == 2 && runs[1].length == 1;
}

inline bool is_singleton_block_letter(const Word& w, int letter) {
  auto runs = detail::runs_checked(w, letter, "is_singleton_block_letter");
  return runs.size() == 2 && runs[0].length == 1;
}

inline LetterShape letter_shape(const Word& w, int letter) {
  auto runs = detail::runs_checked(w, letter, "letter_shape");
  if (runs.size() == 1) return LetterShape::Block;
  if (runs.size() == 2 && runs[1].length == 1) return LetterShape::BlockSingleton;
  if (runs.size() == 2 && runs[0].length == 1) return LetterShape::SingletonBlock;
  return LetterShape::Other;
}

}  // namespace rgf

#endif
