#ifndef RGF_CLASSIFY_HPP
#define RGF_CLASSIFY_HPP

// Membership predicates for the characterized avoidance classes, case
// decompositions used by the closed-form statistic rows, and a validator
// that compares each predicate against the enumeration oracle.

#include "rgf/avoid.hpp"
#include "rgf/enumerate.hpp"
#include "rgf/parallel.hpp"
#include "rgf/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgf {

using ClassId = std::string;

struct ClassInfo {
  ClassId id;
  std::vector<Pattern> patterns;
  std::function<bool(const Word&)> member;
};

namespace detail {

inline int first_pos(const Word& w, int letter) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == letter) return static_cast<int>(i);
  return -1;
}

inline int last_pos(const Word& w, int letter) {
  for (std::size_t i = w.size(); i > 0; --i)
    if (w[i - 1] == letter) return static_cast<int>(i - 1);
  return -1;
}

inline int count_letter(const Word& w, int letter) {
  return static_cast<int>(std::count(w.begin(), w.end(), letter));
}

// Length of the maximal prefix 1,2,3,...  A new letter in an RGF is always
// one more than the running maximum, so this prefix ends at the first repeat.
inline int staircase_len(const Word& w) {
  int s = 0;
  while (s < static_cast<int>(w.size()) && w[s] == s + 1) ++s;
  return s;
}

inline Word erase_segment(const Word& w, int begin, int len) {
  Word out;
  out.reserve(w.size() - static_cast<std::size_t>(len));
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (i < begin || i >= begin + len) out.push_back(w[i]);
  return out;
}

inline bool all_equal_to(const Word& w, int begin, int end, int letter) {
  for (int i = begin; i < end; ++i)
    if (w[i] != letter) return false;
  return true;
}

// Trailing maximal run length of w[last] within w[0..end).
inline int trailing_run_len(const Word& w, int end) {
  if (end <= 0) return 0;
  int c = w[end - 1];
  int i = end;
  while (i > 0 && w[i - 1] == c) --i;
  return end - i;
}

inline std::vector<int> distinct_letters(const Word& w, int begin, int end) {
  std::set<int> s(w.begin() + begin, w.begin() + end);
  return std::vector<int>(s.begin(), s.end());
}

// Every letter that occurs at least twice does so only in the constant
// suffix that starts at the first repeated position.
inline bool avoids_12_3(const Word& w) {
  int s = staircase_len(w);
  if (s == static_cast<int>(w.size())) return true;
  return all_equal_to(w, s, static_cast<int>(w.size()), w[s]);
}

inline bool avoids_1_23(const Word& w) {
  Word mult = multiplicities(w);
  for (std::size_t i = 1; i < mult.size(); ++i)
    if (mult[i] > 1) return false;
  int first_non_one = -1;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 1) { first_non_one = static_cast<int>(i); break; }
  if (first_non_one < 0) return true;
  int ones_after = 0;
  for (std::size_t i = first_non_one + 1; i < w.size(); ++i)
    if (w[i] == 1) ++ones_after;
  return ones_after <= 1;
}

inline bool mults_at_most(const Word& w, int cap) {
  for (int m : multiplicities(w))
    if (m > cap) return false;
  return true;
}

inline bool avoids_12_3_4(const Word& w) {
  if (max_letter(w) <= 2) return true;
  int s = staircase_len(w);
  return distinct_letters(w, s, static_cast<int>(w.size())).size() <= 2;
}

inline bool avoids_1_2_34(const Word& w) {
  if (max_letter(w) <= 2) return true;
  int f3 = first_pos(w, 3);
  std::set<int> seen;
  for (std::size_t i = f3 + 1; i < w.size(); ++i) {
    if (w[i] == 3) return false;
    if (!seen.insert(w[i]).second) return false;
  }
  return true;
}

inline bool avoids_1_234(const Word& w) {
  if (max_letter(w) == 1) return true;
  int f2 = first_pos(w, 2);
  int ones = 0, twos = 0;
  std::map<int, int> high;
  for (std::size_t i = f2 + 1; i < w.size(); ++i) {
    if (w[i] == 1) ++ones;
    else if (w[i] == 2) ++twos;
    else ++high[w[i]];
  }
  if (ones > 2 || twos > 1) return false;
  for (auto& [letter, c] : high)
    if (c > 2) return false;
  return true;
}

// Only the trailing run may push a letter past two occurrences.
inline bool avoids_123_4(const Word& w) {
  int n = static_cast<int>(w.size());
  int t = trailing_run_len(w, n);
  int c = w[n - 1];
  Word mult = multiplicities(w);
  for (int letter = 1; letter <= static_cast<int>(mult.size()); ++letter) {
    int spare = (letter == c) ? t : 0;
    if (mult[letter - 1] - spare > 2) return false;
  }
  return true;
}

inline bool avoids_134_2(const Word& w) {
  for (int letter = 1; letter <= max_letter(w); ++letter)
    if (!is_block_letter(w, letter) && !is_block_singleton_letter(w, letter))
      return false;
  return true;
}

inline bool avoids_124_3(const Word& w) {
  for (int letter = 1; letter <= max_letter(w); ++letter)
    if (!is_block_letter(w, letter) && !is_singleton_block_letter(w, letter))
      return false;
  return true;
}

inline bool avoids_13_2_4(const Word& w) {
  int m = max_letter(w);
  if (m <= 2 || weakly_increasing(w)) return true;
  int fm = first_pos(w, m);
  for (int i = 1; i < fm; ++i)
    if (w[i] < w[i - 1]) return false;
  // v = suffix from the first m: either letters within {m, m-1}, or an
  // m block followed by a single-letter block.
  bool mixed_ok = true;
  for (std::size_t i = fm; i < w.size(); ++i)
    if (w[i] != m && w[i] != m - 1) { mixed_ok = false; break; }
  if (mixed_ok) return true;
  std::size_t i = fm;
  while (i < w.size() && w[i] == m) ++i;
  if (i == w.size()) return true;
  int z = w[i];
  if (z > m - 1) return false;
  for (; i < w.size(); ++i)
    if (w[i] != z) return false;
  return true;
}

// Weakly increasing word with its second run of 1s inserted between two
// distinct letters (or at the very end).
inline bool one_block_insertion_form(const Word& w) {
  auto runs = runs_of_letter(w, 1);
  if (runs.size() != 2) return false;
  const Run& r = runs[1];
  if (!weakly_increasing(detail::erase_segment(w, r.start, r.length))) return false;
  int after = r.start + r.length;
  if (after == static_cast<int>(w.size())) return true;
  return w[after] != w[r.start - 1];
}

inline bool avoids_1_24_3(const Word& w) {
  int m = max_letter(w);
  if (m <= 2 || weakly_increasing(w)) return true;
  if (one_block_insertion_form(w)) return true;
  int f3 = first_pos(w, 3);
  for (std::size_t i = f3 + 1; i < w.size(); ++i)
    if (w[i] < w[i - 1]) return false;
  return true;
}

// Staircase prefix 1..m followed by a constant suffix of m's or of 1s.
inline bool staircase_then_m_or_ones(const Word& w) {
  int s = staircase_len(w);
  if (max_letter(w) != s) return false;
  int n = static_cast<int>(w.size());
  return all_equal_to(w, s, n, s) || all_equal_to(w, s, n, 1);
}

// 1^j 2 3 ... m, optionally with a single trailing 1.
inline bool ones_then_staircase(const Word& w) {
  int n = static_cast<int>(w.size());
  int j = 0;
  while (j < n && w[j] == 1) ++j;
  int end = n;
  if (j < n && w[n - 1] == 1) end = n - 1;
  if (end <= j && end != n) return false;
  for (int i = j; i < end; ++i)
    if (w[i] != i - j + 2) return false;
  return end == n || max_letter(w) == end - j + 1;
}

inline bool weakly_increasing_capped_below_max(const Word& w) {
  if (!weakly_increasing(w)) return false;
  int m = max_letter(w);
  Word mult = multiplicities(w);
  for (int letter = 1; letter < m; ++letter)
    if (mult[letter - 1] > 2) return false;
  return true;
}

inline bool weakly_increasing_capped_from_two(const Word& w) {
  if (!weakly_increasing(w)) return false;
  Word mult = multiplicities(w);
  for (std::size_t i = 1; i < mult.size(); ++i)
    if (mult[i] > 2) return false;
  return true;
}

// w = a . (m-1) m (m-1)^l m^k with l,k >= 1 and a weakly increasing over
// letters at most m-2.
inline bool alternating_tail_form(const Word& w) {
  int m = max_letter(w);
  if (m < 2) return false;
  int n = static_cast<int>(w.size());
  int i = 0;
  while (i < n && w[i] <= m - 2) {
    if (i > 0 && w[i] < w[i - 1]) return false;
    ++i;
  }
  if (i + 3 >= n) return false;
  if (w[i] != m - 1 || w[i + 1] != m) return false;
  i += 2;
  int l = 0;
  while (i < n && w[i] == m - 1) { ++l; ++i; }
  if (l < 1) return false;
  int k = 0;
  while (i < n && w[i] == m) { ++k; ++i; }
  return k >= 1 && i == n;
}

// w = a . (m-1)^l m^k (m-1) m with l,k >= 1 and a weakly increasing over
// letters at most m-2.
inline bool alternating_tail_form_swapped(const Word& w) {
  int m = max_letter(w);
  if (m < 2) return false;
  int n = static_cast<int>(w.size());
  int i = 0;
  while (i < n && w[i] <= m - 2) {
    if (i > 0 && w[i] < w[i - 1]) return false;
    ++i;
  }
  int l = 0;
  while (i < n && w[i] == m - 1) { ++l; ++i; }
  if (l < 1) return false;
  int k = 0;
  while (i < n && w[i] == m) { ++k; ++i; }
  if (k < 1) return false;
  return i + 2 == n && w[i] == m - 1 && w[i + 1] == m;
}

// Weakly increasing prefix with a single final letter that already occurs
// exactly once in the prefix (block suffix of length t for the block form).
inline bool single_repeat_block_suffix(const Word& w, bool single_final) {
  int n = static_cast<int>(w.size());
  int t = single_final ? 1 : trailing_run_len(w, n);
  if (t >= n) return false;
  Word u(w.begin(), w.end() - t);
  if (!weakly_increasing(u)) return false;
  if (single_final) return count_letter(u, w[n - 1]) >= 1;
  return count_letter(u, w[n - 1]) == 1;
}

// Weakly increasing word with one displaced singleton 1 (letter 1 becomes a
// block-singleton). If the singleton splits a letter block, the remainder
// after it must be a lone 2: a longer remainder breaks the block-singleton
// shape of the split letter, and a letter above 2 is preceded by a 2, which
// together with the displaced 1 and the remainder matches 1/24/3.
inline bool displaced_one_keeps_block_singleton(const Word& w) {
  auto runs = runs_of_letter(w, 1);
  if (runs.size() != 2 || runs[1].length != 1) return false;
  int p = runs[1].start;
  if (!weakly_increasing(detail::erase_segment(w, p, 1))) return false;
  int n = static_cast<int>(w.size());
  if (p + 1 == n) return true;
  if (w[p + 1] != w[p - 1]) return true;
  return w[p + 1] == 2 && (p + 2 == n || w[p + 2] != 2);
}

// Mirror form: leading 1 is a singleton and the displaced run of 1s carries
// the block (letter 1 becomes a singleton-block). A split block must leave a
// lone 2 before the run, for the mirrored reasons.
inline bool displaced_one_keeps_singleton_block(const Word& w) {
  auto runs = runs_of_letter(w, 1);
  if (runs.size() != 2 || runs[0].length != 1) return false;
  const Run& r = runs[1];
  if (!weakly_increasing(detail::erase_segment(w, r.start, r.length))) return false;
  int n = static_cast<int>(w.size());
  if (r.start + r.length == n) return true;
  int before = w[r.start - 1];
  if (w[r.start + r.length] != before) return true;
  return before == 2 && w[r.start - 2] != 2;
}

// 1^a 2 3 ... q q^j: leading 1s, the staircase up to the maximum, then a
// block of extra maxima.
inline bool ones_staircase_mblock(const Word& v) {
  int n = static_cast<int>(v.size());
  int i = 0;
  while (i < n && v[i] == 1) ++i;
  int expect = 2;
  while (i < n && v[i] == expect) { ++i; ++expect; }
  int q = expect - 1;
  if (q < 2) return i == n;
  while (i < n && v[i] == q) ++i;
  return i == n;
}

// A staircase-with-max-block word, possibly with one extra 1: either a
// trailing block of 1s on a pure staircase, or a single 1 inserted between
// two distinct letters of the carrier.
inline bool ones_staircase_suffix_or_insertion(const Word& w) {
  if (ones_staircase_mblock(w)) return true;
  int n = static_cast<int>(w.size());
  auto runs = runs_of_letter(w, 1);
  if (runs.size() != 2) return false;
  const Run& r = runs[1];
  if (r.start + r.length == n) {
    // trailing 1 block: a repeated maximum before it would pair a letter
    // repeat with the new low letter and match 1/23/4
    int i = 0;
    while (i < r.start && w[i] == 1) ++i;
    for (int expect = 2; i < r.start; ++i, ++expect)
      if (w[i] != expect) return false;
    return true;
  }
  if (r.length != 1) return false;
  if (w[r.start + 1] == w[r.start - 1]) return false;
  return ones_staircase_mblock(detail::erase_segment(w, r.start, 1));
}

// 1^a 2 3 ... m followed by a block of one letter z <= m.
inline bool ones_staircase_block_suffix(const Word& w) {
  int n = static_cast<int>(w.size());
  int a = 0;
  while (a < n && w[a] == 1) ++a;
  if (a == n) return true;
  int i = a;
  int expect = 2;
  while (i < n && w[i] == expect) { ++i; ++expect; }
  if (expect - 1 != max_letter(w)) return false;
  if (i == n) return true;
  return all_equal_to(w, i, n, w[i]);
}

}  // namespace detail

inline const std::vector<ClassInfo>& class_registry() {
  static const std::vector<ClassInfo> reg = [] {
    auto single = [](const std::string& pat, std::function<bool(const Word&)> fn) {
      return ClassInfo{pat, {parse_pattern(pat)}, std::move(fn)};
    };
    auto pair = [](const std::string& p1, const std::string& p2,
           std::function<bool(const Word&)> fn) {
      return ClassInfo{p1 + "+" + p2, {parse_pattern(p1), parse_pattern(p2)},
              std::move(fn)};
    };
    using detail::first_pos;
    std::vector<ClassInfo> v;

    v.push_back(single("1/2/3", [](const Word& w) { return max_letter(w) <= 2; }));
    v.push_back(single("1/23", detail::avoids_1_23));
    v.push_back(single("13/2", [](const Word& w) { return weakly_increasing(w); }));
    v.push_back(single("12/3", detail::avoids_12_3));
    v.push_back(single("123", [](const Word& w) { return detail::mults_at_most(w, 2); }));

    v.push_back(single("1/2/3/4", [](const Word& w) { return max_letter(w) <= 3; }));
    v.push_back(single("1234", [](const Word& w) { return detail::mults_at_most(w, 3); }));
    v.push_back(single("12/3/4", detail::avoids_12_3_4));
    v.push_back(single("1/2/34", detail::avoids_1_2_34));
    v.push_back(single("1/234", detail::avoids_1_234));
    v.push_back(single("123/4", detail::avoids_123_4));
    v.push_back(single("134/2", detail::avoids_134_2));
    v.push_back(single("124/3", detail::avoids_124_3));
    v.push_back(single("13/2/4", detail::avoids_13_2_4));
    v.push_back(single("1/24/3", detail::avoids_1_24_3));

    v.push_back(pair("12/3", "1/24/3",
            [](const Word& w) { return detail::staircase_then_m_or_ones(w); }));
    v.push_back(pair("1/23", "13/2/4",
            [](const Word& w) { return detail::ones_then_staircase(w); }));
    v.push_back(pair("13/2", "123/4", detail::weakly_increasing_capped_below_max));
    v.push_back(pair("13/2", "1/234", detail::weakly_increasing_capped_from_two));
    v.push_back(pair("13/2/4", "124/3", [](const Word& w) {
      return weakly_increasing(w) || detail::single_repeat_block_suffix(w, false) ||
         detail::alternating_tail_form(w);
    }));
    v.push_back(pair("13/2/4", "134/2", [](const Word& w) {
      return weakly_increasing(w) || detail::single_repeat_block_suffix(w, true) ||
         detail::alternating_tail_form_swapped(w);
    }));
    v.push_back(pair("14/2/3", "1/24/3", [](const Word& w) {
      if (max_letter(w) <= 2) return true;
      int f3 = first_pos(w, 3);
      for (std::size_t i = f3 + 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) return false;
      return true;
    }));
    v.push_back(pair("14/2/3", "13/2/4", [](const Word& w) {
      int m = max_letter(w);
      if (m <= 2) return true;
      int p = first_pos(w, m - 1);
      for (int i = 1; i < p; ++i)
        if (w[i] < w[i - 1]) return false;
      for (std::size_t i = p; i < w.size(); ++i)
        if (w[i] != m && w[i] != m - 1) return false;
      return true;
    }));
    v.push_back(pair("1/24/3", "134/2", [](const Word& w) {
      return weakly_increasing(w) || detail::displaced_one_keeps_block_singleton(w);
    }));
    v.push_back(pair("1/24/3", "124/3", [](const Word& w) {
      return weakly_increasing(w) || detail::displaced_one_keeps_singleton_block(w);
    }));
    v.push_back(pair("1/24/3", "1/23/4", [](const Word& w) {
      return max_letter(w) <= 2 || detail::ones_staircase_suffix_or_insertion(w);
    }));
    v.push_back(pair("13/2/4", "1/23/4", [](const Word& w) {
      return max_letter(w) <= 2 || detail::ones_staircase_block_suffix(w);
    }));
    return v;
  }();
  return reg;
}

inline const ClassInfo& class_info(const ClassId& id) {
  for (const ClassInfo& c : class_registry())
    if (c.id == id) return c;
  throw std::out_of_range("unknown avoidance class: " + id);
}

// One word assigned to a case of a characterization, with the named
// quantities the closed-form statistic rows consume.
struct CaseDecomposition {
  std::string system;
  std::string case_tag;
  std::map<std::string, long long> params;
  Word word;

  long long at(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw std::out_of_range("decomposition of " + system + " case " + case_tag +
                  " has no parameter " + key);
    return it->second;
  }
  long long get(const std::string& key, long long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

namespace detail {

inline void put_mults(CaseDecomposition& d, const std::string& prefix, const Word& mult) {
  for (std::size_t i = 0; i < mult.size(); ++i)
    d.params[prefix + std::to_string(i + 1)] = mult[i];
}

[[noreturn]] inline void bad_decompose(const std::string& system, const Word& w,
                   const std::string& why) {
  throw std::domain_error("cannot decompose " + to_string(w) + " in system " + system +
              ": " + why);
}

inline CaseDecomposition decompose_m2(const Word& w) {
  CaseDecomposition d;
  d.system = "1/2/3";
  d.word = w;
  int m = max_letter(w);
  if (m > 2) bad_decompose(d.system, w, "more than two distinct letters");
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  d.params["l"] = count_letter(w, 1);
  if (m <= 1) {
    d.case_tag = "A1";
  } else if (weakly_increasing(w)) {
    d.case_tag = "A";
  } else {
    d.case_tag = "B";
    int k = 0;
    int i = n;
    while (i > 0 && w[i - 1] == 2) { ++k; --i; }
    int j = 0;
    while (i > 0 && w[i - 1] == 1) { ++j; --i; }
    int lead = 0;
    while (lead < i && w[lead] == 1) ++lead;
    if (lead >= i || w[lead] != 2 || w[i - 1] != 2)
      bad_decompose(d.system, w, "middle segment must start and end with 2");
    d.params["i"] = lead;
    d.params["j"] = j;
    d.params["k"] = k;
  }
  return d;
}

inline CaseDecomposition decompose_m3_left(const Word& w) {
  CaseDecomposition d;
  d.system = "1/2/3/4-left";
  d.word = w;
  int m = max_letter(w);
  if (m > 3) bad_decompose(d.system, w, "more than three distinct letters");
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  Word mult = multiplicities(w);
  if (weakly_increasing(w)) {
    d.case_tag = "A";
    d.params["h1"] = mult[0];
    d.params["h2"] = mult.size() > 1 ? mult[1] : 0;
    d.params["h3"] = mult.size() > 2 ? mult[2] : 0;
    return d;
  }
  int f2 = first_pos(w, 2);
  int f3 = (m >= 3) ? first_pos(w, 3) : -1;
  int wa_end = -1;
  for (int i = (f3 < 0 ? n : f3) - 1; i >= f2; --i)
    if (w[i] == 2) { wa_end = i; break; }
  if (wa_end < 0) bad_decompose(d.system, w, "no 2 before the first 3");
  auto segment_counts = [&](int b, int e, const char* p1, const char* p2, const char* p3) {
    int c1 = 0, c2 = 0, c3 = 0;
    for (int i = b; i <= e; ++i) {
      if (w[i] == 1) ++c1;
      else if (w[i] == 2) ++c2;
      else ++c3;
    }
    d.params[p1] = c1;
    d.params[p2] = c2;
    if (p3) d.params[p3] = c3;
  };
  d.params["v"] = f2;
  d.params["wa_begin"] = f2;
  d.params["wa_len"] = wa_end - f2 + 1;
  segment_counts(f2, wa_end, "a1", "a2", nullptr);
  d.params["b1"] = d.params["b2"] = d.params["b3"] = 0;
  d.params["c1"] = d.params["c2"] = d.params["c3"] = 0;
  d.params["wb_begin"] = d.params["wb_len"] = 0;
  d.params["wc_begin"] = d.params["wc_len"] = 0;
  d.params["y"] = d.params["z"] = 0;
  if (m == 2) {
    d.case_tag = "B";
    d.params["x"] = n - 1 - wa_end;
    if (!all_equal_to(w, wa_end + 1, n, 1))
      bad_decompose(d.system, w, "letters other than 1 after the last 2");
    return d;
  }
  if (!all_equal_to(w, wa_end + 1, f3, 1))
    bad_decompose(d.system, w, "gap before the first 3 is not all 1s");
  d.params["x"] = f3 - wa_end - 1;
  int last2 = last_pos(w, 2);
  int last3 = last_pos(w, 3);
  int wb_end = (last2 > f3) ? std::min(last2, last3) : last3;
  d.params["wb_begin"] = f3;
  d.params["wb_len"] = wb_end - f3 + 1;
  segment_counts(f3, wb_end, "b1", "b2", "b3");
  int tail_start = std::max(last2, last3);
  if (wb_end == tail_start) {
    d.params["z"] = n - 1 - wb_end;
    if (!all_equal_to(w, wb_end + 1, n, 1))
      bad_decompose(d.system, w, "trailing letters are not all 1s");
  } else {
    int g = wb_end + 1;
    while (g < n && w[g] == 1) ++g;
    d.params["y"] = g - wb_end - 1;
    d.params["wc_begin"] = g;
    d.params["wc_len"] = tail_start - g + 1;
    segment_counts(g, tail_start, "c1", "c2", "c3");
    d.params["z"] = n - 1 - tail_start;
    if (!all_equal_to(w, tail_start + 1, n, 1))
      bad_decompose(d.system, w, "trailing letters are not all 1s");
  }
  d.case_tag = (last3 > last2) ? "B" : "C";
  return d;
}

inline CaseDecomposition decompose_m3_right(const Word& w) {
  CaseDecomposition d;
  d.system = "1/2/3/4-right";
  d.word = w;
  int m = max_letter(w);
  if (m > 3) bad_decompose(d.system, w, "more than three distinct letters");
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  Word mult = multiplicities(w);
  if (weakly_increasing(w)) {
    d.case_tag = "RA";
    d.params["h1"] = mult[0];
    d.params["h2"] = mult.size() > 1 ? mult[1] : 0;
    d.params["h3"] = mult.size() > 2 ? mult[2] : 0;
    return d;
  }
  auto segment_counts = [&](int b, int e, const char* p1, const char* p2, const char* p3) {
    int c1 = 0, c2 = 0, c3 = 0;
    for (int i = b; i <= e; ++i) {
      if (w[i] == 1) ++c1;
      else if (w[i] == 2) ++c2;
      else ++c3;
    }
    d.params[p1] = c1;
    d.params[p2] = c2;
    d.params[p3] = c3;
  };
  if (m == 2) {
    int l1 = last_pos(w, 1), l2 = last_pos(w, 2);
    int first = std::min(l1, l2);
    d.case_tag = (l1 < l2) ? "RH" : "RI";
    segment_counts(0, first, "a1", "a2", "a3");
    d.params["b"] = n - 1 - first;
    return d;
  }
  int l1 = last_pos(w, 1), l2 = last_pos(w, 2), l3 = last_pos(w, 3);
  int first = std::min({l1, l2, l3});
  int last = std::max({l1, l2, l3});
  int middle = l1 + l2 + l3 - first - last;
  if (last == l3) d.case_tag = (first == l1) ? "RB" : "RC";
  else if (last == l2) d.case_tag = (first == l3) ? "RD" : "RE";
  else d.case_tag = (first == l2) ? "RF" : "RG";
  segment_counts(0, first, "a1", "a2", "a3");
  segment_counts(first + 1, middle, "b1", "b2", "b3");
  d.params["c"] = n - 1 - middle;
  return d;
}

inline CaseDecomposition decompose_1_2_34(const Word& w) {
  CaseDecomposition d;
  d.system = "1/2/34";
  d.word = w;
  int m = max_letter(w);
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  if (m <= 2) {
    d.case_tag = "A";
    return d;
  }
  int f3 = first_pos(w, 3);
  int a1 = 0, a2 = 0;
  for (int i = 0; i < f3; ++i) {
    if (w[i] == 1) ++a1;
    else if (w[i] == 2) ++a2;
    else bad_decompose(d.system, w, "letter above 2 before the first 3");
  }
  int b1 = 0, b2 = 0, x = 0, y = 0;
  for (int i = f3 + 1; i < n; ++i) {
    int vpos = i - f3;
    if (w[i] == 3) bad_decompose(d.system, w, "second 3 present");
    if (w[i] == 1) { ++b1; x = vpos; }
    if (w[i] == 2) { ++b2; y = vpos; }
  }
  if (b1 > 1 || b2 > 1) bad_decompose(d.system, w, "repeated small letter after the first 3");
  d.params["a1"] = a1;
  d.params["a2"] = a2;
  d.params["b1"] = b1;
  d.params["b2"] = b2;
  d.params["x"] = x;
  d.params["y"] = y;
  d.params["ulen"] = f3;
  d.params["vlen"] = n - f3 - 1;
  int l = 0, z = 0, h = 0;
  for (int i = 0; i < f3; ++i) {
    if (w[i] == 1) l = i + 1;
    if (w[i] == 2) { h = i + 1; if (z == 0) z = i + 1; }
  }
  d.params["l"] = l;
  d.params["z"] = z;
  d.params["h"] = h;
  if (b1 == 0 && b2 == 0) d.case_tag = "B";
  else if (b1 == 0) d.case_tag = "C";
  else if (b2 == 0) d.case_tag = "D";
  else d.case_tag = (x < y) ? "E" : "F";
  return d;
}

inline CaseDecomposition decompose_12_3_4(const Word& w) {
  CaseDecomposition d;
  d.system = "12/3/4";
  d.word = w;
  int m = max_letter(w);
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  if (m <= 2) {
    d.case_tag = "A";
    return d;
  }
  int s = staircase_len(w);
  auto dv = distinct_letters(w, s, n);
  if (dv.size() > 2) bad_decompose(d.system, w, "suffix has more than two distinct letters");
  int c = dv.empty() ? 0 : dv[0];
  int de = dv.size() == 2 ? dv[1] : 0;
  int bc = c ? count_letter(Word(w.begin() + s, w.end()), c) : 0;
  int bd = de ? count_letter(Word(w.begin() + s, w.end()), de) : 0;
  int x = 0, y = 0, dcount = 0;
  if (de) {
    for (int i = s; i < n; ++i) {
      if (w[i] != de) continue;
      if (!x) x = i - s + 1;
      y = i - s + 1;
      for (int k = i + 1; k < n; ++k)
        if (w[k] == c) { ++dcount; break; }
    }
  }
  d.params["ulen"] = s;
  d.params["c"] = c;
  d.params["d"] = de;
  d.params["b_c"] = bc;
  d.params["b_d"] = bd;
  d.params["x"] = x;
  d.params["y"] = y;
  d.params["dcount"] = dcount;
  if (m > s) d.case_tag = "D";
  else if (dv.size() == 2) d.case_tag = "B";
  else d.case_tag = "C";
  return d;
}

inline CaseDecomposition decompose_13_2_4(const Word& w) {
  CaseDecomposition d;
  d.system = "13/2/4";
  d.word = w;
  int m = max_letter(w);
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  d.params["l"] = count_letter(w, 1);
  if (m <= 2) {
    d.case_tag = "A";
    return d;
  }
  int fm = first_pos(w, m);
  Word u(w.begin(), w.begin() + fm);
  Word vseg(w.begin() + fm, w.end());
  if (!weakly_increasing(u)) bad_decompose(d.system, w, "prefix before the first maximum dips");
  // letter counts: u multiplicities for letters below m, the m count from v
  Word mult = multiplicities(u);
  mult.resize(m, 0);
  mult[m - 1] = count_letter(vseg, m);
  put_mults(d, "a", mult);
  if (weakly_increasing(w)) {
    d.case_tag = "B";
    d.params["z"] = 0;
    d.params["b_z"] = 0;
    d.params["b_m"] = mult[m - 1];
    d.params["x"] = d.params["y"] = 0;
    return d;
  }
  int z = 0;
  for (int letter : vseg)
    if (letter != m) {
      if (z && letter != z) bad_decompose(d.system, w, "suffix has two letters besides the maximum");
      z = letter;
    }
  if (!z) bad_decompose(d.system, w, "suffix is a pure maximum block in a non monotone word");
  std::size_t i = 0;
  while (i < vseg.size() && vseg[i] == m) ++i;
  bool block_shape = all_equal_to(vseg, static_cast<int>(i), static_cast<int>(vseg.size()), z);
  d.params["z"] = z;
  d.params["b_z"] = count_letter(vseg, z);
  d.params["b_m"] = count_letter(vseg, m);
  int x = 0, y = 0;
  for (std::size_t t = 0; t < vseg.size(); ++t) {
    if (vseg[t] == m) x = static_cast<int>(t) + 1;
    if (vseg[t] == z) y = static_cast<int>(t) + 1;
  }
  d.params["x"] = x;
  d.params["y"] = y;
  d.case_tag = block_shape ? "C" : "D";
  if (!block_shape && z != m - 1)
    bad_decompose(d.system, w, "interleaved suffix letter is not one below the maximum");
  return d;
}

inline CaseDecomposition decompose_1_24_3(const Word& w) {
  CaseDecomposition d;
  d.system = "1/24/3";
  d.word = w;
  int m = max_letter(w);
  int n = static_cast<int>(w.size());
  d.params["n"] = n;
  d.params["m"] = m;
  d.params["l"] = count_letter(w, 1);
  if (m <= 2) {
    d.case_tag = "A";
    return d;
  }
  if (weakly_increasing(w)) {
    d.case_tag = "B";
    put_mults(d, "a", multiplicities(w));
    return d;
  }
  if (one_block_insertion_form(w)) {
    d.case_tag = "C";
    auto runs = runs_of_letter(w, 1);
    const Run& r = runs[1];
    Word base = erase_segment(w, r.start, r.length);
    d.params["x"] = w[r.start - 1];
    d.params["b1"] = r.length;
    put_mults(d, "a", multiplicities(base));
    return d;
  }
  int f3 = first_pos(w, 3);
  for (int i = f3 + 1; i < n; ++i)
    if (w[i] < w[i - 1]) bad_decompose(d.system, w, "suffix from the first 3 dips");
  d.case_tag = "D";
  int c = 0, dd = 0, f = 0;
  for (int i = 0; i < f3; ++i) {
    if (w[i] == 1) { f = i + 1; }
    else { dd = i + 1; if (!c) c = i + 1; }
  }
  // full-word multiplicities first; every 1 and 2 sits in the prefix, so
  // a1 and a2 double as the prefix counts the rows expect
  put_mults(d, "a", multiplicities(w));
  d.params["c"] = c;
  d.params["d"] = dd;
  d.params["f"] = f;
  d.params["ulen"] = f3;
  return d;
}

inline CaseDecomposition decompose_staircase_pair(const Word& w) {
  CaseDecomposition d;
  d.system = "12/3+1/24/3";
  d.word = w;
  int n = static_cast<int>(w.size());
  int m = max_letter(w);
  int s = staircase_len(w);
  d.params["n"] = n;
  d.params["m"] = m;
  if (m != s) bad_decompose(d.system, w, "maximum letter outside the staircase prefix");
  if (all_equal_to(w, s, n, m)) {
    d.case_tag = "A";
    d.params["j"] = n - s;
    d.params["k"] = 0;
  } else if (all_equal_to(w, s, n, 1)) {
    d.case_tag = "B";
    d.params["j"] = 0;
    d.params["k"] = n - s;
  } else {
    bad_decompose(d.system, w, "suffix is not a constant block");
  }
  return d;
}

inline CaseDecomposition decompose_ones_staircase_pair(const Word& w) {
  CaseDecomposition d;
  d.system = "1/23+13/2/4";
  d.word = w;
  int n = static_cast<int>(w.size());
  int m = max_letter(w);
  d.params["n"] = n;
  d.params["m"] = m;
  int j = 0;
  while (j < n && w[j] == 1) ++j;
  bool trailing_one = (j < n && w[n - 1] == 1);
  int end = trailing_one ? n - 1 : n;
  for (int i = j; i < end; ++i)
    if (w[i] != i - j + 2) bad_decompose(d.system, w, "middle is not the staircase 2..m");
  d.params["j"] = j;
  d.case_tag = trailing_one ? "B" : "A";
  return d;
}

}  // namespace detail

inline const std::vector<std::string>& case_systems() {
  static const std::vector<std::string> systems = {
    "1/2/3",   "1/2/3/4-left", "1/2/3/4-right", "1/2/34",       "12/3/4",
    "13/2/4",  "1/24/3",       "12/3+1/24/3",   "1/23+13/2/4"};
  return systems;
}

inline ClassId class_of_system(const std::string& system) {
  if (system == "1/2/3/4-left" || system == "1/2/3/4-right") return "1/2/3/4";
  return system;
}

inline CaseDecomposition decompose(const std::string& system, const Word& w) {
  require_rgf(w, "decompose");
  if (system == "1/2/3") return detail::decompose_m2(w);
  if (system == "1/2/3/4-left") return detail::decompose_m3_left(w);
  if (system == "1/2/3/4-right") return detail::decompose_m3_right(w);
  if (system == "1/2/34") return detail::decompose_1_2_34(w);
  if (system == "12/3/4") return detail::decompose_12_3_4(w);
  if (system == "13/2/4") return detail::decompose_13_2_4(w);
  if (system == "1/24/3") return detail::decompose_1_24_3(w);
  if (system == "12/3+1/24/3") return detail::decompose_staircase_pair(w);
  if (system == "1/23+13/2/4") return detail::decompose_ones_staircase_pair(w);
  throw std::domain_error("no case decomposition for system " + system);
}

// Rebuild the word from the stored segment boundaries. Exercises the claim
// that the four-part segmentation covers every word of the class exactly.
inline Word reserialize(const CaseDecomposition& d) {
  if (d.system != "1/2/3/4-left")
    throw std::domain_error("reserialize only supports the 1/2/3/4-left system");
  const Word& w = d.word;
  if (d.case_tag == "A") return w;
  Word out(static_cast<std::size_t>(d.at("v")), 1);
  auto copy_seg = [&](const char* b, const char* l) {
    long long begin = d.at(b), len = d.at(l);
    for (long long i = 0; i < len; ++i) out.push_back(w[begin + i]);
  };
  copy_seg("wa_begin", "wa_len");
  out.insert(out.end(), static_cast<std::size_t>(d.at("x")), 1);
  copy_seg("wb_begin", "wb_len");
  out.insert(out.end(), static_cast<std::size_t>(d.at("y")), 1);
  copy_seg("wc_begin", "wc_len");
  out.insert(out.end(), static_cast<std::size_t>(d.at("z")), 1);
  return out;
}

struct ClassValidation {
  ClassId id;
  int n = 0;
  long long oracle_count = 0;
  long long predicate_count = 0;
  // words the predicate rejects but the oracle accepts, and vice versa
  std::vector<Word> missed;
  std::vector<Word> extra;
  bool ok() const { return missed.empty() && extra.empty(); }
};

inline ClassValidation validate_class(const ClassId& id, int n, int threads = 1) {
  const ClassInfo& info = class_info(id);
  ClassValidation r;
  r.id = id;
  r.n = n;
  constexpr std::size_t kMaxWitnesses = 10;
  auto check = [&](const Word& w, ClassValidation& acc) {
    bool predicted = info.member(w);
    bool actual = avoids(w, info.patterns);
    if (actual) ++acc.oracle_count;
    if (predicted) ++acc.predicate_count;
    if (actual && !predicted && acc.missed.size() < kMaxWitnesses) acc.missed.push_back(w);
    if (!actual && predicted && acc.extra.size() < kMaxWitnesses) acc.extra.push_back(w);
  };
  if (threads <= 1) {
    for_each_rgf(n, [&](const Word& w) { check(w, r); });
    return r;
  }
  std::vector<Word> words = all_rgfs(n);
  auto chunks = make_chunks(words.size(), threads);
  std::vector<ClassValidation> partial(chunks.size());
  run_chunked(words.size(), threads,
        [&](std::size_t idx, std::size_t begin, std::size_t end) {
          for (std::size_t i = begin; i < end; ++i) check(words[i], partial[idx]);
        });
  for (const ClassValidation& p : partial) {
    r.oracle_count += p.oracle_count;
    r.predicate_count += p.predicate_count;
    for (const Word& w : p.missed)
      if (r.missed.size() < kMaxWitnesses) r.missed.push_back(w);
    for (const Word& w : p.extra)
      if (r.extra.size() < kMaxWitnesses) r.extra.push_back(w);
  }
  return r;
}

}  // namespace rgf

#endif
