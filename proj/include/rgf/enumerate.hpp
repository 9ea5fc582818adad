#ifndef RGF_ENUMERATE_HPP
#define RGF_ENUMERATE_HPP

// Streaming enumeration of RGFs in lexicographic order, plus the exact
// combinatorial counters the cardinality audits lean on.

#include <vector>

#include "rgf/checked.hpp"
#include "rgf/word.hpp"

namespace rgf {

struct EnumOptions {
  int max_letter = 0;            // 0 means unbounded
  int fixed_max = 0;             // 0 means any; else require exactly this maximum
  bool weakly_increasing = false;
};

namespace detail {

template <typename Fn>
void extend_rgf(Word& w, int n, int mx, const EnumOptions& opt, Fn& fn) {
  if (static_cast<int>(w.size()) == n) {
    if (opt.fixed_max == 0 || mx == opt.fixed_max) fn(static_cast<const Word&>(w));
    return;
  }
  if (opt.fixed_max > 0 && mx + (n - static_cast<int>(w.size())) < opt.fixed_max) return;
  int lo = (opt.weakly_increasing && !w.empty()) ? w.back() : 1;
  int hi = mx + 1;
  if (opt.max_letter > 0 && hi > opt.max_letter) hi = opt.max_letter;
  if (opt.fixed_max > 0 && hi > opt.fixed_max) hi = opt.fixed_max;
  for (int a = lo; a <= hi; ++a) {
    w.push_back(a);
    extend_rgf(w, n, mx > a ? mx : a, opt, fn);
    w.pop_back();
  }
}

}  // namespace detail

template <typename Fn>
void for_each_rgf(int n, Fn&& fn, EnumOptions opt = {}) {
  if (n < 0) throw std::invalid_argument("for_each_rgf: negative length");
  if (n == 0) return;
  Word w;
  w.reserve(n);
  detail::extend_rgf(w, n, 0, opt, fn);
}

inline std::vector<Word> all_rgfs(int n, EnumOptions opt = {}) {
  std::vector<Word> out;
  for_each_rgf(n, [&](const Word& w) { out.push_back(w); }, opt);
  return out;
}

inline BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) r = exact_div(r * BigCount(n - k + i), i);
  return r;
}

// Stirling numbers of the second kind; zero outside 0 <= k <= n.
inline BigCount stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;  // k == 0 == n
  if (k == 0) return 0;
  std::vector<BigCount> row(k + 1, BigCount(0));
  row[0] = 1;  // S(0,0); cleared after the first item since S(i,0) = 0 for i >= 1
  for (int i = 1; i <= n; ++i) {
    for (int j = i < k ? i : k; j >= 1; --j) row[j] = row[j] * BigCount(j) + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

inline BigCount bell(int n) {
  BigCount b = 0;
  for (int k = 0; k <= n; ++k) b += stirling2(n, k);
  return b;
}

// Weakly increasing RGFs of length n with maximum m are multiplicity vectors
// (a_1..a_m) of positive parts summing to n.
inline BigCount count_weakly_increasing(int n, int m) { return binomial(n - 1, n - m); }

}  // namespace rgf

#endif
