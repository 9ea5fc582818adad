#ifndef RGF_TESTS_ORACLE_HPP
#define RGF_TESTS_ORACLE_HPP

// Reference containment check for the test suite, kept independent of the
// library matcher on purpose: it walks every position subset of the right
// size, relabels the picked subsequence by first occurrence with its own
// code, and compares against the pattern word.

#include <vector>

#include "rgf/word.hpp"

namespace rgf_test {

inline std::vector<int> relabel_first_occurrence(const std::vector<int>& v) {
  std::vector<int> seen;  // seen[j] is the original value labeled j+1
  std::vector<int> out;
  out.reserve(v.size());
  for (int a : v) {
    int label = 0;
    for (std::size_t j = 0; j < seen.size(); ++j) {
      if (seen[j] == a) {
        label = static_cast<int>(j) + 1;
        break;
      }
    }
    if (label == 0) {
      seen.push_back(a);
      label = static_cast<int>(seen.size());
    }
    out.push_back(label);
  }
  return out;
}

inline bool contains_oracle(const rgf::Word& w, const rgf::Word& pattern_word) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern_word.size());
  if (k == 0) return true;
  if (n < k) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = w[idx[i]];
    if (relabel_first_occurrence(sub) == pattern_word) return true;
    // advance to the next k-subset in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace rgf_test

#endif
