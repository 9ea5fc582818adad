#ifndef RGF_CHECKED_HPP
#define RGF_CHECKED_HPP

// Exact counting arithmetic. Every cardinality and formula value in this
// library fits comfortably in 64 bits, but a silent wraparound would be
// worse than a crash, so all operations trap overflow.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgf {

class BigCount {
 public:
  BigCount() = default;
  // Implicit on purpose: formula code reads as plain arithmetic.
  BigCount(long long v) : v_(v) {}

  long long value() const { return v_; }

  friend BigCount operator+(BigCount a, BigCount b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("BigCount: add overflow");
    return BigCount(r);
  }
  friend BigCount operator-(BigCount a, BigCount b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("BigCount: sub overflow");
    return BigCount(r);
  }
  friend BigCount operator*(BigCount a, BigCount b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("BigCount: mul overflow");
    return BigCount(r);
  }
  BigCount operator-() const { return BigCount(0) - *this; }
  BigCount& operator+=(BigCount o) { *this = *this + o; return *this; }
  BigCount& operator-=(BigCount o) { *this = *this - o; return *this; }
  BigCount& operator*=(BigCount o) { *this = *this * o; return *this; }

  friend bool operator==(BigCount a, BigCount b) { return a.v_ == b.v_; }
  friend bool operator!=(BigCount a, BigCount b) { return a.v_ != b.v_; }
  friend bool operator<(BigCount a, BigCount b) { return a.v_ < b.v_; }
  friend bool operator<=(BigCount a, BigCount b) { return a.v_ <= b.v_; }
  friend bool operator>(BigCount a, BigCount b) { return a.v_ > b.v_; }
  friend bool operator>=(BigCount a, BigCount b) { return a.v_ >= b.v_; }

 private:
  long long v_ = 0;
};

inline std::string to_string(BigCount c) { return std::to_string(c.value()); }

// Integer division that must be exact; a nonzero remainder means a formula
// was transcribed wrong, which should fail loudly.
inline BigCount exact_div(BigCount a, long long d) {
  if (d == 0) throw std::domain_error("exact_div: zero divisor");
  if (a.value() % d != 0) throw std::domain_error("exact_div: remainder " + std::to_string(a.value() % d));
  return BigCount(a.value() / d);
}

inline BigCount pow2(int e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  if (e > 62) throw std::overflow_error("pow2: exponent too large");
  return BigCount(1LL << e);
}

}  // namespace rgf

#endif
