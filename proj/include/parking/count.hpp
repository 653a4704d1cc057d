#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parking {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Exact nonnegative count. Every operation is checked; nothing wraps.
class Count {
 public:
  using rep = unsigned __int128;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static Count from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty count literal");
    Count r;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad count literal: " + std::string(s));
      r = r * Count(10) + Count(static_cast<std::uint64_t>(c - '0'));
    }
    return r;
  }

  constexpr rep raw() const { return v_; }

  friend Count operator+(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("count addition overflow");
    return r;
  }
  friend Count operator-(Count a, Count b) {
    Count r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("count subtraction underflow");
    return r;
  }
  friend Count operator*(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("count multiplication overflow");
    return r;
  }
  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator-=(Count o) { return *this = *this - o; }
  Count& operator*=(Count o) { return *this = *this * o; }

  // Division that must come out even. A remainder means the caller has a bug.
  Count exact_div(Count d) const {
    if (d.v_ == 0) throw std::domain_error("count division by zero");
    if (v_ % d.v_ != 0) throw std::logic_error("non-exact division in count recursion");
    Count r;
    r.v_ = v_ / d.v_;
    return r;
  }

  friend constexpr bool operator==(Count a, Count b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Count a, Count b) { return a.v_ <=> b.v_; }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string s;
    rep x = v_;
    while (x != 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
  }

 private:
  rep v_ = 0;
};

inline std::string to_string(Count c) { return c.str(); }

// base^exp for exp >= -1. The recursions only ever raise 1 to the power -1.
inline Count power(std::int64_t base, std::int64_t exp) {
  if (base < 0) throw std::domain_error("negative base in count power");
  if (exp == -1) {
    if (base != 1) throw std::domain_error("power with exponent -1 on base other than 1");
    return Count(1);
  }
  if (exp < -1) throw std::domain_error("unsupported negative exponent");
  Count r(1);
  Count b(static_cast<std::uint64_t>(base));
  for (std::int64_t i = 0; i < exp; ++i) r *= b;
  return r;
}

inline Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Count(0);
  k = std::min(k, n - k);
  Count r(1);
  for (std::int64_t i = 0; i < k; ++i) {
    r = (r * Count(static_cast<std::uint64_t>(n - i))).exact_div(Count(static_cast<std::uint64_t>(i + 1)));
  }
  return r;
}

}  // namespace parking
