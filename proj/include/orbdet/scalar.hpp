#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace orbdet {

/// Signed 128-bit integer that throws std::overflow_error instead of wrapping.
///
/// The exact regime multiplies up to n matrix entries per Leibniz term and sums
/// n! of them; 128 bits is ample below the enumeration cap, and the trap makes
/// the few escapes loud instead of silently wrong.
class Int128 {
 public:
  constexpr Int128() = default;
  constexpr Int128(long long value) : v_(value) {}

  friend Int128 operator+(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int128: addition overflow");
    return r;
  }
  friend Int128 operator-(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int128: subtraction overflow");
    return r;
  }
  friend Int128 operator*(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int128: multiplication overflow");
    return r;
  }
  /// Exact quotient; used by fraction-free elimination where divisibility is
  /// guaranteed. Throws on division by zero or a non-exact quotient.
  friend Int128 operator/(Int128 a, Int128 b) {
    if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
    if (a.v_ % b.v_ != 0) throw std::domain_error("Int128: inexact division");
    Int128 r;
    r.v_ = a.v_ / b.v_;
    return r;
  }

  Int128 operator-() const { return Int128(0) - *this; }
  Int128& operator+=(Int128 o) { return *this = *this + o; }
  Int128& operator-=(Int128 o) { return *this = *this - o; }
  Int128& operator*=(Int128 o) { return *this = *this * o; }

  friend bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend auto operator<=>(Int128 a, Int128 b) { return a.v_ <=> b.v_; }

  double to_double() const { return static_cast<double>(v_); }

  std::string to_string() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_)
                                   : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag != 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  __int128 v_ = 0;
};

/// The two arithmetic regimes every algorithm is templated over.
template <class T>
concept Scalar = std::same_as<T, Int128> || std::same_as<T, double>;

inline double to_double(Int128 x) { return x.to_double(); }
inline double to_double(double x) { return x; }

inline Int128 abs_value(Int128 x) { return x < Int128(0) ? -x : x; }
inline double abs_value(double x) { return std::fabs(x); }

/// Decimal text form. Doubles that hold an exactly representable integer print
/// without a fractional part so the common all-integer outputs stay readable.
inline std::string format_scalar(Int128 x) { return x.to_string(); }
inline std::string format_scalar(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9.007199254740992e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Sum accumulator: plain checked sum for the exact regime, Neumaier
/// compensation for doubles so the two enumeration paths agree to ~1 ulp even
/// under heavy cancellation.
template <Scalar T>
class Accumulator;

template <>
class Accumulator<Int128> {
 public:
  void add(Int128 x) { sum_ += x; }
  Int128 value() const { return sum_; }

 private:
  Int128 sum_{};
};

template <>
class Accumulator<double> {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace orbdet
