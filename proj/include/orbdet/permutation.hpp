#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbdet {

/// +1 or -1, closed under multiplication.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(+1); }
  static constexpr Sign minus() { return Sign(-1); }
  /// (-1)^exponent
  static constexpr Sign of_parity(long long exponent) {
    return Sign(exponent % 2 == 0 ? +1 : -1);
  }

  constexpr int value() const { return v_; }
  constexpr char symbol() const { return v_ > 0 ? '+' : '-'; }
  constexpr Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
  constexpr bool operator==(const Sign&) const = default;

 private:
  explicit constexpr Sign(int v) : v_(static_cast<signed char>(v)) {}
  signed char v_ = +1;
};

/// A permutation of {1,...,n} in one-line notation: values()[i-1] is the image
/// of i. Application, composition and inversion all speak 1-based so the code
/// reads like the algebra it implements.
class Permutation {
 public:
  /// Permutation objects stay this small; enumerating-all-of-S_n operations
  /// have their own tighter cap (see determinant.hpp).
  static constexpr int order_cap = 12;

  explicit Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    int n = static_cast<int>(v_.size());
    if (n < 1) throw std::invalid_argument("permutation: empty one-line form");
    if (n > order_cap)
      throw std::invalid_argument("permutation: order " + std::to_string(n) +
                                  " above cap " + std::to_string(order_cap));
    unsigned seen = 0;
    for (int x : v_) {
      if (x < 1 || x > n)
        throw std::invalid_argument("permutation: value " + std::to_string(x) +
                                    " outside 1.." + std::to_string(n));
      if (seen & (1u << (x - 1)))
        throw std::invalid_argument("permutation: duplicate value " + std::to_string(x));
      seen |= 1u << (x - 1);
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(check_order(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  /// The full cycle i -> i+1 (n -> 1) that generates every cyclic orbit.
  static Permutation rotation(int n) { return rotation_power(n, 1); }

  static Permutation rotation_power(int n, long long r) {
    check_order(n);
    long long s = ((r % n) + n) % n;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<int>((i + s) % n) + 1;
    return Permutation(std::move(v));
  }

  /// i -> n+1-i.
  static Permutation reversal(int n) {
    std::vector<int> v(check_order(n));
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
  }

  /// Parses the text form "[1,3,2,4]" (spaces allowed after commas).
  static Permutation parse(std::string_view text);

  int order() const { return static_cast<int>(v_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const {
    if (i < 1 || i > order())
      throw std::invalid_argument("permutation: index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(order()));
    return v_[i - 1];
  }

  std::span<const int> values() const { return v_; }

  /// (this o q)(i) = this(q(i)).
  Permutation compose(const Permutation& q) const {
    if (q.order() != order())
      throw std::invalid_argument("permutation: compose order mismatch");
    std::vector<int> v(order());
    for (int i = 0; i < order(); ++i) v[i] = v_[q.v_[i] - 1];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(order());
    for (int i = 0; i < order(); ++i) v[v_[i] - 1] = i + 1;
    return Permutation(std::move(v));
  }

  /// this o rotation^r: the one-line form rotated left by r places.
  Permutation rotated(long long r) const {
    int n = order();
    long long s = ((r % n) + n) % n;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = v_[(i + s) % n];
    return Permutation(std::move(v));
  }

  long long inversions() const {
    long long count = 0;
    for (int i = 0; i < order(); ++i)
      for (int j = i + 1; j < order(); ++j)
        if (v_[i] > v_[j]) ++count;
    return count;
  }

  Sign sign() const { return Sign::of_parity(inversions()); }

  bool fixes_first() const { return v_[0] == 1; }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < order(); ++i) {
      if (i) out += ',';
      out += std::to_string(v_[i]);
    }
    out += ']';
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.v_ <=> b.v_;
  }

 private:
  static int check_order(int n) {
    if (n < 1 || n > order_cap)
      throw std::invalid_argument("permutation: order " + std::to_string(n) +
                                  " outside 1.." + std::to_string(order_cap));
    return n;
  }

  std::vector<int> v_;
};

inline Permutation Permutation::parse(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  auto fail = [&]() -> Permutation {
    throw std::invalid_argument("permutation: cannot parse \"" + std::string(text) + "\"");
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') return fail();
  ++pos;
  std::vector<int> v;
  while (true) {
    skip_ws();
    if (pos >= text.size()) return fail();
    if (text[pos] == ']' && v.empty()) return fail();
    bool digit = false;
    int x = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      x = x * 10 + (text[pos] - '0');
      if (x > 1000) return fail();
      ++pos;
      digit = true;
    }
    if (!digit) return fail();
    v.push_back(x);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    return fail();
  }
  skip_ws();
  if (pos != text.size()) return fail();
  return Permutation(std::move(v));
}

inline Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline Permutation rotate(const Permutation& p, long long r) { return p.rotated(r); }
inline Permutation rotation(int n) { return Permutation::rotation(n); }
inline Permutation rotation_power(int n, long long r) { return Permutation::rotation_power(n, r); }
inline Permutation reversal(int n) { return Permutation::reversal(n); }

}  // namespace orbdet
