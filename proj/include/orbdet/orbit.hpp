#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbdet/permutation.hpp"

namespace orbdet {

/// Anything that walks n! (or (n-1)!) objects refuses orders above this.
inline constexpr int enumeration_cap = 10;

inline int check_enumeration_order(int n) {
  if (n < 1 || n > enumeration_cap)
    throw std::invalid_argument("enumeration: order " + std::to_string(n) +
                                " outside 1.." + std::to_string(enumeration_cap));
  return n;
}

/// sigma shifted value-wise by r: i -> ((sigma(i)-1+r) mod n)+1. This is the
/// additive companion action to the cyclic (position-wise) rotation.
inline Permutation increment(const Permutation& p, long long r) {
  int n = p.order();
  long long s = ((r % n) + n) % n;
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = static_cast<int>((p(i) - 1 + s) % n) + 1;
  return Permutation(std::move(v));
}

/// The unique element of the cyclic orbit sending 1 -> 1: rotate until the
/// value 1 sits in position 1.
inline Permutation canonical_representative(const Permutation& p) {
  int pos = 1;
  while (p(pos) != 1) ++pos;
  return p.rotated(pos - 1);
}

enum class OrbitKind { cyclic, additive };

/// One orbit of either group action on S_n, stored canonical-first:
/// elements()[r] is canonical rotated (or incremented) by r.
class Orbit {
 public:
  static Orbit cyclic(const Permutation& seed) {
    Permutation base = canonical_representative(seed);
    Orbit o(OrbitKind::cyclic, base);
    for (int r = 0; r < base.order(); ++r) o.push(base.rotated(r));
    return o;
  }

  static Orbit additive(const Permutation& seed) {
    int n = seed.order();
    Permutation base = increment(seed, (n + 1 - seed(1)) % n);
    Orbit o(OrbitKind::additive, base);
    for (int r = 0; r < n; ++r) o.push(increment(base, r));
    return o;
  }

  OrbitKind kind() const { return kind_; }
  int order() const { return canonical_.order(); }
  const Permutation& canonical() const { return canonical_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Sign>& signs() const { return signs_; }
  Sign sign_at(int r) const { return signs_.at(static_cast<size_t>(r)); }

  /// Rotation (or increment) index of p within this orbit, if it belongs.
  std::optional<int> index_of(const Permutation& p) const {
    for (int r = 0; r < static_cast<int>(elements_.size()); ++r)
      if (elements_[static_cast<size_t>(r)] == p) return r;
    return std::nullopt;
  }

 private:
  Orbit(OrbitKind kind, Permutation base) : kind_(kind), canonical_(std::move(base)) {}

  void push(Permutation p) {
    signs_.push_back(p.sign());
    elements_.push_back(std::move(p));
  }

  OrbitKind kind_;
  Permutation canonical_;
  std::vector<Permutation> elements_;
  std::vector<Sign> signs_;
};

/// All (n-1)! canonical representatives (value 1 first), lexicographic.
inline std::vector<Permutation> base_monomials(int n) {
  check_enumeration_order(n);
  std::vector<int> tail(static_cast<size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) tail[static_cast<size_t>(i)] = i + 2;
  std::vector<Permutation> out;
  do {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(1);
    v.insert(v.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(v));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

/// S_n split into (n-1)! orbits of size n. Both actions admit the same
/// canonical labeling, so the partition is indexed by the base monomials.
class OrbitPartition {
 public:
  static OrbitPartition build(int n, OrbitKind kind = OrbitKind::cyclic) {
    OrbitPartition p;
    p.n_ = check_enumeration_order(n);
    for (const Permutation& base : base_monomials(n))
      p.orbits_.push_back(kind == OrbitKind::cyclic ? Orbit::cyclic(base)
                                                    : Orbit::additive(base));
    return p;
  }

  int order() const { return n_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }

 private:
  int n_ = 0;
  std::vector<Orbit> orbits_;
};

}  // namespace orbdet
