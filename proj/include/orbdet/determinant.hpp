#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "orbdet/matrix.hpp"
#include "orbdet/orbit.hpp"

namespace orbdet {

/// Product of the entries sigma picks, one per row: prod_i a(i, sigma(i)).
template <Scalar T>
T weight(const SquareMatrix<T>& a, const Permutation& sigma) {
  if (sigma.order() != a.order())
    throw std::invalid_argument("weight: permutation order does not match matrix");
  T w(1);
  for (int i = 1; i <= a.order(); ++i) w = w * a.at(i, sigma(i));
  return w;
}

/// Reference oracle: the full n!-term signed sum, enumerated lexicographically.
template <Scalar T>
T leibniz_det(const SquareMatrix<T>& a) {
  int n = check_enumeration_order(a.order());
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  Accumulator<T> acc;
  do {
    long long inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    T w(1);
    for (int i = 1; i <= n; ++i) w = w * a.at(i, p[static_cast<size_t>(i - 1)]);
    acc.add(inv % 2 == 0 ? w : -w);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc.value();
}

template <Scalar T>
struct OrbitSum {
  Permutation base;
  T sum;
};

template <Scalar T>
struct OrbitalResult {
  T det;
  std::vector<OrbitSum<T>> orbit_sums;  // one per base monomial, lex order
  std::uint64_t terms_consumed;         // always exactly n!
};

/// The same n! terms regrouped into (n-1)! cyclic orbits of size n. Signs
/// inside an orbit follow the rotation law sign(base)*(-1)^((n-1)r), so only
/// one inversion count is paid per orbit.
template <Scalar T>
OrbitalResult<T> orbital_det(const SquareMatrix<T>& a) {
  int n = check_enumeration_order(a.order());
  OrbitalResult<T> result{T(0), {}, 0};
  Accumulator<T> total;
  for (Permutation& base : base_monomials(n)) {
    auto bv = base.values();
    Sign base_sign = base.sign();
    Accumulator<T> orbit_acc;
    for (int r = 0; r < n; ++r) {
      T w(1);
      for (int i = 0; i < n; ++i) w = w * a.at(i + 1, bv[static_cast<size_t>((i + r) % n)]);
      Sign s = base_sign * Sign::of_parity(static_cast<long long>(n - 1) * r);
      orbit_acc.add(s == Sign::plus() ? w : -w);
      ++result.terms_consumed;
    }
    T sum = orbit_acc.value();
    total.add(sum);
    result.orbit_sums.push_back(OrbitSum<T>{std::move(base), sum});
  }
  result.det = total.value();
  return result;
}

struct OrbitalSpectrum {
  std::vector<double> rotation_sums;        // d_r: signed weight mass at rotation index r
  std::vector<std::complex<double>> modes;  // G_k = sum_r d_r * omega^(kr), omega = e^(2*pi*i/n)
};

/// n-point DFT of the determinant mass graded by rotation index. Mode 0 is the
/// determinant itself; the rest measure how the orbits distribute their weight
/// around the cycle.
template <Scalar T>
OrbitalSpectrum orbital_spectrum(const SquareMatrix<T>& a) {
  int n = check_enumeration_order(a.order());
  std::vector<Accumulator<T>> by_rotation(static_cast<size_t>(n));
  for (const Permutation& base : base_monomials(n)) {
    auto bv = base.values();
    Sign base_sign = base.sign();
    for (int r = 0; r < n; ++r) {
      T w(1);
      for (int i = 0; i < n; ++i) w = w * a.at(i + 1, bv[static_cast<size_t>((i + r) % n)]);
      Sign s = base_sign * Sign::of_parity(static_cast<long long>(n - 1) * r);
      by_rotation[static_cast<size_t>(r)].add(s == Sign::plus() ? w : -w);
    }
  }
  OrbitalSpectrum spec;
  spec.rotation_sums.reserve(static_cast<size_t>(n));
  for (auto& acc : by_rotation) spec.rotation_sums.push_back(to_double(acc.value()));
  const double two_pi = 6.28318530717958647692;
  for (int k = 0; k < n; ++k) {
    std::complex<double> g(0.0, 0.0);
    for (int r = 0; r < n; ++r)
      g += spec.rotation_sums[static_cast<size_t>(r)] *
           std::polar(1.0, two_pi * k * r / n);
    spec.modes.push_back(g);
  }
  return spec;
}

/// Gaussian elimination with partial pivoting; the fast float-regime oracle.
/// A pivot below 1e-300 is treated as exact singularity.
inline double lu_det(MatrixD a) {
  int n = a.order();
  double det = 1.0;
  for (int k = 1; k <= n; ++k) {
    int pivot_row = k;
    for (int i = k + 1; i <= n; ++i)
      if (std::fabs(a.at(i, k)) > std::fabs(a.at(pivot_row, k))) pivot_row = i;
    if (std::fabs(a.at(pivot_row, k)) < 1e-300) return 0.0;
    if (pivot_row != k) {
      for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot_row, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int i = k + 1; i <= n; ++i) {
      double f = a.at(i, k) / a.at(k, k);
      for (int j = k; j <= n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

/// Fraction-free (Bareiss) elimination: exact integer determinant in O(n^3)
/// with intermediate values bounded by minors, so no overflow below the caps.
inline Int128 bareiss_det(MatrixI a) {
  int n = a.order();
  Int128 prev(1);
  bool negate = false;
  for (int k = 1; k < n; ++k) {
    if (a.at(k, k) == Int128(0)) {
      int swap_row = 0;
      for (int i = k + 1; i <= n; ++i)
        if (!(a.at(i, k) == Int128(0))) {
          swap_row = i;
          break;
        }
      if (swap_row == 0) return Int128(0);
      for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i <= n; ++i)
      for (int j = k + 1; j <= n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return negate ? -a.at(n, n) : a.at(n, n);
}

/// Regime-appropriate O(n^3) determinant.
inline double elimination_det(const MatrixD& a) { return lu_det(a); }
inline Int128 elimination_det(const MatrixI& a) { return bareiss_det(a); }

}  // namespace orbdet
