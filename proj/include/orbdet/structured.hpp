#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbdet/determinant.hpp"
#include "orbdet/matrix.hpp"

namespace orbdet {

/// Entry comparisons behind structure detection: exact in the integer regime,
/// 1e-12 relative for floats.
inline bool entries_equal(Int128 a, Int128 b) { return a == b; }
inline bool entries_equal(double a, double b) {
  double m = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-12 * m;
}
template <Scalar T>
bool entry_is_zero(T x) {
  return entries_equal(x, T(0));
}

struct StructureFlags {
  bool symmetric = false;
  bool persymmetric = false;
  bool centrosymmetric = false;
  bool toeplitz = false;
  bool circulant = false;
  bool triangular_upper = false;
  bool triangular_lower = false;
  bool separable = false;  // a(i,j) = u_i + v_j + c
  int band_width = 0;      // max |i-j| over nonzero entries
};

template <Scalar T>
StructureFlags classify(const SquareMatrix<T>& a) {
  int n = a.order();
  StructureFlags f;
  f.symmetric = f.persymmetric = f.centrosymmetric = f.toeplitz = true;
  f.triangular_upper = f.triangular_lower = f.separable = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const T& x = a.at(i, j);
      f.symmetric = f.symmetric && entries_equal(x, a.at(j, i));
      f.persymmetric = f.persymmetric && entries_equal(x, a.at(n + 1 - j, n + 1 - i));
      f.centrosymmetric = f.centrosymmetric && entries_equal(x, a.at(n + 1 - i, n + 1 - j));
      if (i < n && j < n) f.toeplitz = f.toeplitz && entries_equal(x, a.at(i + 1, j + 1));
      if (i > j) f.triangular_upper = f.triangular_upper && entry_is_zero(x);
      if (i < j) f.triangular_lower = f.triangular_lower && entry_is_zero(x);
      f.separable =
          f.separable && entries_equal(x + a.at(1, 1), a.at(i, 1) + a.at(1, j));
      if (!entry_is_zero(x)) f.band_width = std::max(f.band_width, std::abs(i - j));
    }
  f.circulant = f.toeplitz;
  for (int i = 1; i < n && f.circulant; ++i)
    f.circulant = entries_equal(a.at(i, n), a.at(i + 1, 1));
  return f;
}

/// Even-order centrosymmetric determinant through the two half-size blocks
/// M+ = B + C*J and M- = B - C*J, where [B | C] is the top half and J reverses
/// columns. det(A) = det(M+) * det(M-), at the cost of exactly two m x m
/// eliminations.
template <Scalar T>
struct CentroFactorization {
  int half;
  SquareMatrix<T> m_plus, m_minus;
  T det_plus, det_minus, det;
  // the textbook variant det(B+C)*det(B-C), reported because it is not
  // generally equal to det(A)
  T plain_plus, plain_minus, plain_product;
  bool plain_matches;
  int eliminations;  // half-size eliminations spent on the factorization path
};

template <Scalar T>
CentroFactorization<T> centro_factor_det(const SquareMatrix<T>& a) {
  int n = a.order();
  if (n % 2 != 0)
    throw std::domain_error("centro factorization: even order required, got " +
                            std::to_string(n));
  StructureFlags f = classify(a);
  if (!f.centrosymmetric)
    throw std::domain_error("centro factorization: matrix is not centrosymmetric");
  int m = n / 2;
  SquareMatrix<T> m_plus(m), m_minus(m), b_plus_c(m), b_minus_c(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const T& b = a.at(i, j);
      const T& c = a.at(i, m + j);
      const T& c_rev = a.at(i, 2 * m + 1 - j);  // (C*J)(i,j)
      m_plus.at(i, j) = b + c_rev;
      m_minus.at(i, j) = b - c_rev;
      b_plus_c.at(i, j) = b + c;
      b_minus_c.at(i, j) = b - c;
    }
  CentroFactorization<T> out{m,
                             std::move(m_plus),
                             std::move(m_minus),
                             T(0),
                             T(0),
                             T(0),
                             T(0),
                             T(0),
                             T(0),
                             false,
                             0};
  out.det_plus = elimination_det(out.m_plus);
  ++out.eliminations;
  out.det_minus = elimination_det(out.m_minus);
  ++out.eliminations;
  out.det = out.det_plus * out.det_minus;
  out.plain_plus = elimination_det(b_plus_c);
  out.plain_minus = elimination_det(b_minus_c);
  out.plain_product = out.plain_plus * out.plain_minus;
  out.plain_matches = entries_equal(out.plain_product, out.det);
  return out;
}

/// a(i,j) = row_terms[i] + col_terms[j] + offset, normalized so both leading
/// terms are zero. Empty when the matrix has no such form.
template <Scalar T>
struct SeparableForm {
  std::vector<T> row_terms, col_terms;
  T offset;
};

template <Scalar T>
std::optional<SeparableForm<T>> separable_decompose(const SquareMatrix<T>& a) {
  int n = a.order();
  SeparableForm<T> form{{}, {}, a.at(1, 1)};
  for (int i = 1; i <= n; ++i) form.row_terms.push_back(a.at(i, 1) - a.at(1, 1));
  for (int j = 1; j <= n; ++j) form.col_terms.push_back(a.at(1, j) - a.at(1, 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!entries_equal(a.at(i, j), form.row_terms[static_cast<size_t>(i - 1)] +
                                         form.col_terms[static_cast<size_t>(j - 1)] +
                                         form.offset))
        return std::nullopt;
  return form;
}

/// Exhaustive scan of all n! transversal sums (one entry per row and column,
/// added instead of multiplied).
template <Scalar T>
struct TransversalSummary {
  std::uint64_t count;
  T min, max, trace;
  std::uint64_t distinct;
  bool all_equal_trace;
};

template <Scalar T>
TransversalSummary<T> transversal_sums(const SquareMatrix<T>& a) {
  int n = check_enumeration_order(a.order());
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  std::vector<T> sums;
  do {
    T s(0);
    for (int i = 1; i <= n; ++i) s += a.at(i, p[static_cast<size_t>(i - 1)]);
    sums.push_back(s);
  } while (std::next_permutation(p.begin(), p.end()));
  T trace(0);
  for (int i = 1; i <= n; ++i) trace += a.at(i, i);
  std::sort(sums.begin(), sums.end());
  std::uint64_t distinct = sums.empty() ? 0 : 1;
  for (size_t i = 1; i < sums.size(); ++i)
    if (!entries_equal(sums[i], sums[i - 1])) ++distinct;
  bool flat = true;
  for (const T& s : sums) flat = flat && entries_equal(s, trace);
  return TransversalSummary<T>{sums.size(), sums.front(), sums.back(), trace, distinct, flat};
}

/// Circulant determinant through the DFT of the first row:
/// eigenvalue k is sum_j c_j * omega^(jk), omega = e^(2*pi*i/n), and the
/// determinant is the (real) product of the eigenvalues.
struct CirculantResult {
  std::vector<double> symbol;  // first row
  std::vector<std::complex<double>> eigenvalues;
  double det;
  double imag_residue;  // |Im| of the eigenvalue product, numerically ~0
};

template <Scalar T>
CirculantResult circulant_det(const SquareMatrix<T>& a) {
  if (!classify(a).circulant)
    throw std::domain_error("circulant determinant: matrix is not circulant");
  int n = a.order();
  CirculantResult out;
  for (int j = 1; j <= n; ++j) out.symbol.push_back(to_double(a.at(1, j)));
  const double two_pi = 6.28318530717958647692;
  std::complex<double> product(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    std::complex<double> lambda(0.0, 0.0);
    for (int j = 0; j < n; ++j)
      lambda += out.symbol[static_cast<size_t>(j)] * std::polar(1.0, two_pi * j * k / n);
    out.eigenvalues.push_back(lambda);
    product *= lambda;
  }
  out.det = product.real();
  out.imag_residue = std::fabs(product.imag());
  return out;
}

/// Product of the diagonal; valid for triangular input.
template <Scalar T>
T triangular_det(const SquareMatrix<T>& a) {
  StructureFlags f = classify(a);
  if (!f.triangular_upper && !f.triangular_lower)
    throw std::domain_error("triangular determinant: matrix is not triangular");
  T d(1);
  for (int i = 1; i <= a.order(); ++i) d = d * a.at(i, i);
  return d;
}

}  // namespace orbdet
