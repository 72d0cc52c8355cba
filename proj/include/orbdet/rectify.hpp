#pragma once

#include <stdexcept>
#include <vector>

#include "orbdet/matrix.hpp"
#include "orbdet/orbit.hpp"

namespace orbdet {

/// Cyclic diagonal index of cell (i,j): (j - i) mod n. Slope +1 strokes keep
/// it constant.
inline int offset_plus(int i, int j, int n) { return ((j - i) % n + n) % n; }

/// Cyclic antidiagonal index: (i + j) mod n. Slope -1 strokes keep it constant.
inline int offset_minus(int i, int j, int n) { return (i + j) % n; }

/// A matrix with columns relabeled so one chosen orbit runs down consecutive
/// cyclic diagonals: element r of the orbit sits entirely on offset
/// (r + kappa) mod n. kappa = 0 puts the canonical representative on the main
/// diagonal.
template <Scalar T>
struct RectifiedView {
  Permutation base;       // canonical representative of the rectified orbit
  Permutation rectifier;  // column relabeling j -> rectifier(j) applied to A
  int kappa;
  SquareMatrix<T> rectified;

  int order() const { return rectified.order(); }

  /// Columns repeated cyclically to width 2n-1, the strip every parallel
  /// stroke fits in without wrapping.
  int extended_width() const { return 2 * order() - 1; }
  const T& extended_at(int i, int c) const {
    if (c < 1 || c > 2 * order())
      throw std::invalid_argument("rectified view: extended column " + std::to_string(c) +
                                  " outside strip");
    return rectified.at(i, (c - 1) % order() + 1);
  }
};

/// Rectify so the seed itself lands on the main diagonal; the rest of its
/// orbit follows on the next diagonals in rotation order.
template <Scalar T>
RectifiedView<T> rectify_orbit(const SquareMatrix<T>& a, const Permutation& seed) {
  if (seed.order() != a.order())
    throw std::invalid_argument("rectify: permutation order does not match matrix");
  int n = a.order();
  // seed = base rotated by s, where s moves the value 1 back to position 1
  int pos = 1;
  while (seed(pos) != 1) ++pos;
  int s = (n + 1 - pos) % n;
  RectifiedView<T> view{seed.rotated(pos - 1), seed.inverse(), (n - s) % n,
                        apply_column_permutation(a, seed)};
  return view;
}

/// Rectify against the canonical representative, then shift the whole orbit
/// kappa diagonals to the right.
template <Scalar T>
RectifiedView<T> rectify_with_shift(const SquareMatrix<T>& a, const Permutation& sigma_star,
                                    int kappa) {
  if (!sigma_star.fixes_first())
    throw std::invalid_argument("rectify: representative must send 1 -> 1");
  int n = sigma_star.order();
  if (kappa < 0 || kappa >= n)
    throw std::invalid_argument("rectify: shift outside 0..n-1");
  return rectify_orbit(a, sigma_star.rotated((n - kappa) % n));
}

/// All n column relabelings that straighten the orbit of sigma_star, indexed
/// by their diagonal shift; element 0 is sigma_star's inverse.
inline std::vector<Permutation> rectifier_family(const Permutation& sigma_star) {
  if (!sigma_star.fixes_first())
    throw std::invalid_argument("rectifier family: representative must send 1 -> 1");
  int n = sigma_star.order();
  std::vector<Permutation> family;
  family.reserve(static_cast<size_t>(n));
  Permutation inv = sigma_star.inverse();
  for (int k = 0; k < n; ++k) family.push_back(Permutation::rotation_power(n, k).compose(inv));
  return family;
}

/// The offsets the orbit's elements occupy in the view, in rotation order:
/// [(kappa) mod n, (1+kappa) mod n, ...]. Every cell of every element is
/// checked; a violation means the view and orbit disagree and is an internal
/// error, not bad input.
template <Scalar T>
std::vector<int> orbit_offsets(const RectifiedView<T>& view, const Orbit& orbit) {
  if (orbit.kind() != OrbitKind::cyclic)
    throw std::invalid_argument("orbit offsets: cyclic orbit required");
  if (!(orbit.canonical() == view.base))
    throw std::invalid_argument("orbit offsets: orbit does not match the rectified view");
  int n = view.order();
  std::vector<int> offsets;
  offsets.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    int expected = (r + view.kappa) % n;
    const Permutation& element = orbit.elements()[static_cast<size_t>(r)];
    for (int i = 1; i <= n; ++i) {
      int column = view.rectifier(element(i));
      if (offset_plus(i, column, n) != expected)
        throw std::logic_error("orbit offsets: element " + element.to_string() +
                               " leaves diagonal " + std::to_string(expected) + " at row " +
                               std::to_string(i));
    }
    offsets.push_back(expected);
  }
  return offsets;
}

}  // namespace orbdet
