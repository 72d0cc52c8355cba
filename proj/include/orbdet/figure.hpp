#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orbdet/determinant.hpp"
#include "orbdet/dihedral.hpp"
#include "orbdet/rectify.hpp"

namespace orbdet {

/// Figures are readable up to this order; beyond it they are ink, not insight.
inline constexpr int viz_order_cap = 5;

inline int check_viz_order(int n) {
  if (n < 1 || n > viz_order_cap)
    throw std::domain_error("figure: order " + std::to_string(n) +
                            " above the visualization cap " + std::to_string(viz_order_cap));
  return n;
}

enum class SlopeClass { plus_one, minus_one, polyline };
enum class StrokeStyle { solid, dashed };
enum class TotalMode { plus, minus, both };

struct GridPoint {
  int row, col;  // 1-based; col is global across panels/blocks
  friend bool operator==(GridPoint, GridPoint) = default;
};

/// One drawn permutation: a vertex per row, top to bottom.
struct Stroke {
  std::vector<GridPoint> points;
  SlopeClass slope;
  StrokeStyle style;
  Sign sign;
  std::string label;      // the permutation drawn
  std::string orbit_ref;  // canonical representative of its orbit
  int rotation_index;
  int block;  // 1-based panel/block, 1 for single-grid figures
};

struct GridCell {
  int row, col;
  double value;
  std::string text;
};

struct Caption {
  double anchor_col;  // horizontal center, in column units
  std::string text;
};

/// Renderer-independent figure: a labeled grid, strokes over it, optional
/// panel separators and captions. All five methods reduce to this.
struct FigureDoc {
  std::string method;
  int n;
  int rows, cols;
  std::vector<GridCell> cells;
  std::vector<Stroke> strokes;
  std::vector<int> separators;  // draw a rule at the right edge of these columns
  std::vector<Caption> captions;
};

namespace detail {

template <Scalar T>
void fill_plain_grid(FigureDoc& doc, const SquareMatrix<T>& a) {
  for (int i = 1; i <= a.order(); ++i)
    for (int j = 1; j <= a.order(); ++j)
      doc.cells.push_back(GridCell{i, j, to_double(a.at(i, j)), format_scalar(a.at(i, j))});
}

/// Cells of one rectified strip of the given width, starting at global column
/// col0 + 1.
template <Scalar T>
void fill_strip(FigureDoc& doc, const RectifiedView<T>& view, int width, int col0) {
  for (int i = 1; i <= view.order(); ++i)
    for (int c = 1; c <= width; ++c) {
      const T& v = view.extended_at(i, c);
      doc.cells.push_back(GridCell{i, col0 + c, to_double(v), format_scalar(v)});
    }
}

inline void push_parallel_strokes(FigureDoc& doc, const Orbit& base_orbit,
                                  const Orbit& partner_orbit, int col0, int block,
                                  bool solid_family, bool dashed_family) {
  int n = base_orbit.order();
  if (solid_family)
    for (int r = 0; r < n; ++r) {
      Stroke s{{}, SlopeClass::plus_one, StrokeStyle::solid, base_orbit.sign_at(r),
               base_orbit.elements()[static_cast<size_t>(r)].to_string(),
               base_orbit.canonical().to_string(), r, block};
      for (int i = 1; i <= n; ++i) s.points.push_back(GridPoint{i, col0 + i + r});
      doc.strokes.push_back(std::move(s));
    }
  if (dashed_family)
    for (int r = 0; r < n; ++r) {
      int m = (1 - r % n + n) % n;
      Stroke s{{}, SlopeClass::minus_one, StrokeStyle::dashed, partner_orbit.sign_at(r),
               partner_orbit.elements()[static_cast<size_t>(r)].to_string(),
               partner_orbit.canonical().to_string(), r, block};
      for (int i = 1; i <= n; ++i) s.points.push_back(GridPoint{i, col0 + n + m - (i - 1)});
      doc.strokes.push_back(std::move(s));
    }
}

template <Scalar T>
T orbit_total(const SquareMatrix<T>& a, const Orbit& orbit) {
  Accumulator<T> acc;
  for (int r = 0; r < orbit.order(); ++r) {
    T w = weight(a, orbit.elements()[static_cast<size_t>(r)]);
    acc.add(orbit.sign_at(r) == Sign::plus() ? w : -w);
  }
  return acc.value();
}

}  // namespace detail

/// Method 1: every element of one orbit as an open polyline over the plain
/// grid, a vertex at (row i, col sigma(i)).
template <Scalar T>
FigureDoc orbit_polyline_figure(const SquareMatrix<T>& a, const Orbit& orbit) {
  int n = check_viz_order(a.order());
  if (orbit.order() != n) throw std::invalid_argument("figure: orbit order does not match matrix");
  FigureDoc doc{"m1", n, n, n, {}, {}, {}, {}};
  detail::fill_plain_grid(doc, a);
  for (int r = 0; r < n; ++r) {
    const Permutation& p = orbit.elements()[static_cast<size_t>(r)];
    Sign s = orbit.sign_at(r);
    Stroke stroke{{}, SlopeClass::polyline,
                  s == Sign::plus() ? StrokeStyle::solid : StrokeStyle::dashed, s,
                  p.to_string(), orbit.canonical().to_string(), r, 1};
    for (int i = 1; i <= n; ++i) stroke.points.push_back(GridPoint{i, p(i)});
    doc.strokes.push_back(std::move(stroke));
  }
  return doc;
}

/// Method 2: one orbit rectified, drawn as n solid slope +1 strokes on the
/// extended strip, plus the n dashed slope -1 strokes of its tail-reversal
/// partner. For the identity at n = 3 this is the classical two-family
/// diagonal picture.
template <Scalar T>
FigureDoc parallel_figure(const SquareMatrix<T>& a, const Permutation& seed) {
  int n = check_viz_order(a.order());
  Permutation base = canonical_representative(seed);
  RectifiedView<T> view = rectify_with_shift(a, base, 0);
  Orbit base_orbit = Orbit::cyclic(base);
  Orbit partner_orbit = Orbit::cyclic(companion(base));
  FigureDoc doc{"m2", n, n, 2 * n - 1, {}, {}, {}, {}};
  detail::fill_strip(doc, view, 2 * n - 1, 0);
  detail::push_parallel_strokes(doc, base_orbit, partner_orbit, 0, 1, true, true);
  return doc;
}

/// Method 3: the two orbits of a pair on twin panels of the same rectified
/// strip, solid +1 on the left, dashed -1 on the right, captioned with the
/// orbit totals and their joint contribution.
template <Scalar T>
FigureDoc pair_panels_figure(const SquareMatrix<T>& a, const OrbitPair& pair) {
  int n = check_viz_order(a.order());
  if (pair.base.order() != n)
    throw std::invalid_argument("figure: pair order does not match matrix");
  RectifiedView<T> view = rectify_with_shift(a, pair.base.canonical(), 0);
  int w = 2 * n - 1;
  FigureDoc doc{"m3", n, n, 2 * w + 1, {}, {}, {}, {}};
  detail::fill_strip(doc, view, w, 0);
  detail::fill_strip(doc, view, w, w + 1);
  detail::push_parallel_strokes(doc, pair.base, pair.partner, 0, 1, true, false);
  detail::push_parallel_strokes(doc, pair.base, pair.partner, w + 1, 2, false, true);
  doc.separators.push_back(w + 1);
  T base_total = detail::orbit_total(a, pair.base);
  T partner_total = detail::orbit_total(a, pair.partner);
  doc.captions.push_back(Caption{(w + 1) / 2.0, "orbit sum " + format_scalar(base_total)});
  doc.captions.push_back(
      Caption{w + 1 + (w + 1) / 2.0, "orbit sum " + format_scalar(partner_total)});
  doc.captions.push_back(
      Caption{(2.0 * w + 2) / 2.0, "pair total " + format_scalar(base_total + partner_total)});
  return doc;
}

/// Method 4: every orbit rectified into its own block of width 2n, laid out
/// side by side; mode selects the solid +1 family, the dashed -1 family, or
/// both. The solid family alone draws each element of S_n exactly once.
template <Scalar T>
FigureDoc total_figure(const SquareMatrix<T>& a, TotalMode mode) {
  int n = check_viz_order(a.order());
  std::vector<Permutation> bases = base_monomials(n);
  int block_w = 2 * n;
  FigureDoc doc{"m4", n, n, block_w * static_cast<int>(bases.size()), {}, {}, {}, {}};
  for (size_t t = 0; t < bases.size(); ++t) {
    int col0 = block_w * static_cast<int>(t);
    RectifiedView<T> view = rectify_with_shift(a, bases[t], 0);
    detail::fill_strip(doc, view, block_w, col0);
    detail::push_parallel_strokes(doc, Orbit::cyclic(bases[t]), Orbit::cyclic(companion(bases[t])),
                                  col0, static_cast<int>(t) + 1, mode != TotalMode::minus,
                                  mode != TotalMode::plus);
    if (t + 1 < bases.size()) doc.separators.push_back(col0 + block_w);
  }
  return doc;
}

/// Method 5: the additive orbit of the seed, each element an open polyline;
/// successive strokes are the same shape shifted one column right with
/// wraparound.
template <Scalar T>
FigureDoc increment_figure(const SquareMatrix<T>& a, const Permutation& seed) {
  check_viz_order(a.order());
  FigureDoc doc = orbit_polyline_figure(a, Orbit::additive(seed));
  doc.method = "m5";
  return doc;
}

/// Crossings of the straight-line wiring diagram of p: segments from (0, i) to
/// (1, p(i)), counted by exact orientation tests. Equals the inversion count.
inline long long wiring_crossings(const Permutation& p) {
  int n = p.order();
  auto orient = [](long long ax, long long ay, long long bx, long long by, long long cx,
                   long long cy) {
    long long v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
  };
  long long crossings = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int o1 = orient(0, i, 1, p(i), 0, j);
      int o2 = orient(0, i, 1, p(i), 1, p(j));
      int o3 = orient(0, j, 1, p(j), 0, i);
      int o4 = orient(0, j, 1, p(j), 1, p(i));
      if (o1 * o2 < 0 && o3 * o4 < 0) ++crossings;
    }
  return crossings;
}

}  // namespace orbdet
