// Acceptance gate: one PASS/FAIL line per criterion, exit code = failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbdet/orbdet.hpp"

using namespace orbdet;

namespace {

MatrixI anchor4() {
  return MatrixI{{2, -1, 0, 3}, {1, 4, -2, 5}, {5, -2, 4, 1}, {3, 0, -1, 2}};
}

MatrixI toeplitz6() {
  std::vector<long long> first_row = {1, 2, 3, 4, 5, 6};
  std::vector<long long> first_col = {1, 7, 6, 5, 4, 3};
  MatrixI a(6);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      a.at(i, j) = Int128(j >= i ? first_row[static_cast<size_t>(j - i)]
                                 : first_col[static_cast<size_t>(i - j)]);
  return a;
}

MatrixI random_int_matrix(SplitMix64& rng, int n, long long lo, long long hi) {
  MatrixI a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = Int128(rng.next_int(lo, hi));
  return a;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

bool close_rel(double x, double y, double tol) {
  return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(y));
}

std::map<std::pair<int, int>, double> cell_values(const FigureDoc& doc) {
  std::map<std::pair<int, int>, double> m;
  for (const GridCell& c : doc.cells) m[{c.row, c.col}] = c.value;
  return m;
}

/// Product of the grid values under a stroke equals the Leibniz weight of the
/// permutation it is labeled with.
template <Scalar T>
bool strokes_trace_weights(const FigureDoc& doc, const SquareMatrix<T>& a) {
  auto cells = cell_values(doc);
  for (const Stroke& s : doc.strokes) {
    double product = 1.0;
    for (GridPoint p : s.points) {
      auto it = cells.find({p.row, p.col});
      if (it == cells.end()) return false;
      product *= it->second;
    }
    double expected = to_double(weight(a, Permutation::parse(s.label)));
    if (!close_rel(product, expected, 1e-12)) return false;
  }
  return true;
}

struct Criterion {
  std::string name;
  double budget_ms;  // 0 = untimed
  std::function<bool(std::string&)> check;
};

// --- criteria ---

bool c01_anchor_methods(std::string& detail) {
  MatrixI a = anchor4();
  Int128 expected(-160);
  OrbitalResult<Int128> orbital = orbital_det(a);
  bool ok = orbital.det == expected && orbital.orbit_sums.size() == 6 &&
            orbital.terms_consumed == 24;
  ok = ok && leibniz_det(a) == expected;
  ok = ok && centro_factor_det(a).det == expected;
  ok = ok && std::fabs(lu_det(to_double(a)) + 160.0) <= 1e-9 * 160.0;
  detail = "orbital/leibniz/centro exact, lu within 1e-9";
  return ok;
}

bool c02_toeplitz6(std::string& detail) {
  MatrixI a = toeplitz6();
  Int128 expected(-64827);
  bool ok = orbital_det(a).det == expected && leibniz_det(a) == expected;
  ok = ok && std::fabs(lu_det(to_double(a)) + 64827.0) <= 1e-9 * 64827.0;
  detail = "det = -64827 across orbital, leibniz, lu";
  return ok;
}

bool c03_centro_halves(std::string& detail) {
  CentroFactorization<Int128> f = centro_factor_det(anchor4());
  bool ok = f.half == 2 && f.det_plus == Int128(16) && f.det_minus == Int128(-10) &&
            f.det == Int128(-160) && f.eliminations == 2;
  ok = ok && f.plain_product == Int128(200) && !f.plain_matches;
  detail = "16 * -10 = -160; unfolded blocks give 200 and are flagged";
  return ok;
}

bool c04_partition(std::string& detail) {
  for (int n = 2; n <= 7; ++n) {
    OrbitPartition part = OrbitPartition::build(n);
    if (part.orbits().size() != factorial(n - 1)) return false;
    std::set<std::string> seen;
    for (const Orbit& orbit : part.orbits()) {
      if (orbit.elements().size() != static_cast<size_t>(n)) return false;
      for (const Permutation& p : orbit.elements()) seen.insert(p.to_string());
    }
    if (seen.size() != factorial(n)) return false;
  }
  detail = "n = 2..7: (n-1)! orbits of size n tile S_n";
  return true;
}

bool c05_sign_law(std::string& detail) {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& base : base_monomials(n)) {
      Orbit orbit = Orbit::cyclic(base);
      for (int r = 0; r < n; ++r) {
        ++checked;
        Sign predicted = base.sign() * Sign::of_parity(static_cast<long long>(n - 1) * r);
        if (orbit.sign_at(r) != predicted) return false;
      }
    }
  detail = "0 violations across " + std::to_string(checked) + " elements";
  return true;
}

bool c06_census_bytes(std::string& detail) {
  std::string expected =
      "orbit_index,base_perm,inversions,sign,sign_pattern\n"
      "1,\"[1,2,3,4]\",0,+,+-+-\n"
      "2,\"[1,2,4,3]\",1,-,-+-+\n"
      "3,\"[1,3,2,4]\",1,-,-+-+\n"
      "4,\"[1,3,4,2]\",2,+,+-+-\n"
      "5,\"[1,4,2,3]\",2,+,+-+-\n"
      "6,\"[1,4,3,2]\",3,-,-+-+\n";
  detail = "order-4 orbit table is byte-stable";
  return orbit_table_csv(4, false) == expected;
}

bool c07_rectification(std::string& detail) {
  SplitMix64 rng(7001);
  int matrices = 0, orbits = 0;
  for (int n = 3; n <= 5; ++n)
    for (int t = 0; t < 7; ++t) {
      MatrixI a = random_int_matrix(rng, n, -8, 8);
      ++matrices;
      for (const Permutation& base : base_monomials(n)) {
        RectifiedView<Int128> view = rectify_orbit(a, base);
        Orbit orbit = Orbit::cyclic(base);
        std::vector<int> offsets = orbit_offsets(view, orbit);
        std::set<int> seen(offsets.begin(), offsets.end());
        if (static_cast<int>(seen.size()) != n || *seen.begin() != 0 ||
            *seen.rbegin() != n - 1)
          return false;
        ++orbits;
        if (!strokes_trace_weights(parallel_figure(a, base), a)) return false;
      }
    }
  detail = std::to_string(matrices) + " matrices, " + std::to_string(orbits) +
           " orbits: offsets exhaust 0..n-1, strip strokes trace their weights";
  return true;
}

bool c08_pairing(std::string& detail) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<OrbitPair> pairs = canonical_pairing(n);
    if (pairs.size() != factorial(n - 1) / 2) return false;
    Sign expected_ratio = Sign::of_parity(static_cast<long long>(n - 1) * (n - 2) / 2);
    for (const OrbitPair& pair : pairs) {
      if (pair.sign_ratio != expected_ratio) return false;
      for (const Permutation& tau : pair.base.elements()) {
        Permutation image = pair.phi(tau);
        if (image == tau) return false;
        if (!(pair.phi(image) == tau)) return false;
      }
    }
  }
  SplitMix64 rng(8001);
  for (int t = 0; t < 50; ++t) {
    int n = 3 + t % 4;
    MatrixI a = random_int_matrix(rng, n, -6, 6);
    CancellationReport<Int128> report = cancellation_report(a);
    if (!(report.det == leibniz_det(a))) return false;
    if (report.couples != factorial(n) / 2) return false;
  }
  detail = "phi is a fixed-point-free involution, ratio constant per order; "
           "couple sums rebuilt 50 determinants exactly";
  return true;
}

bool c09_rank_one(std::string& detail) {
  SplitMix64 rng(9001);
  for (int n : {3, 5, 6, 7}) {
    std::vector<long long> u, v;
    for (int i = 0; i < n; ++i) {
      long long x = rng.next_int(1, 5), y = rng.next_int(1, 5);
      u.push_back(rng.next() % 2 ? x : -x);
      v.push_back(rng.next() % 2 ? y : -y);
    }
    MatrixI a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        a.at(i, j) = Int128(u[static_cast<size_t>(i - 1)] * v[static_cast<size_t>(j - 1)]);
    CancellationReport<Int128> report = cancellation_report(a);
    if (!(report.det == Int128(0))) return false;
    if (report.equal_weight_couples != report.couples) return false;
    bool ratio_minus = Sign::of_parity(static_cast<long long>(n - 1) * (n - 2) / 2) ==
                       Sign::minus();
    if (ratio_minus) {
      if (report.cancelling_couples != report.couples) return false;
      for (const OrbitPair& pair : canonical_pairing(n))
        for (const Permutation& tau : pair.base.elements())
          if (!(pair_contribution(a, pair, tau).value == Int128(0))) return false;
    } else {
      if (report.cancelling_couples != 0) return false;
    }
  }
  detail = "rank-one input: couple-level cancellation when the ratio is -1, "
           "global zero either way";
  return true;
}

bool c10_suite(std::string& detail) {
  SuiteSpec spec = SuiteSpec::reference(42, {3, 4, 5});
  SuiteSpec ext = SuiteSpec::extension(42);
  spec.categories.insert(spec.categories.end(), ext.categories.begin(), ext.categories.end());
  std::vector<SuiteCase> cases = generate_suite(spec);
  if (cases.size() != 177) return false;
  SuiteReport report = run_suite(cases, 1e-9);
  double worst = 0.0;
  for (const CaseResult& r : report.results) worst = std::max(worst, r.max_rel_err);
  char buf[96];
  std::snprintf(buf, sizeof buf, "147 reference + 30 extension cases, worst rel err %.2e",
                worst);
  detail = buf;
  return report.all_pass && report.results.size() == 177;
}

bool c11_spectrum(std::string& detail) {
  SplitMix64 rng(11001);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 5;
    MatrixI a = random_int_matrix(rng, n, -9, 9);
    OrbitalSpectrum s = orbital_spectrum(a);
    double det = to_double(leibniz_det(a));
    if (!close_rel(s.modes[0].real(), det, 1e-9)) return false;
    if (std::fabs(s.modes[0].imag()) > 1e-9 * std::max(1.0, std::fabs(det))) return false;
  }
  for (int t = 0; t < 10; ++t) {
    int n = 3 + t % 4;
    MatrixI a(n);
    std::vector<long long> symbol;
    for (int j = 0; j < n; ++j) symbol.push_back(rng.next_int(-9, 9));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        a.at(i, j) = Int128(symbol[static_cast<size_t>(((j - i) % n + n) % n)]);
    CirculantResult r = circulant_det(a);
    double det = to_double(leibniz_det(a));
    if (!close_rel(r.det, det, 1e-9)) return false;
    if (r.imag_residue > 1e-9 * std::max(1.0, std::fabs(det))) return false;
  }
  detail = "mode 0 matched 30 determinants; 10 circulant eigenproducts within 1e-9";
  return true;
}

bool c12_separable(std::string& detail) {
  SplitMix64 rng(12001);
  int flat = 0;
  auto check = [&](const MatrixI& a) {
    if (!separable_decompose(a)) return false;
    TransversalSummary<Int128> t = transversal_sums(a);
    if (!t.all_equal_trace || t.distinct != 1) return false;
    if (!(t.min == t.trace) || !(t.max == t.trace)) return false;
    ++flat;
    return true;
  };
  for (int n = 3; n <= 5; ++n) {
    MatrixI range(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) range.at(i, j) = Int128((i - 1) * n + j);
    if (!check(range)) return false;
  }
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 5;
    std::vector<long long> u, v;
    for (int i = 0; i < n; ++i) {
      u.push_back(rng.next_int(-30, 30));
      v.push_back(rng.next_int(-30, 30));
    }
    long long c = rng.next_int(-30, 30);
    MatrixI a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        a.at(i, j) = Int128(u[static_cast<size_t>(i - 1)] + v[static_cast<size_t>(j - 1)] + c);
    if (!check(a)) return false;
  }
  detail = std::to_string(flat) + " separable matrices: every transversal sum equals the trace";
  return true;
}

bool c13_total_figure(std::string& detail) {
  for (int n = 3; n <= 5; ++n) {
    MatrixI a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) a.at(i, j) = Int128(i * 10 + j);
    FigureDoc doc = total_figure(a, TotalMode::plus);
    if (doc.strokes.size() != factorial(n)) return false;
    if (doc.cols != 2 * n * static_cast<int>(factorial(n - 1))) return false;
    if (doc.separators.size() != factorial(n - 1) - 1) return false;
    std::set<std::string> labels;
    for (const Stroke& s : doc.strokes) {
      Permutation p = Permutation::parse(s.label);
      if (p.order() != n) return false;
      labels.insert(s.label);
    }
    if (labels.size() != factorial(n)) return false;
    if (!strokes_trace_weights(doc, a)) return false;
  }
  detail = "orders 3..5: n! strokes labeled bijectively by S_n across (n-1)! blocks";
  return true;
}

bool c14_two_actions(std::string& detail) {
  Permutation seed({1, 2, 4, 3});
  Orbit cyclic = Orbit::cyclic(seed);
  Orbit additive = Orbit::additive(seed);
  std::vector<std::string> expect_cyclic = {"[1,2,4,3]", "[2,4,3,1]", "[4,3,1,2]", "[3,1,2,4]"};
  std::vector<std::string> expect_additive = {"[1,2,4,3]", "[2,3,1,4]", "[3,4,2,1]", "[4,1,3,2]"};
  for (int r = 0; r < 4; ++r) {
    if (cyclic.elements()[static_cast<size_t>(r)].to_string() !=
        expect_cyclic[static_cast<size_t>(r)])
      return false;
    if (additive.elements()[static_cast<size_t>(r)].to_string() !=
        expect_additive[static_cast<size_t>(r)])
      return false;
  }
  std::set<std::string> overlap;
  for (const auto& s : expect_cyclic)
    for (const auto& t : expect_additive)
      if (s == t) overlap.insert(s);
  detail = "cyclic and additive orbits of [1,2,4,3] meet only at the base";
  return overlap.size() == 1 && *overlap.begin() == "[1,2,4,3]";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"order-4 anchor determinant agrees across all four methods", 1000, c01_anchor_methods},
      {"order-6 toeplitz determinant agrees across methods", 5000, c02_toeplitz6},
      {"centrosymmetric halves multiply out; unfolded variant flagged", 0, c03_centro_halves},
      {"cyclic orbits partition S_n for n = 2..7", 30000, c04_partition},
      {"rotation sign law holds for every orbit element up to n = 6", 0, c05_sign_law},
      {"order-4 orbit census is byte-exact", 0, c06_census_bytes},
      {"rectification offsets and strip strokes are faithful", 0, c07_rectification},
      {"tail-reversal pairing is involutive and rebuilds determinants", 0, c08_pairing},
      {"rank-one matrices cancel couple by couple when the ratio is -1", 0, c09_rank_one},
      {"randomized verification suite passes at 1e-9", 120000, c10_suite},
      {"orbital mode 0 and circulant eigenproducts match determinants", 0, c11_spectrum},
      {"separable matrices have flat transversal sums", 0, c12_separable},
      {"signed-total figure covers S_n bijectively", 0, c13_total_figure},
      {"additive and cyclic actions differ away from the base", 0, c14_two_actions},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    if (c.budget_ms > 0 && ms > c.budget_ms) {
      ok = false;
      detail += " [over time budget]";
    }
    std::printf("%s %2zu %s%s%s (%.0f ms)\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str(), ms);
    if (!ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<size_t>(failures),
              criteria.size());
  return failures;
}
