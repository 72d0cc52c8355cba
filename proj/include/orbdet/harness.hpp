#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbdet/determinant.hpp"
#include "orbdet/structured.hpp"

namespace orbdet {

/// Small fast deterministic generator; one independent stream per suite case.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Inclusive range, by reduction modulo the span.
  long long next_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  /// [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class CaseKind {
  uniform,
  near_singular,
  band,
  orthogonal,
  symmetric,
  triangular,
  centrosymmetric,
  persymmetric
};

inline std::string kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::uniform: return "uniform";
    case CaseKind::near_singular: return "near_singular";
    case CaseKind::band: return "band";
    case CaseKind::orthogonal: return "orthogonal";
    case CaseKind::symmetric: return "symmetric";
    case CaseKind::triangular: return "triangular";
    case CaseKind::centrosymmetric: return "centrosymmetric";
    case CaseKind::persymmetric: return "persymmetric";
  }
  return "?";
}

struct SuiteCategory {
  std::string name;
  CaseKind kind;
  std::vector<int> sizes;  // cases cycle through these
  int cases;
  long long lo, hi;  // entry range (endpoints of the float range for orthogonal)
  int index;         // position in the overall suite, part of the stream seed
  std::uint64_t seed;
};

struct SuiteSpec {
  std::vector<SuiteCategory> categories;
  double tolerance = 1e-9;
  std::uint64_t base_seed = 42;

  /// The 147-case reference suite. `sizes` filters the per-category size
  /// lists; categories left without sizes drop out.
  static SuiteSpec reference(std::uint64_t base_seed = 42,
                             const std::vector<int>& sizes = {3, 4, 5}) {
    auto wanted = [&sizes](std::vector<int> own) {
      std::vector<int> keep;
      for (int n : own)
        for (int s : sizes)
          if (n == s) keep.push_back(n);
      return keep;
    };
    SuiteSpec spec;
    spec.base_seed = base_seed;
    int index = 0;
    auto add = [&](const std::string& name, CaseKind kind, std::vector<int> own, int cases,
                   long long lo, long long hi) {
      std::vector<int> keep = wanted(std::move(own));
      if (!keep.empty())
        spec.categories.push_back(SuiteCategory{name, kind, std::move(keep), cases, lo, hi, index,
                                                base_seed + static_cast<std::uint64_t>(index)});
      ++index;
    };
    add("uniform_n3", CaseKind::uniform, {3}, 30, -10, 10);
    add("uniform_n4", CaseKind::uniform, {4}, 30, -10, 10);
    add("uniform_n5", CaseKind::uniform, {5}, 20, -10, 10);
    add("near_singular", CaseKind::near_singular, {3, 4, 5}, 15, -100, 100);
    add("large_entry", CaseKind::uniform, {3, 4, 5}, 12, -1000, 1000);
    add("band_w2", CaseKind::band, {4, 5}, 10, -20, 20);
    add("orthogonal", CaseKind::orthogonal, {3, 4}, 10, -1, 1);
    add("symmetric", CaseKind::symmetric, {3, 4, 5}, 10, -50, 50);
    add("triangular", CaseKind::triangular, {3, 4, 5}, 10, -30, 30);
    return spec;
  }

  /// 30 extra cases at n = 6 and 7: plain, centrosymmetric and persymmetric.
  static SuiteSpec extension(std::uint64_t base_seed = 42) {
    SuiteSpec spec;
    spec.base_seed = base_seed;
    int index = 9;
    auto add = [&](const std::string& name, CaseKind kind, int n) {
      spec.categories.push_back(SuiteCategory{name, kind, {n}, 5, -10, 10, index,
                                              base_seed + static_cast<std::uint64_t>(index)});
      ++index;
    };
    add("random_n6", CaseKind::uniform, 6);
    add("random_n7", CaseKind::uniform, 7);
    add("centro_n6", CaseKind::centrosymmetric, 6);
    add("centro_n7", CaseKind::centrosymmetric, 7);
    add("persym_n6", CaseKind::persymmetric, 6);
    add("persym_n7", CaseKind::persymmetric, 7);
    return spec;
  }

  int total_cases() const {
    int total = 0;
    for (const SuiteCategory& c : categories) total += c.cases;
    return total;
  }
};

struct SuiteCase {
  std::string category;
  int category_index;
  int case_index;
  int n;
  std::uint64_t stream_seed;
  MatrixD values;
  std::optional<MatrixI> exact;
};

namespace detail {

inline long long floor_half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

inline MatrixI draw_int_matrix(SplitMix64& rng, int n, long long lo, long long hi) {
  MatrixI a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = Int128(rng.next_int(lo, hi));
  return a;
}

inline double hadamard_scale(const MatrixD& a) {
  double scale = 1.0;
  for (int i = 1; i <= a.order(); ++i) {
    double s = 0.0;
    for (int j = 1; j <= a.order(); ++j) s += a.at(i, j) * a.at(i, j);
    scale *= std::sqrt(s);
  }
  return scale;
}

/// Integer base with one dependent row, nudged off singularity by a dyadic
/// perturbation of that row. Exactly representable in doubles, and the exact
/// determinant (scaled Bareiss) certifies 1 <= |det| <= 1e-3 * Hadamard scale.
inline MatrixD draw_near_singular(SplitMix64& rng, int n, long long lo, long long hi) {
  constexpr int shift = 6;  // perturbation 2^-6
  constexpr long long unit = 1LL << shift;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    MatrixI base = draw_int_matrix(rng, n, lo, hi);
    std::vector<long long> coeff(static_cast<size_t>(n - 1));
    const long long pool[4] = {-2, -1, 1, 2};
    for (auto& c : coeff) c = pool[rng.next_int(0, 3)];
    for (int j = 1; j <= n; ++j) {
      Int128 combo(0);
      for (int i = 1; i < n; ++i) combo += Int128(coeff[static_cast<size_t>(i - 1)]) * base.at(i, j);
      base.at(n, j) = combo;
    }
    MatrixI scaled(n);  // 2^shift * A, integer
    MatrixD a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        scaled.at(i, j) = base.at(i, j) * Int128(unit);
        a.at(i, j) = base.at(i, j).to_double();
      }
    for (int j = 1; j <= n; ++j) {
      long long r = rng.next_int(lo, hi);
      scaled.at(n, j) += Int128(r);
      a.at(n, j) += static_cast<double>(r) / unit;
    }
    double det = bareiss_det(scaled).to_double();
    for (int i = 0; i < n; ++i) det /= unit;
    if (std::fabs(det) >= 1.0 && std::fabs(det) <= 1e-3 * hadamard_scale(a)) return a;
  }
  throw std::runtime_error("near-singular generator: no acceptable draw");
}

inline MatrixD draw_orthogonal(SplitMix64& rng, int n) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<double>> col(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n)));
    for (auto& c : col)
      for (double& x : c) x = -1.0 + 2.0 * rng.next_unit();
    bool degenerate = false;
    for (size_t j = 0; j < col.size() && !degenerate; ++j) {
      for (size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += col[j][static_cast<size_t>(i)] * col[k][static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) col[j][static_cast<size_t>(i)] -= dot * col[k][static_cast<size_t>(i)];
      }
      double norm = 0.0;
      for (int i = 0; i < n; ++i) norm += col[j][static_cast<size_t>(i)] * col[j][static_cast<size_t>(i)];
      norm = std::sqrt(norm);
      if (norm < 1e-6) {
        degenerate = true;
        break;
      }
      for (int i = 0; i < n; ++i) col[j][static_cast<size_t>(i)] /= norm;
    }
    if (degenerate) continue;
    MatrixD a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) a.at(i, j) = col[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
    return a;
  }
  throw std::runtime_error("orthogonal generator: no acceptable draw");
}

}  // namespace detail

inline SuiteCase generate_case(const SuiteCategory& cat, int case_index) {
  std::uint64_t stream = cat.seed ^ static_cast<std::uint64_t>(cat.index) ^
                         static_cast<std::uint64_t>(case_index);
  SplitMix64 rng(stream);
  int n = cat.sizes[static_cast<size_t>(case_index) % cat.sizes.size()];
  SuiteCase out{cat.name, cat.index, case_index, n, stream, MatrixD(n), std::nullopt};
  switch (cat.kind) {
    case CaseKind::uniform: {
      out.exact = detail::draw_int_matrix(rng, n, cat.lo, cat.hi);
      break;
    }
    case CaseKind::near_singular: {
      out.values = detail::draw_near_singular(rng, n, cat.lo, cat.hi);
      return out;
    }
    case CaseKind::band: {
      MatrixI a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          a.at(i, j) = std::abs(i - j) <= 2 ? Int128(rng.next_int(cat.lo, cat.hi)) : Int128(0);
      out.exact = std::move(a);
      break;
    }
    case CaseKind::orthogonal: {
      out.values = detail::draw_orthogonal(rng, n);
      return out;
    }
    case CaseKind::symmetric: {
      std::vector<long long> raw(static_cast<size_t>(n) * static_cast<size_t>(n));
      for (auto& x : raw) x = rng.next_int(cat.lo, cat.hi);
      auto cell = [&raw, n](int i, int j) { return raw[static_cast<size_t>(i - 1) * n + (j - 1)]; };
      MatrixI a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          a.at(i, j) = Int128(detail::floor_half(cell(i, j) + cell(j, i)));
      out.exact = std::move(a);
      break;
    }
    case CaseKind::triangular: {
      bool upper = case_index % 2 == 0;
      MatrixI a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          bool keep = upper ? j >= i : j <= i;
          a.at(i, j) = keep ? Int128(rng.next_int(cat.lo, cat.hi)) : Int128(0);
        }
      out.exact = std::move(a);
      break;
    }
    case CaseKind::centrosymmetric:
    case CaseKind::persymmetric: {
      MatrixI a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          long long x = rng.next_int(cat.lo, cat.hi);
          int mi = cat.kind == CaseKind::centrosymmetric ? n + 1 - i : n + 1 - j;
          int mj = cat.kind == CaseKind::centrosymmetric ? n + 1 - j : n + 1 - i;
          bool canonical = (i < mi) || (i == mi && j <= mj);
          a.at(i, j) = canonical ? Int128(x) : a.at(mi, mj);
        }
      out.exact = std::move(a);
      break;
    }
  }
  out.values = to_double(*out.exact);
  return out;
}

inline std::vector<SuiteCase> generate_suite(const SuiteSpec& spec) {
  std::vector<SuiteCase> cases;
  for (const SuiteCategory& cat : spec.categories)
    for (int k = 0; k < cat.cases; ++k) cases.push_back(generate_case(cat, k));
  return cases;
}

struct CaseResult {
  std::string category;
  int category_index;
  int case_index;
  int n;
  std::uint64_t stream_seed;
  bool exact_regime;
  bool exact_match;  // Int128 orbital == Leibniz, exact regime only
  double det_orbital, det_leibniz, det_lu;
  std::optional<double> det_structured;
  std::string structured_path;  // centro | circulant | triangular | ""
  double max_rel_err;
  bool pass;
  double ms_orbital, ms_leibniz, ms_lu;
};

struct SuiteReport {
  double tolerance;
  std::vector<CaseResult> results;
  bool all_pass;
  int designated;  // index of the case whose orbit sums and details get emitted
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <Scalar T>
std::pair<std::optional<double>, std::string> structured_det(const SquareMatrix<T>& a) {
  StructureFlags f = classify(a);
  if (f.centrosymmetric && a.order() % 2 == 0)
    return {to_double(centro_factor_det(a).det), "centro"};
  if (f.circulant) return {circulant_det(a).det, "circulant"};
  if (f.triangular_upper || f.triangular_lower) return {to_double(triangular_det(a)), "triangular"};
  return {std::nullopt, ""};
}

}  // namespace detail

inline CaseResult run_case(const SuiteCase& c, double tolerance) {
  CaseResult r{c.category, c.category_index, c.case_index,       c.n,   c.stream_seed,
               c.exact.has_value(), false,   0.0,  0.0,          0.0,   std::nullopt,
               "",         0.0,     false,   0.0,  0.0,          0.0};
  auto t0 = std::chrono::steady_clock::now();
  if (c.exact) {
    OrbitalResult<Int128> orb = orbital_det(*c.exact);
    r.ms_orbital = detail::ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    Int128 lei = leibniz_det(*c.exact);
    r.ms_leibniz = detail::ms_since(t0);
    r.exact_match = orb.det == lei;
    r.det_orbital = orb.det.to_double();
    r.det_leibniz = lei.to_double();
  } else {
    OrbitalResult<double> orb = orbital_det(c.values);
    r.ms_orbital = detail::ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    r.det_leibniz = leibniz_det(c.values);
    r.ms_leibniz = detail::ms_since(t0);
    r.det_orbital = orb.det;
  }
  t0 = std::chrono::steady_clock::now();
  r.det_lu = lu_det(c.values);
  r.ms_lu = detail::ms_since(t0);
  auto structured =
      c.exact ? detail::structured_det(*c.exact) : detail::structured_det(c.values);
  r.det_structured = structured.first;
  r.structured_path = structured.second;

  std::vector<double> dets{r.det_orbital, r.det_leibniz, r.det_lu};
  if (r.det_structured) dets.push_back(*r.det_structured);
  double err = 0.0;
  for (double x : dets)
    for (double y : dets) err = std::max(err, std::fabs(x - y) / std::max(1.0, std::fabs(y)));
  r.max_rel_err = err;
  r.pass = err <= tolerance && (!r.exact_regime || r.exact_match);
  return r;
}

inline SuiteReport run_suite(const std::vector<SuiteCase>& cases, double tolerance) {
  SuiteReport report{tolerance, {}, true, -1};
  for (const SuiteCase& c : cases) {
    report.results.push_back(run_case(c, tolerance));
    report.all_pass = report.all_pass && report.results.back().pass;
  }
  for (size_t i = 0; i < cases.size() && report.designated < 0; ++i)
    if (cases[i].n == 5) report.designated = static_cast<int>(i);
  if (report.designated < 0 && !cases.empty()) {
    int best = 0;
    for (size_t i = 1; i < cases.size(); ++i)
      if (cases[i].n > cases[best].n) best = static_cast<int>(i);
    report.designated = best;
  }
  return report;
}

/// --- report writers ---

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

inline std::string verification_csv(const SuiteReport& report, bool timings) {
  std::string out =
      "category,case_index,n,stream_seed,regime,det_orbital,det_leibniz,det_lu,"
      "det_structured,structured_path,max_rel_err,pass,ms_orbital,ms_leibniz,ms_lu\n";
  for (const CaseResult& r : report.results) {
    char err[40];
    std::snprintf(err, sizeof err, "%.3e", r.max_rel_err);
    out += r.category + ',' + std::to_string(r.case_index) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.stream_seed) + ',' + (r.exact_regime ? "exact" : "float") + ',' +
           format_scalar(r.det_orbital) + ',' + format_scalar(r.det_leibniz) + ',' +
           format_scalar(r.det_lu) + ',' +
           (r.det_structured ? format_scalar(*r.det_structured) : std::string()) + ',' +
           r.structured_path + ',' + err + ',' + (r.pass ? "1" : "0") + ',' +
           format_ms(timings ? r.ms_orbital : 0.0) + ',' + format_ms(timings ? r.ms_leibniz : 0.0) +
           ',' + format_ms(timings ? r.ms_lu : 0.0) + '\n';
  }
  return out;
}

/// Base-monomial table, one row per orbit; the optional matrix adds the orbit
/// sums. `right_rotation` lists each orbit in the legacy clockwise order,
/// which only permutes the sign pattern.
template <Scalar T>
std::string orbit_table_csv(int n, const SquareMatrix<T>* a, bool right_rotation = false) {
  std::vector<OrbitSum<T>> sums;
  if (a) sums = orbital_det(*a).orbit_sums;
  std::string out = a ? "orbit_index,base_perm,inversions,sign,sign_pattern,orbital_sum\n"
                      : "orbit_index,base_perm,inversions,sign,sign_pattern\n";
  std::vector<Permutation> bases = base_monomials(n);
  for (size_t b = 0; b < bases.size(); ++b) {
    Orbit orbit = Orbit::cyclic(bases[b]);
    std::string pattern;
    for (int r = 0; r < n; ++r)
      pattern += orbit.sign_at(right_rotation ? (n - r) % n : r).symbol();
    out += std::to_string(b + 1) + ',' + csv_quote(bases[b].to_string()) + ',' +
           std::to_string(bases[b].inversions()) + ',' + bases[b].sign().symbol() + ',' + pattern;
    if (a) out += ',' + format_scalar(sums[b].sum);
    out += '\n';
  }
  return out;
}

inline std::string orbit_table_csv(int n, bool right_rotation = false) {
  return orbit_table_csv<Int128>(n, nullptr, right_rotation);
}

template <Scalar T>
std::string orbit_sums_csv(const OrbitalResult<T>& orbital) {
  std::string out = "orbit_index,base_perm,orbital_sum\n";
  for (size_t b = 0; b < orbital.orbit_sums.size(); ++b)
    out += std::to_string(b + 1) + ',' + csv_quote(orbital.orbit_sums[b].base.to_string()) + ',' +
           format_scalar(orbital.orbit_sums[b].sum) + '\n';
  return out;
}

namespace detail {

inline nlohmann::ordered_json flags_json(const StructureFlags& f) {
  nlohmann::ordered_json j;
  j["symmetric"] = f.symmetric;
  j["persymmetric"] = f.persymmetric;
  j["centrosymmetric"] = f.centrosymmetric;
  j["toeplitz"] = f.toeplitz;
  j["circulant"] = f.circulant;
  j["triangular_upper"] = f.triangular_upper;
  j["triangular_lower"] = f.triangular_lower;
  j["separable"] = f.separable;
  j["band_width"] = f.band_width;
  return j;
}

template <Scalar T>
nlohmann::ordered_json details_json_for(const SuiteCase& c, const CaseResult& r,
                                        const SquareMatrix<T>& a) {
  nlohmann::ordered_json j;
  j["category"] = c.category;
  j["case_index"] = c.case_index;
  j["n"] = c.n;
  j["stream_seed"] = c.stream_seed;
  j["regime"] = c.exact ? "exact" : "float";
  j["flags"] = flags_json(classify(a));
  nlohmann::ordered_json det;
  det["orbital"] = r.det_orbital;
  det["leibniz"] = r.det_leibniz;
  det["lu"] = r.det_lu;
  det["structured"] = r.det_structured ? nlohmann::ordered_json(*r.det_structured)
                                       : nlohmann::ordered_json(nullptr);
  j["det"] = std::move(det);
  OrbitalResult<T> orbital = orbital_det(a);
  auto sums = nlohmann::ordered_json::array();
  for (const OrbitSum<T>& s : orbital.orbit_sums) {
    nlohmann::ordered_json js;
    js["base"] = s.base.to_string();
    js["sum"] = to_double(s.sum);
    sums.push_back(std::move(js));
  }
  j["orbit_sums"] = std::move(sums);
  OrbitalSpectrum spectrum = orbital_spectrum(a);
  j["spectrum"]["rotation_sums"] = spectrum.rotation_sums;
  auto modes = nlohmann::ordered_json::array();
  for (const auto& g : spectrum.modes) modes.push_back({g.real(), g.imag()});
  j["spectrum"]["modes"] = std::move(modes);
  return j;
}

}  // namespace detail

inline std::string details_json(const SuiteCase& c, const CaseResult& r) {
  nlohmann::ordered_json j = c.exact ? detail::details_json_for(c, r, *c.exact)
                                     : detail::details_json_for(c, r, c.values);
  return j.dump(2) + "\n";
}

inline std::string manifest_json(const SuiteSpec& spec, bool timestamp) {
  nlohmann::ordered_json j;
  j["artifact_version"] = "1.0.0";
  nlohmann::ordered_json s;
  s["rng"] = "splitmix64";
  s["seeding"] = "stream_seed = category_seed xor category_index xor case_index";
  s["base_seed"] = spec.base_seed;
  auto cats = nlohmann::ordered_json::array();
  for (const SuiteCategory& c : spec.categories) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["kind"] = kind_name(c.kind);
    jc["index"] = c.index;
    jc["sizes"] = c.sizes;
    jc["cases"] = c.cases;
    jc["range"] = {c.lo, c.hi};
    jc["seed"] = c.seed;
    cats.push_back(std::move(jc));
  }
  s["categories"] = std::move(cats);
  s["total_cases"] = spec.total_cases();
  j["spec"] = std::move(s);
  auto seeds = nlohmann::ordered_json::array();
  for (const SuiteCategory& c : spec.categories) seeds.push_back(c.seed);
  j["seeds"] = std::move(seeds);
  j["tolerance"] = spec.tolerance;
  if (timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  } else {
    j["timestamp"] = nullptr;
  }
  return j.dump(2) + "\n";
}

struct SuiteOutputs {
  std::filesystem::path verification, orbit_sums, details, manifest;
};

/// Writes the four report files into dir (created if missing).
inline SuiteOutputs write_suite_outputs(const std::filesystem::path& dir, const SuiteSpec& spec,
                                        const std::vector<SuiteCase>& cases,
                                        const SuiteReport& report, bool timings) {
  std::filesystem::create_directories(dir);
  SuiteOutputs paths{dir / "verification.csv", dir / "orbit_sums.csv", dir / "details.json",
                     dir / "manifest.json"};
  auto dump = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
  };
  dump(paths.verification, verification_csv(report, timings));
  if (report.designated >= 0) {
    const SuiteCase& c = cases[static_cast<size_t>(report.designated)];
    dump(paths.orbit_sums, c.exact ? orbit_sums_csv(orbital_det(*c.exact))
                                   : orbit_sums_csv(orbital_det(c.values)));
    dump(paths.details, details_json(c, report.results[static_cast<size_t>(report.designated)]));
  }
  dump(paths.manifest, manifest_json(spec, timings));
  return paths;
}

}  // namespace orbdet
