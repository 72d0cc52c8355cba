#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbdet/orbdet.hpp"

namespace {

orbdet::CsvMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return orbdet::read_matrix_csv(in);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

std::string sign_text(orbdet::Sign s) { return std::string(1, s.symbol()); }

// --- det ---

template <orbdet::Scalar T>
void run_det_regime(const orbdet::SquareMatrix<T>& a, const orbdet::MatrixD& values,
                    const std::string& method) {
  using namespace orbdet;
  std::string chosen = method;
  if (chosen == "auto") chosen = a.order() <= enumeration_cap ? "orbital" : "lu";
  if (chosen == "orbital") {
    OrbitalResult<T> r = orbital_det(a);
    std::cout << "det(orbital) = " << format_scalar(r.det) << "\n"
              << "orbits = " << r.orbit_sums.size() << "\n"
              << "terms = " << r.terms_consumed << "\n";
  } else if (chosen == "leibniz") {
    std::cout << "det(leibniz) = " << format_scalar(leibniz_det(a)) << "\n";
  } else if (chosen == "lu") {
    std::cout << "det(lu) = " << format_scalar(lu_det(values)) << "\n";
  } else if (chosen == "centro") {
    CentroFactorization<T> f = centro_factor_det(a);
    std::cout << "det(centro) = " << format_scalar(f.det) << "\n"
              << "half determinants: " << format_scalar(f.det_plus) << " * "
              << format_scalar(f.det_minus) << "\n";
  } else if (chosen == "circulant") {
    CirculantResult r = circulant_det(a);
    std::cout << "det(circulant) = " << format_scalar(r.det) << "\n"
              << "imag residue = " << r.imag_residue << "\n";
  } else if (chosen == "triangular") {
    std::cout << "det(triangular) = " << format_scalar(triangular_det(a)) << "\n";
  }
}

// --- orbits ---

std::string elements_csv(int n, bool additive, bool right_rotation) {
  using namespace orbdet;
  std::string out = "orbit_index,rotation_index,perm,sign\n";
  std::vector<Permutation> bases = base_monomials(n);
  for (size_t b = 0; b < bases.size(); ++b) {
    Orbit orbit = additive ? Orbit::additive(bases[b]) : Orbit::cyclic(bases[b]);
    for (int r = 0; r < n; ++r) {
      int idx = right_rotation ? (n - r) % n : r;
      out += std::to_string(b + 1) + ',' + std::to_string(r) + ',' +
             csv_quote(orbit.elements()[static_cast<size_t>(idx)].to_string()) + ',' +
             orbit.sign_at(idx).symbol();
      out += '\n';
    }
  }
  return out;
}

// --- pair ---

nlohmann::ordered_json pairing_json(int n) {
  using namespace orbdet;
  nlohmann::ordered_json j;
  j["n"] = n;
  auto pairs = canonical_pairing(n);
  j["pairs"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < pairs.size(); ++i) {
    nlohmann::ordered_json jp;
    jp["pair_index"] = i + 1;
    jp["base"] = pairs[i].base.canonical().to_string();
    jp["companion"] = pairs[i].partner.canonical().to_string();
    jp["sign_ratio"] = sign_text(pairs[i].sign_ratio);
    jp["table_sign"] = sign_text(pairs[i].table_sign);
    jp["table_matches"] = pairs[i].table_matches;
    j["pairs"].push_back(std::move(jp));
  }
  return j;
}

template <orbdet::Scalar T>
nlohmann::ordered_json cancellation_json(const orbdet::SquareMatrix<T>& a) {
  using namespace orbdet;
  CancellationReport<T> r = cancellation_report(a);
  nlohmann::ordered_json j;
  j["n"] = r.order;
  j["table_sign"] = sign_text(r.table_sign);
  j["table_matches"] = r.table_matches;
  j["couples"] = r.couples;
  j["equal_weight_couples"] = r.equal_weight_couples;
  j["cancelling_couples"] = r.cancelling_couples;
  j["det"] = to_double(r.det);
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairSummary& p : r.pairs) {
    nlohmann::ordered_json jp;
    jp["pair_index"] = p.pair_index;
    jp["base"] = p.base.to_string();
    jp["companion"] = p.partner.to_string();
    jp["sign_ratio"] = sign_text(p.sign_ratio);
    jp["equal_weight_couples"] = p.equal_weight_couples;
    jp["cancelling_couples"] = p.cancelling_couples;
    j["pairs"].push_back(std::move(jp));
  }
  return j;
}

// --- rectify ---

template <orbdet::Scalar T>
void run_rectify(const orbdet::SquareMatrix<T>& a, const orbdet::Permutation& seed,
                 std::optional<int> kappa, bool extended) {
  using namespace orbdet;
  RectifiedView<T> view = kappa ? rectify_with_shift(a, canonical_representative(seed), *kappa)
                                : rectify_orbit(a, seed);
  Orbit orbit = Orbit::cyclic(view.base);
  std::vector<int> offsets = orbit_offsets(view, orbit);
  std::cout << "base = " << view.base.to_string() << "\n"
            << "rectifier = " << view.rectifier.to_string() << "\n"
            << "kappa = " << view.kappa << "\n";
  std::cout << "offsets =";
  for (int d : offsets) std::cout << ' ' << d;
  std::cout << "\nrectified:\n" << write_matrix_csv(view.rectified);
  if (extended) {
    std::cout << "extended strip (width " << view.extended_width() << "):\n";
    for (int i = 1; i <= view.order(); ++i) {
      for (int c = 1; c <= view.extended_width(); ++c) {
        if (c > 1) std::cout << ',';
        std::cout << format_scalar(view.extended_at(i, c));
      }
      std::cout << '\n';
    }
  }
}

// --- factor ---

template <orbdet::Scalar T>
void run_factor(const orbdet::SquareMatrix<T>& a) {
  using namespace orbdet;
  CentroFactorization<T> f = centro_factor_det(a);
  std::cout << "half = " << f.half << "\n";
  std::cout << "M+:\n" << write_matrix_csv(f.m_plus);
  std::cout << "M-:\n" << write_matrix_csv(f.m_minus);
  std::cout << "det(M+) = " << format_scalar(f.det_plus) << "\n"
            << "det(M-) = " << format_scalar(f.det_minus) << "\n"
            << "det = " << format_scalar(f.det) << "\n"
            << "plain blocks det(B+C)*det(B-C) = " << format_scalar(f.plain_product)
            << (f.plain_matches ? " (matches)" : " (differs)") << "\n"
            << "eliminations = " << f.eliminations << "\n";
}

// --- spectrum ---

template <orbdet::Scalar T>
void run_spectrum(const orbdet::SquareMatrix<T>& a, bool circulant) {
  using namespace orbdet;
  if (circulant) {
    CirculantResult r = circulant_det(a);
    std::cout << "k,Re(lambda),Im(lambda)\n";
    for (size_t k = 0; k < r.eigenvalues.size(); ++k)
      std::cout << k << ',' << r.eigenvalues[k].real() << ',' << r.eigenvalues[k].imag() << '\n';
    std::cout << "det = " << format_scalar(r.det) << "\n"
              << "imag residue = " << r.imag_residue << "\n";
    return;
  }
  OrbitalSpectrum s = orbital_spectrum(a);
  std::cout << "r,rotation_sum\n";
  for (size_t r = 0; r < s.rotation_sums.size(); ++r)
    std::cout << r << ',' << format_scalar(s.rotation_sums[r]) << '\n';
  std::cout << "k,Re(G),Im(G)\n";
  for (size_t k = 0; k < s.modes.size(); ++k)
    std::cout << k << ',' << s.modes[k].real() << ',' << s.modes[k].imag() << '\n';
  std::cout << "mode0 = " << format_scalar(s.modes[0].real()) << " (determinant)\n";
}

// --- viz ---

template <orbdet::Scalar T>
orbdet::FigureDoc build_figure(const orbdet::SquareMatrix<T>& a, int method,
                               const orbdet::Permutation& seed, orbdet::TotalMode mode) {
  using namespace orbdet;
  switch (method) {
    case 1: return orbit_polyline_figure(a, Orbit::cyclic(seed));
    case 2: return parallel_figure(a, seed);
    case 3: return pair_panels_figure(a, make_pair(canonical_representative(seed)));
    case 4: return total_figure(a, mode);
    case 5: return increment_figure(a, seed);
  }
  throw std::invalid_argument("viz: method must be 1..5");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit-decomposed determinants: exact cross-checked evaluation, "
               "rectification, pair cancellation, structured fast paths and figures"};
  app.require_subcommand(1);

  // det
  auto* det_cmd = app.add_subcommand("det", "Evaluate a determinant");
  std::string det_matrix, det_method = "auto";
  det_cmd->add_option("matrix", det_matrix, "matrix CSV file")->required();
  det_cmd->add_option("--method", det_method, "auto|orbital|leibniz|lu|centro|circulant|triangular")
      ->check(CLI::IsMember({"auto", "orbital", "leibniz", "lu", "centro", "circulant",
                             "triangular"}));

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "List orbit table or elements");
  int orbits_n = 0;
  std::string orbits_matrix, orbits_out, orbits_rotation = "left";
  bool orbits_additive = false, orbits_elements = false;
  orbits_cmd->add_option("--n", orbits_n, "order")->required()->check(CLI::Range(1, 10));
  orbits_cmd->add_option("--matrix", orbits_matrix, "matrix CSV: adds orbital sums");
  orbits_cmd->add_flag("--additive", orbits_additive, "additive action (elements mode)");
  orbits_cmd->add_flag("--elements", orbits_elements, "list every orbit element");
  orbits_cmd->add_option("--rotation", orbits_rotation, "left|right intra-orbit listing order")
      ->check(CLI::IsMember({"left", "right"}));
  orbits_cmd->add_option("--out", orbits_out, "output file (default stdout)");

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "Orbit pairing / cancellation report");
  std::string pair_matrix, pair_out;
  int pair_n = 0;
  pair_cmd->add_option("matrix", pair_matrix, "matrix CSV: full cancellation report");
  pair_cmd->add_option("--n", pair_n, "order: list the canonical pairing")->check(CLI::Range(3, 10));
  pair_cmd->add_option("--out", pair_out, "output file (default stdout)");

  // rectify
  auto* rect_cmd = app.add_subcommand("rectify", "Rectify an orbit onto consecutive diagonals");
  std::string rect_matrix, rect_perm;
  int rect_kappa = -1;
  bool rect_extended = false;
  rect_cmd->add_option("matrix", rect_matrix, "matrix CSV file")->required();
  rect_cmd->add_option("--perm", rect_perm, "seed permutation, e.g. [2,4,1,3]")->required();
  rect_cmd->add_option("--kappa", rect_kappa, "diagonal shift for the canonical representative");
  rect_cmd->add_flag("--extended", rect_extended, "also print the width 2n-1 strip");

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "Centrosymmetric block factorization");
  std::string factor_matrix;
  factor_cmd->add_option("matrix", factor_matrix, "matrix CSV file")->required();

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "Orbital or circulant spectrum");
  std::string spec_matrix;
  bool spec_circulant = false;
  spec_cmd->add_option("matrix", spec_matrix, "matrix CSV file")->required();
  spec_cmd->add_flag("--circulant", spec_circulant, "eigenvalues of a circulant matrix");

  // viz
  auto* viz_cmd = app.add_subcommand("viz", "Render a figure to SVG");
  std::string viz_matrix, viz_perm, viz_mode = "plus", viz_out = "figure.svg", viz_labels;
  int viz_method = 0;
  viz_cmd->add_option("matrix", viz_matrix, "matrix CSV file")->required();
  viz_cmd->add_option("--method", viz_method, "1..5")->required()->check(CLI::Range(1, 5));
  viz_cmd->add_option("--perm", viz_perm, "seed permutation (methods 1,2,3,5); default identity");
  viz_cmd->add_option("--mode", viz_mode, "plus|minus|both (method 4)")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  viz_cmd->add_option("--out", viz_out, "SVG output path");
  viz_cmd->add_option("--labels", viz_labels, "also write the stroke-label JSON sidecar");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized verification suite");
  bool verify_headless = false, verify_extended = false, verify_no_timings = false;
  std::string verify_sizes = "3,4,5", verify_outdir;
  std::uint64_t verify_seed = 42;
  double verify_tolerance = 1e-9;
  verify_cmd->add_flag("--headless", verify_headless, "no interactive output (the only mode)");
  verify_cmd->add_option("--sizes", verify_sizes, "comma list of orders, default 3,4,5");
  verify_cmd->add_option("--seed", verify_seed, "base seed, default 42");
  verify_cmd->add_option("--outdir", verify_outdir,
                         "report directory (default $ORBDET_OUTDIR or ./results)");
  verify_cmd->add_flag("--extended", verify_extended, "append the n=6,7 extension categories");
  verify_cmd->add_flag("--no-timings", verify_no_timings,
                       "zero timing columns and omit the timestamp (byte-stable output)");
  verify_cmd->add_option("--tolerance", verify_tolerance, "relative tolerance, default 1e-9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace orbdet;
  try {
    if (app.got_subcommand(det_cmd)) {
      CsvMatrix m = load_matrix(det_matrix);
      if (m.exact)
        run_det_regime(*m.exact, m.values, det_method);
      else
        run_det_regime(m.values, m.values, det_method);
    } else if (app.got_subcommand(orbits_cmd)) {
      std::string text;
      bool right = orbits_rotation == "right";
      if (orbits_elements) {
        text = elements_csv(orbits_n, orbits_additive, right);
      } else if (!orbits_matrix.empty()) {
        CsvMatrix m = load_matrix(orbits_matrix);
        if (m.values.order() != orbits_n)
          throw std::invalid_argument("orbits: matrix order does not match --n");
        text = m.exact ? orbit_table_csv(orbits_n, &*m.exact, right)
                       : orbit_table_csv(orbits_n, &m.values, right);
      } else {
        text = orbit_table_csv(orbits_n, right);
      }
      emit(orbits_out, text);
    } else if (app.got_subcommand(pair_cmd)) {
      if (pair_matrix.empty() && pair_n == 0)
        throw std::invalid_argument("pair: provide a matrix or --n");
      nlohmann::ordered_json j;
      if (!pair_matrix.empty()) {
        CsvMatrix m = load_matrix(pair_matrix);
        j = m.exact ? cancellation_json(*m.exact) : cancellation_json(m.values);
      } else {
        j = pairing_json(pair_n);
      }
      emit(pair_out, j.dump(2) + "\n");
    } else if (app.got_subcommand(rect_cmd)) {
      CsvMatrix m = load_matrix(rect_matrix);
      Permutation seed = Permutation::parse(rect_perm);
      std::optional<int> kappa;
      if (rect_cmd->count("--kappa")) kappa = rect_kappa;
      if (m.exact)
        run_rectify(*m.exact, seed, kappa, rect_extended);
      else
        run_rectify(m.values, seed, kappa, rect_extended);
    } else if (app.got_subcommand(factor_cmd)) {
      CsvMatrix m = load_matrix(factor_matrix);
      if (m.exact)
        run_factor(*m.exact);
      else
        run_factor(m.values);
    } else if (app.got_subcommand(spec_cmd)) {
      CsvMatrix m = load_matrix(spec_matrix);
      if (m.exact)
        run_spectrum(*m.exact, spec_circulant);
      else
        run_spectrum(m.values, spec_circulant);
    } else if (app.got_subcommand(viz_cmd)) {
      CsvMatrix m = load_matrix(viz_matrix);
      int n = m.values.order();
      Permutation seed = viz_perm.empty() ? Permutation::identity(n)
                                          : Permutation::parse(viz_perm);
      TotalMode mode = viz_mode == "plus"    ? TotalMode::plus
                       : viz_mode == "minus" ? TotalMode::minus
                                             : TotalMode::both;
      FigureDoc doc = m.exact ? build_figure(*m.exact, viz_method, seed, mode)
                              : build_figure(m.values, viz_method, seed, mode);
      emit(viz_out, render_svg(doc));
      if (!viz_labels.empty()) emit(viz_labels, stroke_labels_json(doc));
      std::cout << "wrote " << viz_out << " (" << doc.strokes.size() << " strokes)\n";
    } else if (app.got_subcommand(verify_cmd)) {
      std::vector<int> sizes;
      {
        std::stringstream ss(verify_sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok.empty()) continue;
          sizes.push_back(std::stoi(tok));
        }
        if (sizes.empty()) throw std::invalid_argument("verify: --sizes has no orders");
      }
      SuiteSpec spec = SuiteSpec::reference(verify_seed, sizes);
      spec.tolerance = verify_tolerance;
      if (verify_extended) {
        SuiteSpec ext = SuiteSpec::extension(verify_seed);
        spec.categories.insert(spec.categories.end(), ext.categories.begin(),
                               ext.categories.end());
      }
      if (verify_outdir.empty()) {
        const char* env = std::getenv("ORBDET_OUTDIR");
        verify_outdir = env && *env ? env : "results";
      }
      std::vector<SuiteCase> cases = generate_suite(spec);
      SuiteReport report = run_suite(cases, spec.tolerance);
      SuiteOutputs files =
          write_suite_outputs(verify_outdir, spec, cases, report, !verify_no_timings);
      int passed = 0;
      for (const CaseResult& r : report.results)
        if (r.pass) ++passed;
      for (const SuiteCategory& cat : spec.categories) {
        int cat_pass = 0;
        double cat_err = 0.0;
        for (const CaseResult& r : report.results)
          if (r.category == cat.name) {
            if (r.pass) ++cat_pass;
            cat_err = std::max(cat_err, r.max_rel_err);
          }
        std::printf("%-14s %3d/%3d  max_rel_err %.3e\n", cat.name.c_str(), cat_pass, cat.cases,
                    cat_err);
      }
      std::printf("%d/%d cases within %.1e\n", passed, spec.total_cases(), spec.tolerance);
      std::cout << "wrote " << files.verification.string() << ", " << files.orbit_sums.string()
                << ", " << files.details.string() << ", " << files.manifest.string() << "\n";
      if (!report.all_pass) {
        for (const CaseResult& r : report.results)
          if (!r.pass)
            std::cerr << "FAIL " << r.category << " case " << r.case_index << " (n=" << r.n
                      << ", seed=" << r.stream_seed << "): max_rel_err " << r.max_rel_err << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
