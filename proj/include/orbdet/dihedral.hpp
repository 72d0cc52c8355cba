#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orbdet/determinant.hpp"
#include "orbdet/orbit.hpp"

namespace orbdet {

/// Tail reversal: keep position 1, reverse positions 2..n. Applied to a
/// canonical representative it yields the canonical representative of the
/// mirrored orbit.
inline Permutation companion(const Permutation& sigma_star) {
  if (!sigma_star.fixes_first())
    throw std::invalid_argument("companion: representative must send 1 -> 1");
  std::vector<int> v(sigma_star.values().begin(), sigma_star.values().end());
  std::reverse(v.begin() + 1, v.end());
  return Permutation(std::move(v));
}

/// An orbit and its mirrored partner, with the cross-orbit involution that
/// matches rotation r of one side to rotation (n-r) mod n of the other.
struct OrbitPair {
  Orbit base;     // orbit of the lex-smaller representative
  Orbit partner;  // orbit of its tail reversal
  Sign sign_ratio;   // sign(partner base) * sign(base), computed from the data
  Sign table_sign;   // the quoted closed form (-1)^(n(n-1)/2), kept for reporting
  bool table_matches;

  Permutation phi(const Permutation& tau) const {
    int n = base.order();
    if (auto r = base.index_of(tau)) return partner.elements()[static_cast<size_t>((n - *r) % n)];
    if (auto s = partner.index_of(tau)) return base.elements()[static_cast<size_t>((n - *s) % n)];
    throw std::invalid_argument("phi: " + tau.to_string() + " is not in this pair");
  }
};

inline OrbitPair make_pair(const Permutation& sigma_star) {
  int n = sigma_star.order();
  if (n < 3)
    throw std::domain_error("pairing: undefined below order 3 (tail reversal fixes every orbit)");
  if (!sigma_star.fixes_first())
    throw std::invalid_argument("pairing: representative must send 1 -> 1");
  Permutation hat = companion(sigma_star);
  Sign ratio = hat.sign() * sigma_star.sign();
  Sign table = Sign::of_parity(static_cast<long long>(n) * (n - 1) / 2);
  return OrbitPair{Orbit::cyclic(sigma_star), Orbit::cyclic(hat), ratio, table, ratio == table};
}

inline Permutation phi(const OrbitPair& pair, const Permutation& tau) { return pair.phi(tau); }

/// The (n-1)!/2 unordered orbit pairs, each listed once under its lex-smaller
/// representative. Tail reversal has no fixed representative for n >= 3 (a
/// reversed tail of length >= 2 never equals itself), so this is a perfect
/// matching.
inline std::vector<OrbitPair> canonical_pairing(int n) {
  if (n < 3)
    throw std::domain_error("pairing: undefined below order 3 (tail reversal fixes every orbit)");
  std::vector<OrbitPair> pairs;
  for (const Permutation& base : base_monomials(n))
    if (base < companion(base)) pairs.push_back(make_pair(base));
  return pairs;
}

/// One (tau, phi(tau)) couple evaluated on a matrix.
template <Scalar T>
struct PairContribution {
  Permutation tau, phi_tau;
  Sign sign_tau, sign_phi;
  T weight_tau, weight_phi;
  bool weights_equal;
  bool cancels;  // equal nonzero weights under opposite signs cost nothing
  T value;       // sign_tau*weight_tau + sign_phi*weight_phi
};

template <Scalar T>
PairContribution<T> pair_contribution(const SquareMatrix<T>& a, const OrbitPair& pair,
                                      const Permutation& tau) {
  Permutation mirrored = pair.phi(tau);
  T w_tau = weight(a, tau);
  T w_phi = weight(a, mirrored);
  Sign s_tau = tau.sign();
  Sign s_phi = mirrored.sign();
  bool equal = w_tau == w_phi;
  bool cancels = equal && s_tau * s_phi == Sign::minus() && !(w_tau == T(0));
  T value = (s_tau == Sign::plus() ? w_tau : -w_tau) + (s_phi == Sign::plus() ? w_phi : -w_phi);
  return PairContribution<T>{tau,  std::move(mirrored), s_tau, s_phi, std::move(w_tau),
                             std::move(w_phi), equal, cancels, std::move(value)};
}

struct PairSummary {
  int pair_index;  // 1-based position in the canonical pairing
  Permutation base, partner;
  Sign sign_ratio;
  int equal_weight_couples;
  int cancelling_couples;
};

/// Full cancellation census of a matrix: every (tau, phi(tau)) couple, grouped
/// by pair. Summing the couple values reproduces the determinant, which the
/// det field records as a built-in cross-check.
template <Scalar T>
struct CancellationReport {
  int order;
  Sign table_sign;
  bool table_matches;  // does the quoted closed form match the computed ratios
  std::uint64_t couples;
  std::uint64_t equal_weight_couples;
  std::uint64_t cancelling_couples;
  T det;
  std::vector<PairSummary> pairs;
};

template <Scalar T>
CancellationReport<T> cancellation_report(const SquareMatrix<T>& a) {
  int n = check_enumeration_order(a.order());
  CancellationReport<T> report{n,    Sign::of_parity(static_cast<long long>(n) * (n - 1) / 2),
                               true, 0,
                               0,    0,
                               T(0), {}};
  if (n < 3) {
    report.det = orbital_det(a).det;
    return report;
  }
  Accumulator<T> det_acc;
  int pair_index = 0;
  for (const Permutation& base : base_monomials(n)) {
    if (!(base < companion(base))) continue;
    OrbitPair pair = make_pair(base);
    PairSummary summary{++pair_index, pair.base.canonical(), pair.partner.canonical(),
                        pair.sign_ratio, 0, 0};
    report.table_matches = report.table_matches && pair.table_matches;
    for (int r = 0; r < n; ++r) {
      PairContribution<T> c =
          pair_contribution(a, pair, pair.base.elements()[static_cast<size_t>(r)]);
      ++report.couples;
      if (c.weights_equal) {
        ++report.equal_weight_couples;
        ++summary.equal_weight_couples;
      }
      if (c.cancels) {
        ++report.cancelling_couples;
        ++summary.cancelling_couples;
      }
      det_acc.add(c.value);
    }
    report.pairs.push_back(std::move(summary));
  }
  report.det = det_acc.value();
  return report;
}

}  // namespace orbdet
