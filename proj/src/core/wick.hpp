// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/mode_energies.hpp"

namespace wickdist {

enum class wick_method {
  exact = 0,
  two_mode_closed = 1,
  perturbative = 2,
  direct_correlator = 3,
};

// Pairwise violations |<n_i n_j> - <n_i><n_j>| for i < j, flattened row-major.
struct wick_report {
  int n_modes = 0;
  wick_method method = wick_method::exact;
  std::vector<double> pairwise;  // size N(N-1)/2
  double w_max = 0.0;

  double pair(int i, int j) const;
  static std::size_t pair_index(int n_modes, int i, int j);
};

double violation_exact(const mode_energies& m, int i, int j);

// Closed form for the two-mode spectrum {0, E1, E2, E12}. The default evaluates
// |e^{-E12} - e^{-E1-E2}| / Z^2 with Z = 1 + e^{-E1} + e^{-E2} + e^{-E12}, the
// form consistent with the exact enumeration. `as_printed` selects the variant
// |1 - e^{E12-E1-E2}| / (1 + e^{E12-E1} + e^{E12-E2} + e^{E12})^2, which differs
// by a factor e^{-E12}; it is kept only as a diagnostic.
double violation_two_mode_closed(double e1, double e2, double e12, bool as_printed = false);

// First-order expansions in the pair couplings, evaluated by explicit
// enumeration over spectator-mode occupation patterns. Rejects models with
// nonzero three-mode-or-higher terms.
double perturbative_occupation(const mode_energies& m, int k);
double perturbative_pair_occupation(const mode_energies& m, int k, int l);
double violation_perturbative(const mode_energies& m, int i, int j);

// Fills all pairs i < j with the requested method. `as_printed` only affects
// two_mode_closed. direct_correlator reports are produced by the
// diagonalization pipeline, not from mode energies.
wick_report compute_report(const mode_energies& m, wick_method method, bool as_printed = false);

}  // namespace wickdist
