// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "core/spectrum.hpp"
#include "core/wick.hpp"

namespace wickdist {

struct free_fit_options {
  int restarts = 16;
  int max_evals_per_restart = 0;  // 0 means 200 * n_modes
  double ftol = 1e-10;            // simplex convergence threshold
  double target = 1e-12;          // stop early once the objective drops below this
  std::uint64_t seed = 12345;     // seeds the random restart perturbations
};

struct free_fit_result {
  std::vector<double> eps_star;  // optimal single-mode energies, ascending
  double e0_star = 0.0;          // ln Z_free(eps_star), the normalization shift
  double d_f = 0.0;
  long long objective_evals = 0;
  int restarts_used = 0;
  bool converged = false;
};

struct bound_check {
  bool ok = false;
  double slack = 0.0;  // 6 d_f - w_max
};

// 1/2 sum |p_(k) - q_(k)| with both lists sorted descending before pairing;
// the shorter list is zero-padded. Each input must sum to 1 within 1e-10.
double trace_distance_diagonal(const std::vector<double>& p, const std::vector<double>& q);

// Minimizes the diagonal trace distance between s and the normalized spectrum
// of a free model with N single-mode energies, via multi-start downhill
// simplex. Restart 0 starts from the single-mode energies of the subset-energy
// inversion when s is complete and labeled with N modes (zeros otherwise);
// further restarts perturb that point with Gaussian noise of scale 0.5.
free_fit_result fit_free_spectrum(const ent_spectrum& s, int n_modes, const free_fit_options& opt);

// w_max <= 6 d_f + tol; slack reported as 6 d_f - w_max.
bound_check check_bound(double w_max, double d_f, double tol = 1e-6);

// Violation report in the mode labels of a fitted free model. Levels of s are
// matched, probability-descending, with the free model's occupation patterns
// in the same order (the pairing the trace distance uses), which makes the
// effective mode numbers diagonal in the state's eigenbasis; the closest free
// state then factorizes exactly, and w_max <= 6 d_f holds as an operator-norm
// identity rather than an empirical observation. s must carry exactly
// 2^n_modes levels.
wick_report fit_label_violation(const ent_spectrum& s, const std::vector<double>& eps_star);

}  // namespace wickdist
