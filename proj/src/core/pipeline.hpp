// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/intdist.hpp"
#include "core/lattice.hpp"
#include "core/reduced.hpp"

namespace wickdist {

struct ed_options {
  int cut = 0;  // 0 means length / 2
  free_fit_options fit;
  double bound_tol = 1e-6;
};

// Full diagonalization pipeline for one model: ground state, reduced state,
// entanglement spectrum, natural orbitals, labeling, directly measured Wick
// violations, free-spectrum fit, and the bound check.
struct ed_result {
  lattice_model model;
  int cut = 0;

  double ground_energy = 0.0;
  double gap = 0.0;
  bool gap_warning = false;

  ent_spectrum spectrum;  // unlabeled, probability-descending
  int n_clamped = 0;

  natural_orbital_basis orbitals;

  bool labeling_ok = false;
  std::string labeling_message;  // failure diagnostic when !labeling_ok
  ent_spectrum labeled;          // label-ascending, valid when labeling_ok
  mode_energies recovered;   // subset-energy inversion of `labeled`
  pair_additivity additivity;  // certified mixed-difference audit of `labeled`

  wick_report direct;  // natural-orbital correlators measured on rho_A
  double full_wick_max = 0.0;
  double max_anomalous = 0.0;

  free_fit_result fit;        // free fit of `spectrum` with cut modes
  wick_report fit_label;      // violation in the fitted model's mode labels
  bound_check bound;          // fit_label.w_max <= 6 d_f + tol
};

ed_result run_ed_pipeline(const lattice_model& model, const ed_options& opt);

}  // namespace wickdist
