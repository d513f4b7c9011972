// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "core/lattice.hpp"
#include "core/spectrum.hpp"
#include "core/wick.hpp"

namespace wickdist {

// Largest subsystem whose 2^l operator algebra we are willing to enumerate.
inline constexpr int k_max_cut_modes = 10;

inline constexpr double k_eigenvalue_floor = 1e-30;

// One particle-number block of the reduced density matrix. rho_A commutes with
// the subsystem particle number, so diagonalization proceeds per block.
struct sector_block {
  int a_number = 0;
  std::vector<std::uint32_t> basis;  // cut-bit masks with popcount a_number, ascending
  Eigen::MatrixXd rho;
  Eigen::VectorXd eigvals;  // descending, clamped to >= 0
  Eigen::MatrixXd eigvecs;  // matching columns
};

struct reduced_state {
  int sites = 0;    // full chain length
  int cut = 0;      // subsystem size (first `cut` sites)
  int filling = 0;  // total particle number
  std::vector<sector_block> blocks;  // ascending a_number, reachable sectors only
};

struct natural_orbital_basis {
  Eigen::MatrixXd corr;        // C_ij = Tr(rho_A c+_i c_j)
  Eigen::VectorXd occupations;  // descending
  Eigen::MatrixXd orbitals;     // matching columns, largest component positive
  bool degenerate = false;      // some adjacent occupations closer than 1e-10
};

// Partial trace of |psi><psi| over the sites right of the cut. The left block
// leads the Jordan-Wigner order, so no string factors cross the cut.
reduced_state reduced_density_matrix(const Eigen::VectorXd& psi, const sector_basis& basis,
                                     int cut);

// Dense 2^cut matrix assembled from the blocks (test and diagnostic use).
Eigen::MatrixXd assemble_dense(const reduced_state& rs);

double trace(const reduced_state& rs);
double purity(const reduced_state& rs);

// Unlabeled spectrum, probability-descending. Eigenvalues below the floor are
// clamped there (energy -ln floor) and flagged; unreachable particle sectors
// contribute clamped zero levels so the level count is always 2^cut.
ent_spectrum entanglement_spectrum(const reduced_state& rs, double floor = k_eigenvalue_floor);

natural_orbital_basis natural_orbitals(const reduced_state& rs);

// W_ij between natural-orbital number operators, measured directly on rho_A.
wick_report direct_wick_violation(const reduced_state& rs, const natural_orbital_basis& basis);

// |<n_i n_j> - (<n_i><n_j> - <c+_i c+_j><c_i c_j> + <c+_i c_j><c_i c+_j>)|
// in the site basis; zero for a free (Gaussian) state.
double full_wick_residual(const reduced_state& rs, int i, int j);

// max_{k<=l} |Tr(rho_A a_k a_l)| over natural-orbital pairs.
double max_anomalous_mode_correlator(const reduced_state& rs, const natural_orbital_basis& basis);

// Complete labeled spectrum: each rho_A eigenvector is assigned the occupation
// pattern of its natural-orbital mode expectations. Degenerate groups (gap
// below 1e-13) are first rotated to diagonalize sum_m 2^{-(m+1)} n_m, which
// splits every Fock degeneracy deterministically. Rounding margins at or above
// `margin` abort with ambiguous-label; duplicate patterns abort with
// label-collision. Levels are emitted label-ascending.
ent_spectrum label_spectrum(const reduced_state& rs, const natural_orbital_basis& basis,
                            double margin = 0.25);

// Probabilities below this carry no usable energy information: a dense
// eigensolve leaves absolute noise near 1e-16 on every eigenvalue, so only
// levels above ~1e-6 have -ln(lambda) trustworthy at the 1e-10 scale.
inline constexpr double k_pair_certify_floor = 1e-6;

struct pair_additivity {
  double max_certified = 0.0;  // largest |mixed difference| over certified pairs
  int certified = 0;
  int uncertified = 0;
};

// Additivity audit of a complete labeled spectrum. For each mode pair the
// energy's mixed second difference is taken at the spectator bits of the most
// probable level (for a pairwise-interaction-free spectrum it is zero no
// matter the spectators, and the dominant level keeps all four probed levels
// as large as possible). Pairs whose four probed levels all reach `floor` are
// certified; the rest are counted but excluded, their energies being
// eigensolver noise.
pair_additivity pair_additivity_check(const ent_spectrum& labeled,
                                      double floor = k_pair_certify_floor);

}  // namespace wickdist
