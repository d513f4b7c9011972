// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <vector>

namespace wickdist {

inline constexpr int k_max_sites = 14;

enum class boundary_kind { open = 0, periodic = 1 };

// Spinless fermions on a chain, fixed particle number:
//   H = -t sum_<ij> (c+_i c_j + h.c.) + V sum_<ij> n_i n_j + mu sum_i n_i.
struct lattice_model {
  int length = 8;
  int filling = 4;
  double hopping = 1.0;
  double interaction = 0.0;
  double chemical_potential = 0.0;
  boundary_kind boundary = boundary_kind::open;
};

void validate(const lattice_model& model);

// All length-bit masks with the given popcount, ascending. Site i is bit i;
// the mode order of the Jordan-Wigner strings follows the bit order.
struct sector_basis {
  int length = 0;
  int filling = 0;
  std::vector<std::uint32_t> states;

  std::size_t index_of(std::uint32_t mask) const;
};

sector_basis build_sector(int length, int filling);

unsigned long long binomial(int n, int k);

// Fermionic sign for acting at `site`: parity of the occupied modes below it.
inline int string_sign(std::uint32_t mask, int site) {
  return (std::popcount(mask & ((1u << site) - 1u)) & 1) ? -1 : 1;
}

Eigen::MatrixXd build_hamiltonian(const lattice_model& model);

struct ground_result {
  double energy = 0.0;
  Eigen::VectorXd psi;
  double gap = 0.0;  // +inf for a one-dimensional sector
  bool gap_warning = false;
};

// Lowest eigenpair with a deterministic phase: the first amplitude above
// 1e-12 in basis order is made positive.
ground_result ground_state(const Eigen::MatrixXd& h);

}  // namespace wickdist
