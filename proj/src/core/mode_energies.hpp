// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace wickdist {

// Hard cap on enumerable modes: every exact routine walks 2^N occupation patterns.
inline constexpr int k_max_modes = 20;

// Parameters of a diagonal entanglement Hamiltonian:
//   E(n) = e0 + sum_i single[i] n_i + sum_{i<j} pair[ij] n_i n_j + sum_{|S|>=3} higher[S] prod n_i.
// Sparse maps are keyed by occupation bitmask (bit i = mode i); absent key means exactly zero.
struct mode_energies {
  int n_modes = 0;
  double e0 = 0.0;
  std::vector<double> single;            // size n_modes
  std::map<std::uint32_t, double> pair;  // keys with popcount 2
  std::map<std::uint32_t, double> higher;  // keys with popcount >= 3

  explicit mode_energies(int n = 0) : n_modes(n), single(static_cast<std::size_t>(n), 0.0) {}
};

std::uint32_t pair_key(int i, int j);

// Throws invalid_argument/capacity on malformed content.
void validate(const mode_energies& m);

double pair_energy(const mode_energies& m, int i, int j);

// True when pair and higher maps carry no nonzero entry.
bool is_free(const mode_energies& m);

// Subset energy for one occupation pattern, E(mask) as defined above.
double level_energy(const mode_energies& m, std::uint32_t mask);

// All 2^N subset energies, index = occupation bitmask. O(N 2^N) subset-sum transform.
std::vector<double> level_energies(const mode_energies& m);

// Inverse transform: given all 2^N level energies (index = bitmask), recover the unique
// subset-energy expansion via Moebius inversion over the subset lattice.
mode_energies mode_energies_from_levels(const std::vector<double>& levels);

}  // namespace wickdist
