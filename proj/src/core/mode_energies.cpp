// SPDX-License-Identifier: Apache-2.0
#include "core/mode_energies.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace wickdist {

std::uint32_t pair_key(int i, int j) {
  require(i != j, errc::invalid_argument, "pair key needs two distinct modes");
  return (1u << i) | (1u << j);
}

void validate(const mode_energies& m) {
  require(m.n_modes >= 1, errc::invalid_argument, "n_modes must be positive");
  require(m.n_modes <= k_max_modes, errc::capacity,
          "n_modes exceeds enumeration cap " + std::to_string(k_max_modes));
  require(static_cast<int>(m.single.size()) == m.n_modes, errc::invalid_argument,
          "single-mode energy count does not match n_modes");
  require_finite(m.e0, "e0");
  require_all_finite(m.single, "single-mode energy");
  const std::uint32_t full = (m.n_modes == 32) ? ~0u : ((1u << m.n_modes) - 1u);
  for (const auto& [key, value] : m.pair) {
    require(std::popcount(key) == 2, errc::invalid_argument, "pair key must have two bits set");
    require((key & ~full) == 0, errc::invalid_argument, "pair key references a mode out of range");
    require_finite(value, "pair energy");
  }
  for (const auto& [key, value] : m.higher) {
    require(std::popcount(key) >= 3, errc::invalid_argument,
            "higher-order key must have at least three bits set");
    require((key & ~full) == 0, errc::invalid_argument,
            "higher-order key references a mode out of range");
    require_finite(value, "higher-order energy");
  }
}

double pair_energy(const mode_energies& m, int i, int j) {
  auto it = m.pair.find(pair_key(i, j));
  return it == m.pair.end() ? 0.0 : it->second;
}

bool is_free(const mode_energies& m) {
  for (const auto& [key, value] : m.pair) {
    (void)key;
    if (value != 0.0) return false;
  }
  for (const auto& [key, value] : m.higher) {
    (void)key;
    if (value != 0.0) return false;
  }
  return true;
}

double level_energy(const mode_energies& m, std::uint32_t mask) {
  double e = m.e0;
  for (int i = 0; i < m.n_modes; ++i) {
    if (mask >> i & 1u) e += m.single[static_cast<std::size_t>(i)];
  }
  for (const auto& [key, value] : m.pair) {
    if ((mask & key) == key) e += value;
  }
  for (const auto& [key, value] : m.higher) {
    if ((mask & key) == key) e += value;
  }
  return e;
}

std::vector<double> level_energies(const mode_energies& m) {
  validate(m);
  const std::size_t count = std::size_t{1} << m.n_modes;
  std::vector<double> e(count, 0.0);
  e[0] = m.e0;
  for (int i = 0; i < m.n_modes; ++i) e[std::size_t{1} << i] = m.single[static_cast<std::size_t>(i)];
  for (const auto& [key, value] : m.pair) e[key] = value;
  for (const auto& [key, value] : m.higher) e[key] = value;
  // Subset-sum transform: after processing bit b, e[mask] holds the sum of all
  // stored coefficients over subsets of mask restricted to bits <= b.
  for (int b = 0; b < m.n_modes; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < count; ++mask) {
      if (mask & bit) e[mask] += e[mask ^ bit];
    }
  }
  return e;
}

mode_energies mode_energies_from_levels(const std::vector<double>& levels) {
  require(!levels.empty(), errc::invalid_argument, "level list is empty");
  require(std::has_single_bit(levels.size()), errc::malformed_spectrum,
          "level count must be a power of two");
  const int n = std::countr_zero(levels.size());
  require(n >= 1, errc::invalid_argument, "need at least one mode");
  require(n <= k_max_modes, errc::capacity, "level count exceeds enumeration cap");
  require_all_finite(levels, "level energy");

  std::vector<double> eps = levels;
  // Moebius inversion on the subset lattice, the exact inverse of the transform above.
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < eps.size(); ++mask) {
      if (mask & bit) eps[mask] -= eps[mask ^ bit];
    }
  }

  mode_energies m(n);
  m.e0 = eps[0];
  for (int i = 0; i < n; ++i) m.single[static_cast<std::size_t>(i)] = eps[std::size_t{1} << i];
  for (std::size_t mask = 0; mask < eps.size(); ++mask) {
    const int bits = std::popcount(mask);
    if (bits < 2 || eps[mask] == 0.0) continue;
    if (bits == 2) {
      m.pair[static_cast<std::uint32_t>(mask)] = eps[mask];
    } else {
      m.higher[static_cast<std::uint32_t>(mask)] = eps[mask];
    }
  }
  return m;
}

}  // namespace wickdist
