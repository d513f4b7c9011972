// SPDX-License-Identifier: Apache-2.0
#include "core/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace wickdist {

namespace {

void require_mode(const mode_energies& m, int k) {
  require(k >= 0 && k < m.n_modes, errc::invalid_argument,
          "mode index " + std::to_string(k) + " out of range");
}

// Shifted weights e^{-(E(n) - E_min)} and the shift itself.
struct weight_table {
  std::vector<double> w;
  double e_min;
};

weight_table weights(const mode_energies& m) {
  std::vector<double> energies = level_energies(m);
  weight_table t;
  t.e_min = *std::min_element(energies.begin(), energies.end());
  t.w.reserve(energies.size());
  for (double e : energies) t.w.push_back(std::exp(-(e - t.e_min)));
  return t;
}

}  // namespace

double exact_partition_function(const mode_energies& m) {
  const weight_table t = weights(m);
  compensated_sum z;
  for (double w : t.w) z.add(w);
  return std::exp(-t.e_min) * z.value();
}

double exact_occupation(const mode_energies& m, int k) {
  const weight_table t = weights(m);
  require_mode(m, k);
  compensated_sum z, zk;
  for (std::size_t mask = 0; mask < t.w.size(); ++mask) {
    z.add(t.w[mask]);
    if (mask >> k & 1u) zk.add(t.w[mask]);
  }
  return zk.value() / z.value();
}

double exact_pair_occupation(const mode_energies& m, int k, int l) {
  const weight_table t = weights(m);
  require_mode(m, k);
  require_mode(m, l);
  require(k != l, errc::invalid_argument,
          "pair occupation needs distinct modes (n^2 = n on a single mode)");
  compensated_sum z, zkl;
  for (std::size_t mask = 0; mask < t.w.size(); ++mask) {
    z.add(t.w[mask]);
    if ((mask >> k & 1u) && (mask >> l & 1u)) zkl.add(t.w[mask]);
  }
  return zkl.value() / z.value();
}

}  // namespace wickdist
