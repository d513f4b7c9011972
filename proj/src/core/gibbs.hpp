// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/mode_energies.hpp"

namespace wickdist {

// Brute-force Gibbs expectations by full enumeration over the 2^N occupation
// patterns. Weights are shifted by the minimum level energy before summation
// and accumulated with compensated sums in bitmask-ascending order.

double exact_partition_function(const mode_energies& m);

// <n_k>, zero-based mode index.
double exact_occupation(const mode_energies& m, int k);

// <n_k n_l>, k != l, symmetric.
double exact_pair_occupation(const mode_energies& m, int k, int l);

}  // namespace wickdist
