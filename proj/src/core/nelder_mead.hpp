// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace wickdist {

struct nm_options {
  int max_evals = 0;     // hard budget on objective evaluations
  double ftol = 1e-10;   // converged when the simplex f-spread drops below this
};

struct nm_result {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

// Downhill simplex (reflection 1, expansion 2, contraction 0.5, shrink 0.5)
// from x0 with initial per-coordinate step `step`. Deterministic: no internal
// randomness, stable ordering of equal objective values.
nm_result nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& x0, double step, const nm_options& opt);

}  // namespace wickdist
