// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace wickdist {

// Neumaier-compensated accumulator. Deterministic for a fixed add order.
class compensated_sum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline void require_finite(double x, const char* what) {
  require(std::isfinite(x), errc::invalid_argument, std::string(what) + " must be finite");
}

inline void require_all_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) require_finite(x, what);
}

}  // namespace wickdist
