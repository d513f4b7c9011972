// SPDX-License-Identifier: Apache-2.0
#include "core/intdist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "core/error.hpp"
#include "core/nelder_mead.hpp"
#include "core/numeric.hpp"

namespace wickdist {

namespace {

void require_normalized(const std::vector<double>& p, const char* name) {
  compensated_sum s;
  for (double x : p) {
    require(std::isfinite(x) && x >= 0.0, errc::invalid_argument,
            std::string(name) + " has a negative or non-finite entry");
    s.add(x);
  }
  require(std::abs(s.value() - 1.0) <= 1e-10, errc::invalid_argument,
          std::string(name) + " does not sum to 1");
}

// Objective for the free fit: distance from the fixed sorted target to the
// normalized free spectrum of eps. Buffers are reused across evaluations.
class free_distance {
 public:
  free_distance(std::vector<double> target_sorted, int n_modes)
      : target_(std::move(target_sorted)),
        count_(std::size_t{1} << n_modes),
        energy_(count_),
        q_(count_) {}

  double operator()(const std::vector<double>& eps) {
    // Additive level energies; the minimum is the sum of the negative parts.
    double shift = 0.0;
    for (double e : eps) shift += std::min(e, 0.0);
    energy_[0] = 0.0;
    for (std::size_t mask = 1; mask < count_; ++mask) {
      energy_[mask] = energy_[mask & (mask - 1)] + eps[static_cast<std::size_t>(std::countr_zero(mask))];
    }
    double z = 0.0;
    for (std::size_t mask = 0; mask < count_; ++mask) {
      q_[mask] = std::exp(-(energy_[mask] - shift));
      z += q_[mask];
    }
    for (double& q : q_) q /= z;
    std::sort(q_.begin(), q_.end(), std::greater<double>());
    // target_ is at least as long as q_; levels past 2^N pair with zero.
    double dist = 0.0;
    std::size_t k = 0;
    for (; k < count_; ++k) dist += std::abs(target_[k] - q_[k]);
    for (; k < target_.size(); ++k) dist += target_[k];
    return 0.5 * dist;
  }

 private:
  std::vector<double> target_;
  std::size_t count_;
  std::vector<double> energy_;
  std::vector<double> q_;
};

}  // namespace

double trace_distance_diagonal(const std::vector<double>& p, const std::vector<double>& q) {
  require(!p.empty() && !q.empty(), errc::invalid_argument, "probability list is empty");
  require_normalized(p, "first probability list");
  require_normalized(q, "second probability list");
  std::vector<double> ps = p;
  std::vector<double> qs = q;
  const std::size_t len = std::max(ps.size(), qs.size());
  ps.resize(len, 0.0);
  qs.resize(len, 0.0);
  std::sort(ps.begin(), ps.end(), std::greater<double>());
  std::sort(qs.begin(), qs.end(), std::greater<double>());
  compensated_sum dist;
  for (std::size_t k = 0; k < len; ++k) dist.add(std::abs(ps[k] - qs[k]));
  return 0.5 * dist.value();
}

free_fit_result fit_free_spectrum(const ent_spectrum& s, int n_modes, const free_fit_options& opt) {
  require(n_modes >= 1 && n_modes <= k_max_modes, errc::capacity,
          "mode count out of range for the free fit");
  require(!s.levels.empty(), errc::invalid_argument, "spectrum has no levels");
  require(opt.restarts >= 1, errc::invalid_argument, "need at least one restart");
  std::vector<double> p;
  p.reserve(s.levels.size());
  for (const auto& lv : s.levels) p.push_back(lv.probability);
  require_normalized(p, "spectrum probabilities");

  const std::size_t count = std::size_t{1} << n_modes;
  std::sort(p.begin(), p.end(), std::greater<double>());
  if (p.size() < count) p.resize(count, 0.0);
  free_distance objective(std::move(p), n_modes);

  // Base point: single-mode energies of the subset-energy inversion when the
  // input is a complete labeled spectrum over the same mode count.
  std::vector<double> base(static_cast<std::size_t>(n_modes), 0.0);
  if (s.n_modes == n_modes) {
    try {
      base = spectrum_to_mode_energies(s).single;
    } catch (const error&) {
      // unlabeled or incomplete: keep zeros
    }
  }

  const int budget = opt.max_evals_per_restart > 0 ? opt.max_evals_per_restart : 200 * n_modes;
  nm_options nm;
  nm.max_evals = budget;
  nm.ftol = opt.ftol;

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> noise(0.0, 0.5);

  free_fit_result out;
  bool have_best = false;
  nm_result best;
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x0 = base;
    if (r > 0) {
      for (double& x : x0) x += noise(rng);
    }
    nm_result res = nelder_mead_minimize(std::ref(objective), x0, 0.5, nm);
    out.objective_evals += res.evals;
    ++out.restarts_used;
    if (!have_best || res.f < best.f) {
      best = res;
      have_best = true;
    }
    if (best.f <= opt.target) break;
  }

  std::sort(best.x.begin(), best.x.end());
  out.eps_star = best.x;
  out.d_f = best.f;
  out.converged = best.converged;
  // Normalization shift of the fitted free spectrum: E0 = ln Z_free.
  double ln_z = 0.0;
  for (double e : out.eps_star) {
    ln_z += e < 0.0 ? -e + std::log1p(std::exp(e)) : std::log1p(std::exp(-e));
  }
  out.e0_star = ln_z;
  return out;
}

wick_report fit_label_violation(const ent_spectrum& s, const std::vector<double>& eps_star) {
  const int n = static_cast<int>(eps_star.size());
  require(n >= 1 && n <= k_max_modes, errc::invalid_argument, "fitted mode count out of range");
  require_all_finite(eps_star, "eps_star");
  const std::size_t count = std::size_t{1} << n;
  require(s.levels.size() == count, errc::invalid_argument,
          "spectrum must carry one level per occupation pattern of the fitted model");

  // State levels in trace-distance order: probability descending, stable.
  std::vector<std::size_t> by_weight(count);
  std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](std::size_t a, std::size_t b) {
    return s.levels[a].probability > s.levels[b].probability;
  });

  // Free-model patterns in the same order: additive energy ascending, which is
  // Gibbs weight descending, with the mask as a deterministic tie-break.
  std::vector<double> additive(count, 0.0);
  for (std::size_t mask = 0; mask < count; ++mask) {
    compensated_sum e;
    for (int m = 0; m < n; ++m) {
      if ((mask >> m) & 1u) e.add(eps_star[static_cast<std::size_t>(m)]);
    }
    additive[mask] = e.value();
  }
  std::vector<std::uint32_t> pattern(count);
  std::iota(pattern.begin(), pattern.end(), std::uint32_t{0});
  std::stable_sort(pattern.begin(), pattern.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (additive[a] != additive[b]) return additive[a] < additive[b];
    return a < b;
  });

  // The matched pairing makes the effective mode numbers diagonal in the
  // state's eigenbasis, so correlators are plain weighted sums over levels.
  std::vector<compensated_sum> occ(static_cast<std::size_t>(n));
  std::vector<compensated_sum> pair(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (std::size_t k = 0; k < count; ++k) {
    const double w = s.levels[by_weight[k]].probability;
    const std::uint32_t bits = pattern[k];
    for (int i = 0; i < n; ++i) {
      if (((bits >> i) & 1u) == 0u) continue;
      occ[static_cast<std::size_t>(i)].add(w);
      for (int j = i + 1; j < n; ++j) {
        if ((bits >> j) & 1u) pair[wick_report::pair_index(n, i, j)].add(w);
      }
    }
  }

  wick_report r;
  r.n_modes = n;
  r.method = wick_method::direct_correlator;
  r.pairwise.resize(pair.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::size_t idx = wick_report::pair_index(n, i, j);
      const double oi = occ[static_cast<std::size_t>(i)].value();
      const double oj = occ[static_cast<std::size_t>(j)].value();
      r.pairwise[idx] = std::abs(pair[idx].value() - oi * oj);
      r.w_max = std::max(r.w_max, r.pairwise[idx]);
    }
  }
  return r;
}

bound_check check_bound(double w_max, double d_f, double tol) {
  require(w_max >= 0.0 && d_f >= 0.0, errc::invalid_argument,
          "bound check needs nonnegative inputs");
  require_finite(w_max, "w_max");
  require_finite(d_f, "d_f");
  bound_check b;
  b.slack = 6.0 * d_f - w_max;
  b.ok = w_max <= 6.0 * d_f + tol;
  return b;
}

}  // namespace wickdist
