// SPDX-License-Identifier: Apache-2.0
#include "core/nelder_mead.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

#include "core/error.hpp"

namespace wickdist {

namespace {

struct vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

nm_result nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& x0, double step, const nm_options& opt) {
  require(!x0.empty(), errc::invalid_argument, "optimizer needs at least one coordinate");
  require(opt.max_evals > 0, errc::invalid_argument, "optimizer needs a positive budget");
  const std::size_t n = x0.size();

  nm_result out;
  out.evals = 0;

  auto eval = [&](const std::vector<double>& x) {
    ++out.evals;
    return f(x);
  };

  std::vector<vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n && out.evals < opt.max_evals; ++i) {
    std::vector<double> x = x0;
    x[i] += step;
    const double fx = eval(x);
    simplex.push_back({std::move(x), fx});
  }

  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const vertex& a, const vertex& b) { return a.f < b.f; });
  };

  order();
  while (out.evals < opt.max_evals && simplex.size() == n + 1) {
    if (simplex.back().f - simplex.front().f < opt.ftol) {
      out.converged = true;
      break;
    }
    // Centroid of all but the worst vertex.
    std::vector<double> c(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) c[i] += simplex[v].x[i];
    }
    for (double& ci : c) ci /= static_cast<double>(n);
    const std::vector<double>& worst = simplex.back().x;

    std::vector<double> xr(n);
    for (std::size_t i = 0; i < n; ++i) xr[i] = c[i] + (c[i] - worst[i]);
    const double fr = eval(xr);

    if (fr < simplex.front().f) {
      if (out.evals < opt.max_evals) {
        std::vector<double> xe(n);
        for (std::size_t i = 0; i < n; ++i) xe[i] = c[i] + 2.0 * (c[i] - worst[i]);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex.back() = {std::move(xe), fe};
        } else {
          simplex.back() = {std::move(xr), fr};
        }
      } else {
        simplex.back() = {std::move(xr), fr};
      }
    } else if (fr < simplex[n - 1].f) {
      simplex.back() = {std::move(xr), fr};
    } else {
      bool shrink = false;
      if (fr < simplex.back().f) {
        // Outside contraction toward the reflected point.
        std::vector<double> xc(n);
        for (std::size_t i = 0; i < n; ++i) xc[i] = c[i] + 0.5 * (xr[i] - c[i]);
        if (out.evals < opt.max_evals) {
          const double fc = eval(xc);
          if (fc <= fr) {
            simplex.back() = {std::move(xc), fc};
          } else {
            shrink = true;
          }
        } else {
          break;
        }
      } else {
        // Inside contraction toward the worst point.
        std::vector<double> xc(n);
        for (std::size_t i = 0; i < n; ++i) xc[i] = c[i] - 0.5 * (c[i] - worst[i]);
        if (out.evals < opt.max_evals) {
          const double fc = eval(xc);
          if (fc < simplex.back().f) {
            simplex.back() = {std::move(xc), fc};
          } else {
            shrink = true;
          }
        } else {
          break;
        }
      }
      if (shrink) {
        for (std::size_t v = 1; v <= n && out.evals < opt.max_evals; ++v) {
          for (std::size_t i = 0; i < n; ++i) {
            simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
          }
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
    order();
  }

  order();
  out.x = simplex.front().x;
  out.f = simplex.front().f;
  return out;
}

}  // namespace wickdist
