// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and runs at desk scale.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/gibbs.hpp"
#include "core/intdist.hpp"
#include "core/mode_energies.hpp"
#include "core/pipeline.hpp"
#include "core/spectrum.hpp"
#include "core/wick.hpp"

#ifndef WICKDIST_CLI_PATH
#error "WICKDIST_CLI_PATH must point at the CLI binary"
#endif

using namespace wickdist;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

mode_energies random_free(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  mode_energies m(n);
  for (auto& e : m.single) e = single(rng);
  return m;
}

// 1. Random free models factorize on every pair.
void criterion_1() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const mode_energies m = random_free(rng, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        worst = std::max(worst, violation_exact(m, i, j));
      }
    }
  }
  report(1, worst <= 1e-14,
         "free factorization, 200 instances, max violation " + fmt(worst));
}

// 2. Two-mode closed form against enumeration, the worked point, and the
// printed-form scaling identity.
void criterion_2() {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> draw(-3.0, 3.0);
  double worst_closed = 0.0;
  double worst_printed = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double e1 = draw(rng);
    const double e2 = draw(rng);
    const double e12 = draw(rng);
    mode_energies m(2);
    m.single = {e1, e2};
    m.pair[pair_key(0, 1)] = e12;
    const double exact = violation_exact(m, 0, 1);
    const double closed = violation_two_mode_closed(e1, e2, e1 + e2 + e12);
    worst_closed = std::max(worst_closed, std::abs(closed - exact));
    const double printed = violation_two_mode_closed(e1, e2, e1 + e2 + e12, true);
    const double factor = std::exp(-(e1 + e2 + e12));
    worst_printed =
        std::max(worst_printed, std::abs(printed - factor * closed) /
                                    std::max(1.0, std::abs(printed)));
  }
  const double worked = violation_two_mode_closed(1.0, 2.0, 3.5);
  const bool ok = worst_closed <= 1e-12 && worst_printed <= 1e-12 &&
                  std::abs(worked - 8.3313e-3) <= 1e-7;
  report(2, ok,
         "two-mode cross-validation, closed-vs-exact " + fmt(worst_closed) +
             ", printed identity " + fmt(worst_printed) + ", worked point " + fmt(worked));
}

// 3. Single-mode occupation formula over a wide energy range.
void criterion_3() {
  double worst = 0.0;
  for (double eps = -30.0; eps <= 30.0; eps += 0.125) {
    mode_energies m(1);
    m.single[0] = eps;
    worst = std::max(worst, std::abs(free_occupation(eps) - exact_occupation(m, 0)));
  }
  report(3, worst <= 1e-12, "single-mode formula over [-30,30], max error " + fmt(worst));
}

// 4. Perturbative violation converges at second order in the pair scale.
void criterion_4() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> single(0.5, 2.5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double lo = 1e300;
  double hi = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> base(4);
    std::vector<double> u(6);
    for (auto& b : base) b = single(rng);
    for (auto& x : u) x = unit(rng);
    auto err_at = [&](double s) {
      mode_energies m(4);
      m.single = base;
      std::size_t idx = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) m.pair[pair_key(i, j)] = s * u[idx++];
      }
      double worst = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          worst = std::max(worst, std::abs(violation_perturbative(m, i, j) -
                                          violation_exact(m, i, j)));
        }
      }
      return worst;
    };
    const std::array<double, 3> scales = {0.04, 0.02, 0.01};
    for (std::size_t k = 0; k + 1 < scales.size(); ++k) {
      const double ratio = err_at(scales[k]) / err_at(scales[k + 1]);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  report(4, lo >= 3.0 && hi <= 5.0,
         "perturbative convergence, 50 instances, error ratios in [" + fmt(lo) + ", " +
             fmt(hi) + "]");
}

// 5. Subset-energy inversion roundtrips random interacting instances.
void criterion_5() {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    mode_energies m(n);
    m.e0 = unit(rng);
    for (auto& e : m.single) e = single(rng);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) m.pair[pair_key(i, j)] = unit(rng);
    }
    if (n >= 3 && trial % 2 == 0) m.higher[0b111u] = 0.25 * unit(rng);
    const mode_energies back = spectrum_to_mode_energies(spectrum_from_mode_energies(m, false));
    worst = std::max(worst, std::abs(back.e0 - m.e0));
    const std::vector<double> a = level_energies(m);
    const std::vector<double> b = level_energies(back);
    for (std::size_t k = 0; k < a.size(); ++k) {
      worst = std::max(worst, std::abs(a[k] - b[k]));
    }
  }
  report(5, worst <= 1e-12, "subset inversion roundtrip, 100 instances, max drift " + fmt(worst));
}

// 6. The free fit reaches the free manifold and matches the grid oracle.
void criterion_6() {
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> draw(-2.0, 2.0);
  double worst_free = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    mode_energies m = random_free(rng, 5);
    const free_fit_result fit =
        fit_free_spectrum(spectrum_from_mode_energies(m, true), 5, free_fit_options{});
    worst_free = std::max(worst_free, fit.d_f);
  }

  mode_energies two(2);
  two.single = {1.0, 2.0};
  two.pair[pair_key(0, 1)] = 0.5;
  const free_fit_result fit =
      fit_free_spectrum(spectrum_from_mode_energies(two, true), 2, free_fit_options{});
  const double grid_gap = std::abs(fit.d_f - 0.009387343337632206);
  report(6, worst_free <= 1e-6 && grid_gap <= 1e-3,
         "interaction-distance recovery, free d_f " + fmt(worst_free) + ", grid-oracle gap " +
             fmt(grid_gap));
}

// 7. The 6 d_f bound: random interacting models and the full ED pipeline.
void criterion_7() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int violations = 0;
  double min_slack = 1e300;
  for (int trial = 0; trial < 500; ++trial) {
    mode_energies m(4);
    for (auto& e : m.single) e = single(rng);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) m.pair[pair_key(i, j)] = unit(rng);
    }
    const wick_report exact = compute_report(m, wick_method::exact);
    const ent_spectrum s = spectrum_from_mode_energies(m, true);
    const free_fit_result fit = fit_free_spectrum(s, 4, free_fit_options{});
    const bound_check b = check_bound(exact.w_max, fit.d_f, 1e-6);
    violations += b.ok ? 0 : 1;
    min_slack = std::min(min_slack, b.slack);
  }

  bool ed_ok = true;
  std::string ed_detail;
  for (double v : {0.0, 0.5, 1.0, 2.0}) {
    lattice_model model;
    model.length = 8;
    model.filling = 4;
    model.interaction = v;
    ed_options opt;
    opt.cut = 4;
    const ed_result r = run_ed_pipeline(model, opt);
    ed_ok = ed_ok && r.bound.ok;
    if (!ed_detail.empty()) ed_detail += " ";
    ed_detail += "V=" + fmt(v) + ":" + (r.bound.ok ? "ok" : "VIOLATED");
  }
  report(7, violations == 0 && ed_ok,
         "bound, 500 random instances, violations " + std::to_string(violations) +
             ", min slack " + fmt(min_slack) + "; ED " + ed_detail);
}

// 8. End-to-end free chain at the largest desk scale.
void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  lattice_model model;
  model.length = 12;
  model.filling = 6;
  ed_options opt;
  opt.cut = 6;
  const ed_result r = run_ed_pipeline(model, opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = r.labeling_ok && r.additivity.certified > 0 &&
                  r.additivity.max_certified < 1e-10 && r.direct.w_max <= 1e-8 &&
                  r.full_wick_max <= 1e-10 && r.fit.d_f <= 1e-4 && seconds <= 300.0;
  report(8, ok,
         "free chain L=12, certified pair energies " + fmt(r.additivity.max_certified) +
             " over " + std::to_string(r.additivity.certified) + " pairs, direct w_max " +
             fmt(r.direct.w_max) + ", full-Wick " + fmt(r.full_wick_max) + ", d_f " +
             fmt(r.fit.d_f) + ", " + fmt(seconds) + " s");
}

// 9. Byte-identical machine output across repeated seeded runs.
void criterion_9() {
  auto capture = [](const std::string& args) {
    const std::string command = std::string(WICKDIST_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string output;
    std::FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return std::string("<popen failed>");
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    pclose(pipe);
    return output;
  };

  const std::string verify_args = "verify --seed 42";
  const std::string scan_args = "ed scan --L 8 --M 4 --cut 4 --v-range 0:2:0.5 --seed 42";
  const std::string v1 = capture(verify_args);
  const std::string v2 = capture(verify_args);
  const std::string s1 = capture(scan_args);
  const std::string s2 = capture(scan_args);
  const bool ok = !v1.empty() && v1 == v2 && !s1.empty() && s1 == s2;
  report(9, ok,
         "determinism, verify " + std::to_string(v1.size()) + " bytes and scan " +
             std::to_string(s1.size()) + " bytes byte-identical across reruns");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures > 0) {
    std::printf("acceptance: FAIL (%d criteria)\n", g_failures);
    return 1;
  }
  std::printf("acceptance: PASS (9/9 criteria)\n");
  return 0;
}
