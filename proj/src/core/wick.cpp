// SPDX-License-Identifier: Apache-2.0
#include "core/wick.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/gibbs.hpp"
#include "core/numeric.hpp"

namespace wickdist {

namespace {

void require_mode(const mode_energies& m, int k) {
  require(k >= 0 && k < m.n_modes, errc::invalid_argument,
          "mode index " + std::to_string(k) + " out of range");
}

void require_two_body(const mode_energies& m) {
  for (const auto& [key, value] : m.higher) {
    (void)key;
    require(value == 0.0, errc::unsupported_model,
            "perturbative formulas support two-body interactions only");
  }
}

// Sum of pair couplings fully inside `occupied`, excluding any pair touching a
// mode in `excluded`.
double spectator_coupling(const mode_energies& m, std::uint32_t occupied, std::uint32_t excluded) {
  double c = 0.0;
  for (const auto& [key, value] : m.pair) {
    if ((key & excluded) == 0 && (key & occupied) == key) c += value;
  }
  return c;
}

// Sum of pair couplings joining mode k to an occupied spectator.
double cross_coupling(const mode_energies& m, std::uint32_t occupied, int k) {
  const std::uint32_t kbit = 1u << k;
  double c = 0.0;
  for (const auto& [key, value] : m.pair) {
    if ((key & kbit) && ((key & ~kbit) & occupied) == (key & ~kbit)) c += value;
  }
  return c;
}

double spectator_weight(const mode_energies& m, std::uint32_t occupied) {
  double e = 0.0;
  for (int i = 0; i < m.n_modes; ++i) {
    if (occupied >> i & 1u) e += m.single[static_cast<std::size_t>(i)];
  }
  return std::exp(-e);
}

}  // namespace

double wick_report::pair(int i, int j) const {
  require(i != j, errc::invalid_argument, "pair lookup needs distinct modes");
  if (i > j) std::swap(i, j);
  require(i >= 0 && j < n_modes, errc::invalid_argument, "pair lookup out of range");
  return pairwise[pair_index(n_modes, i, j)];
}

std::size_t wick_report::pair_index(int n_modes, int i, int j) {
  return static_cast<std::size_t>(i) * n_modes - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

double violation_exact(const mode_energies& m, int i, int j) {
  require_mode(m, i);
  require_mode(m, j);
  require(i != j, errc::invalid_argument, "violation needs distinct modes");
  return std::abs(exact_pair_occupation(m, i, j) - exact_occupation(m, i) * exact_occupation(m, j));
}

double violation_two_mode_closed(double e1, double e2, double e12, bool as_printed) {
  require_finite(e1, "E1");
  require_finite(e2, "E2");
  require_finite(e12, "E12");
  if (as_printed) {
    const double d = 1.0 + std::exp(e12 - e1) + std::exp(e12 - e2) + std::exp(e12);
    return std::abs(1.0 - std::exp(e12 - e1 - e2)) / (d * d);
  }
  const double z = 1.0 + std::exp(-e1) + std::exp(-e2) + std::exp(-e12);
  return std::abs(std::exp(-e12) - std::exp(-e1 - e2)) / (z * z);
}

double perturbative_occupation(const mode_energies& m, int k) {
  validate(m);
  require_mode(m, k);
  require_two_body(m);
  const std::uint32_t kbit = 1u << k;
  const std::size_t count = std::size_t{1} << m.n_modes;
  // First-order partition function: Z = S0 + e^{-eps_k} S1 where S0 sums the
  // n_k = 0 patterns and S1 the n_k = 1 patterns, each expanded to first order
  // in the pair couplings over the spectator modes.
  compensated_sum s0, s1;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (mask & kbit) continue;
    const auto occupied = static_cast<std::uint32_t>(mask);
    const double w = spectator_weight(m, occupied);
    const double cp = spectator_coupling(m, occupied, kbit);
    const double ck = cross_coupling(m, occupied, k);
    s0.add(w * (1.0 - cp));
    s1.add(w * (1.0 - cp - ck));
  }
  const double ek = std::exp(-m.single[static_cast<std::size_t>(k)]);
  return ek * s1.value() / (s0.value() + ek * s1.value());
}

double perturbative_pair_occupation(const mode_energies& m, int k, int l) {
  validate(m);
  require_mode(m, k);
  require_mode(m, l);
  require(k != l, errc::invalid_argument, "pair occupation needs distinct modes");
  require_two_body(m);
  const std::uint32_t kbit = 1u << k;
  const std::uint32_t lbit = 1u << l;
  const double ek = std::exp(-m.single[static_cast<std::size_t>(k)]);
  const double el = std::exp(-m.single[static_cast<std::size_t>(l)]);
  const double eps_kl = pair_energy(m, k, l);
  const std::size_t count = std::size_t{1} << m.n_modes;
  // Four-block first-order partition function over (n_k, n_l) in
  // {00, 10, 01, 11}; the numerator is the doubly occupied block, i.e. the
  // first-order expansion of -dZ/d eps_kl. Truncating its bracket to 1 would
  // reintroduce a first-order error in the violation.
  compensated_sum z, num;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (mask & (kbit | lbit)) continue;
    const auto occupied = static_cast<std::uint32_t>(mask);
    const double w = spectator_weight(m, occupied);
    const double cp = spectator_coupling(m, occupied, kbit | lbit);
    const double ck = cross_coupling(m, occupied, k);
    const double cl = cross_coupling(m, occupied, l);
    const double b11 = ek * el * w * (1.0 - eps_kl - cp - ck - cl);
    z.add(w * (1.0 - cp));
    z.add(ek * w * (1.0 - cp - ck));
    z.add(el * w * (1.0 - cp - cl));
    z.add(b11);
    num.add(b11);
  }
  return num.value() / z.value();
}

double violation_perturbative(const mode_energies& m, int i, int j) {
  return std::abs(perturbative_pair_occupation(m, i, j) -
                  perturbative_occupation(m, i) * perturbative_occupation(m, j));
}

wick_report compute_report(const mode_energies& m, wick_method method, bool as_printed) {
  validate(m);
  require(method != wick_method::direct_correlator, errc::invalid_argument,
          "direct correlator reports come from the diagonalization pipeline");
  wick_report r;
  r.n_modes = m.n_modes;
  r.method = method;
  r.pairwise.assign(static_cast<std::size_t>(m.n_modes) * (m.n_modes - 1) / 2, 0.0);
  if (method == wick_method::two_mode_closed) {
    require(m.n_modes == 2, errc::invalid_argument, "closed form requires exactly two modes");
  }
  for (int i = 0; i < m.n_modes; ++i) {
    for (int j = i + 1; j < m.n_modes; ++j) {
      double w = 0.0;
      switch (method) {
        case wick_method::exact:
          w = violation_exact(m, i, j);
          break;
        case wick_method::two_mode_closed:
          w = violation_two_mode_closed(m.single[0], m.single[1],
                                        m.single[0] + m.single[1] + pair_energy(m, 0, 1),
                                        as_printed);
          break;
        case wick_method::perturbative:
          w = violation_perturbative(m, i, j);
          break;
        case wick_method::direct_correlator:
          break;
      }
      r.pairwise[wick_report::pair_index(m.n_modes, i, j)] = w;
    }
  }
  r.w_max = r.pairwise.empty() ? 0.0 : *std::max_element(r.pairwise.begin(), r.pairwise.end());
  return r;
}

}  // namespace wickdist
