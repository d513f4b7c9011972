// SPDX-License-Identifier: Apache-2.0
// Exact Gibbs enumeration: partition function, occupations, and their
// thermodynamic derivative identities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "core/error.hpp"
#include "core/gibbs.hpp"
#include "core/mode_energies.hpp"

using namespace wickdist;

namespace {

mode_energies random_interacting(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  mode_energies m(n);
  for (int i = 0; i < n; ++i) m.single[static_cast<std::size_t>(i)] = single(rng);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.pair[pair_key(i, j)] = unit(rng);
  }
  return m;
}

// Independent brute-force sums straight off the level energies.
double naive_z(const mode_energies& m) {
  double z = 0.0;
  for (double e : level_energies(m)) z += std::exp(-e);
  return z;
}

double naive_occupation(const mode_energies& m, int k) {
  const std::vector<double> levels = level_energies(m);
  double acc = 0.0;
  for (std::uint32_t mask = 0; mask < levels.size(); ++mask) {
    if (mask >> k & 1u) acc += std::exp(-levels[mask]);
  }
  return acc / naive_z(m);
}

double naive_pair(const mode_energies& m, int k, int l) {
  const std::vector<double> levels = level_energies(m);
  double acc = 0.0;
  for (std::uint32_t mask = 0; mask < levels.size(); ++mask) {
    if ((mask >> k & 1u) && (mask >> l & 1u)) acc += std::exp(-levels[mask]);
  }
  return acc / naive_z(m);
}

}  // namespace

TEST_CASE("partition function and moments match brute force enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const mode_energies m = random_interacting(rng, 5);
    const double z = exact_partition_function(m);
    CHECK(std::abs(z - naive_z(m)) <= 1e-12 * z);
    for (int k = 0; k < 5; ++k) {
      CHECK(std::abs(exact_occupation(m, k) - naive_occupation(m, k)) <= 1e-12);
      for (int l = k + 1; l < 5; ++l) {
        CHECK(std::abs(exact_pair_occupation(m, k, l) - naive_pair(m, k, l)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("occupation is minus the derivative of ln Z in a mode energy") {
  std::mt19937_64 rng(42);
  const mode_energies m = random_interacting(rng, 4);
  const double h = 1e-5;
  for (int k = 0; k < 4; ++k) {
    mode_energies up = m;
    mode_energies dn = m;
    up.single[static_cast<std::size_t>(k)] += h;
    dn.single[static_cast<std::size_t>(k)] -= h;
    const double fd = -(std::log(exact_partition_function(up)) -
                        std::log(exact_partition_function(dn))) /
                      (2.0 * h);
    CHECK(std::abs(fd - exact_occupation(m, k)) <= 1e-9);
  }
}

TEST_CASE("pair occupation is minus the derivative of ln Z in a pair energy") {
  std::mt19937_64 rng(43);
  const mode_energies m = random_interacting(rng, 4);
  const double h = 1e-5;
  for (int k = 0; k < 4; ++k) {
    for (int l = k + 1; l < 4; ++l) {
      mode_energies up = m;
      mode_energies dn = m;
      up.pair[pair_key(k, l)] += h;
      dn.pair[pair_key(k, l)] -= h;
      const double fd = -(std::log(exact_partition_function(up)) -
                          std::log(exact_partition_function(dn))) /
                        (2.0 * h);
      CHECK(std::abs(fd - exact_pair_occupation(m, k, l)) <= 1e-9);
    }
  }
}

TEST_CASE("free models factorize pair occupations") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  mode_energies m(6);
  for (auto& e : m.single) e = single(rng);
  for (int k = 0; k < 6; ++k) {
    for (int l = k + 1; l < 6; ++l) {
      const double product = exact_occupation(m, k) * exact_occupation(m, l);
      CHECK(std::abs(exact_pair_occupation(m, k, l) - product) <= 1e-14);
    }
  }
}

TEST_CASE("moment queries validate their mode indices") {
  mode_energies m(2);
  m.single = {1.0, 2.0};
  CHECK_THROWS_AS(exact_occupation(m, -1), error);
  CHECK_THROWS_AS(exact_occupation(m, 2), error);
  CHECK_THROWS_AS(exact_pair_occupation(m, 0, 0), error);
  CHECK_THROWS_AS(exact_pair_occupation(m, 0, 5), error);
}
