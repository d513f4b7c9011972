// SPDX-License-Identifier: Apache-2.0
#include "core/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace wickdist {

void validate(const lattice_model& model) {
  require(model.length >= 1 && model.length <= k_max_sites, errc::invalid_argument,
          "chain length must be between 1 and " + std::to_string(k_max_sites));
  require(model.filling >= 0 && model.filling <= model.length, errc::invalid_argument,
          "filling must be between 0 and the chain length");
  require_finite(model.hopping, "hopping");
  require_finite(model.interaction, "interaction");
  require_finite(model.chemical_potential, "chemical potential");
  require(binomial(model.length, model.filling) <= 100000ull, errc::capacity,
          "sector dimension exceeds the dense-diagonalization cap");
}

std::size_t sector_basis::index_of(std::uint32_t mask) const {
  auto it = std::lower_bound(states.begin(), states.end(), mask);
  require(it != states.end() && *it == mask, errc::internal, "state outside the particle sector");
  return static_cast<std::size_t>(it - states.begin());
}

sector_basis build_sector(int length, int filling) {
  sector_basis b;
  b.length = length;
  b.filling = filling;
  const std::uint32_t count = 1u << length;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) == filling) b.states.push_back(mask);
  }
  return b;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<unsigned long long>(n - i) / (i + 1);
  return c;
}

Eigen::MatrixXd build_hamiltonian(const lattice_model& model) {
  validate(model);
  const int length = model.length;
  const sector_basis basis = build_sector(length, model.filling);
  const auto dim = static_cast<Eigen::Index>(basis.states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  // Bonds (i, i+1); the periodic wrap bond is added only for length >= 3 so a
  // two-site ring does not double its single bond.
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < length; ++i) bonds.emplace_back(i, i + 1);
  if (model.boundary == boundary_kind::periodic && length >= 3) bonds.emplace_back(length - 1, 0);

  for (std::size_t s = 0; s < basis.states.size(); ++s) {
    const std::uint32_t mask = basis.states[s];
    double diag = model.chemical_potential * model.filling;
    for (const auto& [i, j] : bonds) {
      if ((mask >> i & 1u) && (mask >> j & 1u)) diag += model.interaction;
    }
    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) += diag;

    for (const auto& [i, j] : bonds) {
      // -t c+_i c_j and its conjugate, applied as annihilate-then-create.
      for (const auto& [to, from] : {std::pair{i, j}, std::pair{j, i}}) {
        if (!(mask >> from & 1u) || (mask >> to & 1u)) continue;
        std::uint32_t next = mask;
        int sign = string_sign(next, from);
        next ^= 1u << from;
        sign *= string_sign(next, to);
        next ^= 1u << to;
        const std::size_t d = basis.index_of(next);
        h(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(s)) += -model.hopping * sign;
      }
    }
  }
  return h;
}

ground_result ground_state(const Eigen::MatrixXd& h) {
  require(h.rows() == h.cols() && h.rows() >= 1, errc::invalid_argument,
          "hamiltonian must be square and nonempty");
  require((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()),
          errc::invalid_argument, "hamiltonian is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  require(solver.info() == Eigen::Success, errc::internal, "eigensolver failed");

  ground_result g;
  g.energy = solver.eigenvalues()(0);
  g.psi = solver.eigenvectors().col(0);
  if (h.rows() > 1) {
    g.gap = solver.eigenvalues()(1) - g.energy;
    g.gap_warning = g.gap < 1e-10;
  } else {
    g.gap = std::numeric_limits<double>::infinity();
  }
  for (Eigen::Index i = 0; i < g.psi.size(); ++i) {
    if (std::abs(g.psi(i)) > 1e-12) {
      if (g.psi(i) < 0.0) g.psi = -g.psi;
      break;
    }
  }
  return g;
}

}  // namespace wickdist
