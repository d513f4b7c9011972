// SPDX-License-Identifier: Apache-2.0
#include "core/reduced.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace wickdist {

namespace {

// mask -> position tables for every popcount sector of a cut-bit Fock space.
struct fock_index {
  int cut = 0;
  std::vector<std::vector<std::uint32_t>> basis_by_k;
  std::vector<std::vector<std::int32_t>> pos_by_k;
};

fock_index build_fock_index(int cut) {
  fock_index fi;
  fi.cut = cut;
  const std::uint32_t count = 1u << cut;
  fi.basis_by_k.resize(static_cast<std::size_t>(cut) + 1);
  fi.pos_by_k.assign(static_cast<std::size_t>(cut) + 1,
                     std::vector<std::int32_t>(count, -1));
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    fi.pos_by_k[k][mask] = static_cast<std::int32_t>(fi.basis_by_k[k].size());
    fi.basis_by_k[k].push_back(mask);
  }
  return fi;
}

void require_valid(const reduced_state& rs) {
  require(rs.cut >= 1 && rs.cut < rs.sites, errc::invalid_argument, "invalid cut");
  require(!rs.blocks.empty(), errc::invalid_argument, "reduced state has no blocks");
}

void require_cut_capacity(const reduced_state& rs) {
  require(rs.cut <= k_max_cut_modes, errc::capacity,
          "subsystem operator algebra exceeds " + std::to_string(k_max_cut_modes) + " modes");
}

// w = (sum_j phi(j) c_j) v, mapping the a_number-k sector to k-1.
void apply_annihilator(const fock_index& fi, int k, const Eigen::VectorXd& phi,
                       const Eigen::VectorXd& v, Eigen::VectorXd& w) {
  const auto& basis = fi.basis_by_k[static_cast<std::size_t>(k)];
  const auto& pos_lo = fi.pos_by_k[static_cast<std::size_t>(k) - 1];
  w.setZero();
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const std::uint32_t mask = basis[p];
    const double amp = v(static_cast<Eigen::Index>(p));
    if (amp == 0.0) continue;
    for (int j = 0; j < fi.cut; ++j) {
      if (!(mask >> j & 1u)) continue;
      const double s = string_sign(mask, j);
      w(pos_lo[mask ^ (1u << j)]) += phi(j) * s * amp;
    }
  }
}

// u = (sum_i phi(i) c+_i) w, mapping the k-1 sector back to k.
void apply_creator(const fock_index& fi, int k, const Eigen::VectorXd& phi,
                   const Eigen::VectorXd& w, Eigen::VectorXd& u) {
  const auto& basis_lo = fi.basis_by_k[static_cast<std::size_t>(k) - 1];
  const auto& pos_hi = fi.pos_by_k[static_cast<std::size_t>(k)];
  u.setZero();
  for (std::size_t p = 0; p < basis_lo.size(); ++p) {
    const std::uint32_t mask = basis_lo[p];
    const double amp = w(static_cast<Eigen::Index>(p));
    if (amp == 0.0) continue;
    for (int i = 0; i < fi.cut; ++i) {
      if (mask >> i & 1u) continue;
      const double s = string_sign(mask, i);
      u(pos_hi[mask | (1u << i)]) += phi(i) * s * amp;
    }
  }
}

// u = n_mode v within one particle sector, via the rank-1 factorization
// n = (sum_i phi(i) c+_i)(sum_j phi(j) c_j).
void apply_mode_number(const fock_index& fi, int k, const Eigen::VectorXd& phi,
                       const Eigen::VectorXd& v, Eigen::VectorXd& scratch, Eigen::VectorXd& u) {
  if (k == 0) {
    u.setZero();
    return;
  }
  scratch.resize(static_cast<Eigen::Index>(fi.basis_by_k[static_cast<std::size_t>(k) - 1].size()));
  apply_annihilator(fi, k, phi, v, scratch);
  u.resize(v.size());
  apply_creator(fi, k, phi, scratch, u);
}

// <v| c+_i c_j |v> for all site pairs, one sweep over the sector basis.
Eigen::MatrixXd one_body_matrix(const fock_index& fi, int k, const Eigen::VectorXd& v) {
  const auto& basis = fi.basis_by_k[static_cast<std::size_t>(k)];
  const auto& pos = fi.pos_by_k[static_cast<std::size_t>(k)];
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(fi.cut, fi.cut);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const std::uint32_t mask = basis[p];
    const double amp = v(static_cast<Eigen::Index>(p));
    if (amp == 0.0) continue;
    for (int j = 0; j < fi.cut; ++j) {
      if (!(mask >> j & 1u)) continue;
      std::uint32_t mid = mask;
      double s = string_sign(mid, j);
      mid ^= 1u << j;
      for (int i = 0; i < fi.cut; ++i) {
        if (mid >> i & 1u) continue;
        const double s2 = s * string_sign(mid, i);
        c(i, j) += v(pos[mid | (1u << i)]) * s2 * amp;
      }
    }
  }
  return c;
}

struct elementary_op {
  int site;
  bool dagger;
};

// Expectation of a product of elementary site operators on rho_A, evaluated on
// full 2^cut vectors with the rightmost operator applied first. Sectors the
// product leaves are handled naturally: the final overlap is zero.
double product_expectation(const reduced_state& rs, const std::vector<elementary_op>& ops) {
  const std::uint32_t count = 1u << rs.cut;
  std::vector<double> full(count), work(count), next(count);
  compensated_sum acc;
  for (const auto& block : rs.blocks) {
    for (Eigen::Index e = 0; e < block.eigvals.size(); ++e) {
      const double lambda = block.eigvals(e);
      if (lambda == 0.0) continue;
      std::fill(full.begin(), full.end(), 0.0);
      for (std::size_t p = 0; p < block.basis.size(); ++p) {
        full[block.basis[p]] = block.eigvecs(static_cast<Eigen::Index>(p), e);
      }
      work = full;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        const std::uint32_t bit = 1u << it->site;
        for (std::uint32_t mask = 0; mask < count; ++mask) {
          const double amp = work[mask];
          if (amp == 0.0) continue;
          if (it->dagger ? (mask & bit) : !(mask & bit)) continue;
          next[mask ^ bit] += string_sign(mask, it->site) * amp;
        }
        work.swap(next);
      }
      double dot = 0.0;
      for (std::uint32_t mask = 0; mask < count; ++mask) dot += full[mask] * work[mask];
      acc.add(lambda * dot);
    }
  }
  return acc.value();
}

void fix_phase_col(Eigen::MatrixXd& m, Eigen::Index col) {
  Eigen::Index best = 0;
  double mag = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, col)) > mag) {
      mag = std::abs(m(i, col));
      best = i;
    }
  }
  if (m(best, col) < 0.0) m.col(col) = -m.col(col);
}

}  // namespace

reduced_state reduced_density_matrix(const Eigen::VectorXd& psi, const sector_basis& basis,
                                     int cut) {
  require(static_cast<std::size_t>(psi.size()) == basis.states.size(), errc::invalid_argument,
          "state vector does not match the sector basis");
  require(cut >= 1 && cut < basis.length, errc::invalid_argument,
          "cut must keep at least one site on each side");
  require(std::abs(psi.squaredNorm() - 1.0) <= 1e-12, errc::invalid_argument,
          "state vector must be normalized");

  reduced_state rs;
  rs.sites = basis.length;
  rs.cut = cut;
  rs.filling = basis.filling;

  const int rest = basis.length - cut;
  const int k_min = std::max(0, basis.filling - rest);
  const int k_max = std::min(cut, basis.filling);
  require(k_min <= k_max, errc::internal, "empty particle sector decomposition");

  const fock_index fi = build_fock_index(cut);
  for (int k = k_min; k <= k_max; ++k) {
    sector_block b;
    b.a_number = k;
    b.basis = fi.basis_by_k[static_cast<std::size_t>(k)];
    b.rho = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b.basis.size()),
                                  static_cast<Eigen::Index>(b.basis.size()));
    rs.blocks.push_back(std::move(b));
  }
  auto block_of = [&](int k) -> sector_block& {
    return rs.blocks[static_cast<std::size_t>(k - k_min)];
  };

  // Group amplitudes by the environment mask; each group feeds one block.
  const std::uint32_t a_mask = (1u << cut) - 1u;
  std::vector<std::vector<std::pair<std::int32_t, double>>> groups(std::size_t{1} << rest);
  for (std::size_t s = 0; s < basis.states.size(); ++s) {
    const std::uint32_t mask = basis.states[s];
    const std::uint32_t a = mask & a_mask;
    const std::uint32_t b = mask >> cut;
    groups[b].emplace_back(fi.pos_by_k[static_cast<std::size_t>(std::popcount(a))][a],
                           psi(static_cast<Eigen::Index>(s)));
  }
  for (std::size_t b = 0; b < groups.size(); ++b) {
    const auto& g = groups[b];
    if (g.empty()) continue;
    const int k = basis.filling - std::popcount(static_cast<std::uint32_t>(b));
    Eigen::MatrixXd& rho = block_of(k).rho;
    for (const auto& [p1, v1] : g) {
      for (const auto& [p2, v2] : g) rho(p1, p2) += v1 * v2;
    }
  }

  require(std::abs(trace(rs) - 1.0) <= 1e-12, errc::internal, "reduced state trace is not 1");

  for (auto& block : rs.blocks) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.rho);
    require(solver.info() == Eigen::Success, errc::internal, "block eigensolver failed");
    const Eigen::Index dim = solver.eigenvalues().size();
    block.eigvals.resize(dim);
    block.eigvecs.resize(dim, dim);
    for (Eigen::Index e = 0; e < dim; ++e) {
      double lambda = solver.eigenvalues()(dim - 1 - e);
      require(lambda >= -1e-12, errc::internal, "reduced state is not positive semidefinite");
      block.eigvals(e) = std::max(lambda, 0.0);
      block.eigvecs.col(e) = solver.eigenvectors().col(dim - 1 - e);
    }
  }
  return rs;
}

Eigen::MatrixXd assemble_dense(const reduced_state& rs) {
  require_valid(rs);
  require(rs.cut <= 12, errc::capacity, "dense assembly capped at 12 modes");
  const auto count = static_cast<Eigen::Index>(std::size_t{1} << rs.cut);
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(count, count);
  for (const auto& block : rs.blocks) {
    for (std::size_t p = 0; p < block.basis.size(); ++p) {
      for (std::size_t q = 0; q < block.basis.size(); ++q) {
        rho(block.basis[p], block.basis[q]) =
            block.rho(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
      }
    }
  }
  return rho;
}

double trace(const reduced_state& rs) {
  compensated_sum t;
  for (const auto& block : rs.blocks) {
    for (Eigen::Index i = 0; i < block.rho.rows(); ++i) t.add(block.rho(i, i));
  }
  return t.value();
}

double purity(const reduced_state& rs) {
  compensated_sum t;
  for (const auto& block : rs.blocks) {
    for (Eigen::Index e = 0; e < block.eigvals.size(); ++e) {
      t.add(block.eigvals(e) * block.eigvals(e));
    }
  }
  return t.value();
}

ent_spectrum entanglement_spectrum(const reduced_state& rs, double floor) {
  require_valid(rs);
  require(floor > 0.0, errc::invalid_argument, "eigenvalue floor must be positive");

  struct entry {
    double lambda;
    int block;
    int index;
  };
  std::vector<entry> entries;
  for (std::size_t b = 0; b < rs.blocks.size(); ++b) {
    for (Eigen::Index e = 0; e < rs.blocks[b].eigvals.size(); ++e) {
      entries.push_back({rs.blocks[b].eigvals(e), static_cast<int>(b), static_cast<int>(e)});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const entry& a, const entry& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    if (a.block != b.block) return a.block < b.block;
    return a.index < b.index;
  });

  ent_spectrum s;
  s.n_modes = rs.cut;
  s.normalized = true;
  for (const auto& en : entries) {
    spectrum_level lv;
    lv.clamped = en.lambda < floor;
    lv.probability = std::max(en.lambda, floor);
    lv.energy = -std::log(lv.probability);
    s.levels.push_back(lv);
  }
  // Unreachable particle sectors contribute exact-zero eigenvalues.
  const std::size_t missing = (std::size_t{1} << rs.cut) - entries.size();
  for (std::size_t i = 0; i < missing; ++i) {
    spectrum_level lv;
    lv.clamped = true;
    lv.probability = floor;
    lv.energy = -std::log(floor);
    s.levels.push_back(lv);
  }
  return s;
}

natural_orbital_basis natural_orbitals(const reduced_state& rs) {
  require_valid(rs);
  require_cut_capacity(rs);
  const fock_index fi = build_fock_index(rs.cut);
  Eigen::MatrixXd corr = Eigen::MatrixXd::Zero(rs.cut, rs.cut);
  for (const auto& block : rs.blocks) {
    const auto& pos = fi.pos_by_k[static_cast<std::size_t>(block.a_number)];
    for (std::size_t p = 0; p < block.basis.size(); ++p) {
      const std::uint32_t mask = block.basis[p];
      for (int j = 0; j < rs.cut; ++j) {
        if (!(mask >> j & 1u)) continue;
        std::uint32_t mid = mask;
        double s = string_sign(mid, j);
        mid ^= 1u << j;
        for (int i = 0; i < rs.cut; ++i) {
          if (mid >> i & 1u) continue;
          const double s2 = s * string_sign(mid, i);
          corr(i, j) += block.rho(static_cast<Eigen::Index>(p), pos[mid | (1u << i)]) * s2;
        }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(corr);
  require(solver.info() == Eigen::Success, errc::internal, "correlation eigensolver failed");
  natural_orbital_basis nb;
  nb.corr = corr;
  const Eigen::Index n = corr.rows();
  nb.occupations.resize(n);
  nb.orbitals.resize(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    nb.occupations(m) = solver.eigenvalues()(n - 1 - m);
    nb.orbitals.col(m) = solver.eigenvectors().col(n - 1 - m);
    fix_phase_col(nb.orbitals, m);
  }
  for (Eigen::Index m = 0; m + 1 < n; ++m) {
    if (std::abs(nb.occupations(m) - nb.occupations(m + 1)) < 1e-10) nb.degenerate = true;
  }
  return nb;
}

wick_report direct_wick_violation(const reduced_state& rs, const natural_orbital_basis& basis) {
  require_valid(rs);
  require_cut_capacity(rs);
  const int n = rs.cut;
  wick_report r;
  r.n_modes = n;
  r.method = wick_method::direct_correlator;
  r.pairwise.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  if (n < 2) return r;

  const fock_index fi = build_fock_index(n);
  std::vector<compensated_sum> occ(static_cast<std::size_t>(n));
  std::vector<compensated_sum> pair_occ(r.pairwise.size());
  std::vector<Eigen::VectorXd> u(static_cast<std::size_t>(n));
  Eigen::VectorXd scratch;

  for (const auto& block : rs.blocks) {
    for (Eigen::Index e = 0; e < block.eigvals.size(); ++e) {
      const double lambda = block.eigvals(e);
      if (lambda == 0.0) continue;
      const Eigen::VectorXd v = block.eigvecs.col(e);
      for (int m = 0; m < n; ++m) {
        apply_mode_number(fi, block.a_number, basis.orbitals.col(m), v, scratch,
                          u[static_cast<std::size_t>(m)]);
      }
      for (int i = 0; i < n; ++i) {
        occ[static_cast<std::size_t>(i)].add(lambda * v.dot(u[static_cast<std::size_t>(i)]));
        for (int j = i + 1; j < n; ++j) {
          pair_occ[wick_report::pair_index(n, i, j)].add(
              lambda * u[static_cast<std::size_t>(i)].dot(u[static_cast<std::size_t>(j)]));
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::size_t idx = wick_report::pair_index(n, i, j);
      r.pairwise[idx] = std::abs(pair_occ[idx].value() -
                                 occ[static_cast<std::size_t>(i)].value() *
                                     occ[static_cast<std::size_t>(j)].value());
    }
  }
  r.w_max = *std::max_element(r.pairwise.begin(), r.pairwise.end());
  return r;
}

double full_wick_residual(const reduced_state& rs, int i, int j) {
  require_valid(rs);
  require_cut_capacity(rs);
  require(i >= 0 && i < rs.cut && j >= 0 && j < rs.cut, errc::invalid_argument,
          "site indices must lie inside the subsystem");
  const auto e = [&](std::vector<elementary_op> ops) { return product_expectation(rs, ops); };
  const double nn = e({{i, true}, {i, false}, {j, true}, {j, false}});
  const double ni = e({{i, true}, {i, false}});
  const double nj = e({{j, true}, {j, false}});
  const double cc_dd = e({{i, true}, {j, true}});    // <c+_i c+_j>
  const double cc_aa = e({{i, false}, {j, false}});  // <c_i c_j>
  const double cc_da = e({{i, true}, {j, false}});   // <c+_i c_j>
  const double cc_ad = e({{i, false}, {j, true}});   // <c_i c+_j>
  return std::abs(nn - (ni * nj - cc_dd * cc_aa + cc_da * cc_ad));
}

double max_anomalous_mode_correlator(const reduced_state& rs, const natural_orbital_basis& basis) {
  require_valid(rs);
  require_cut_capacity(rs);
  const int n = rs.cut;
  Eigen::MatrixXd site = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      site(i, j) = product_expectation(rs, {{i, false}, {j, false}});
    }
  }
  const Eigen::MatrixXd mode = basis.orbitals.transpose() * site * basis.orbitals;
  return mode.cwiseAbs().maxCoeff();
}

ent_spectrum label_spectrum(const reduced_state& rs, const natural_orbital_basis& basis,
                            double margin) {
  require_valid(rs);
  require_cut_capacity(rs);
  require(margin > 0.0 && margin <= 0.5, errc::invalid_argument, "margin must lie in (0, 0.5]");
  const int n = rs.cut;
  const std::size_t count = std::size_t{1} << n;
  const fock_index fi = build_fock_index(n);

  // Deterministic splitter for degenerate groups: mode-number combination with
  // distinct value on every occupation pattern (binary-fraction weights).
  Eigen::MatrixXd g_site = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    g_site += std::ldexp(1.0, -(m + 1)) * basis.orbitals.col(m) * basis.orbitals.col(m).transpose();
  }

  std::vector<double> lambda_of(count, -1.0);
  std::vector<bool> seen(count, false);

  for (const auto& block : rs.blocks) {
    const int k = block.a_number;
    const Eigen::Index dim = block.eigvals.size();
    Eigen::MatrixXd vecs = block.eigvecs;

    // Group eigenvalues that are numerically degenerate and rotate each group
    // to diagonalize the splitter; exact Fock degeneracies then resolve to
    // exact Fock vectors.
    Eigen::Index start = 0;
    while (start < dim) {
      Eigen::Index stop = start + 1;
      while (stop < dim && block.eigvals(stop - 1) - block.eigvals(stop) < 1e-13) ++stop;
      const Eigen::Index g = stop - start;
      if (g > 1) {
        Eigen::MatrixXd applied(dim, g);
        Eigen::VectorXd out(dim);
        for (Eigen::Index a = 0; a < g; ++a) {
          out.setZero();
          const Eigen::VectorXd v = vecs.col(start + a);
          // Dense one-body apply of the splitter within the sector.
          for (std::size_t p = 0; p < block.basis.size(); ++p) {
            const std::uint32_t mask = block.basis[p];
            const double amp = v(static_cast<Eigen::Index>(p));
            if (amp == 0.0) continue;
            for (int jj = 0; jj < n; ++jj) {
              if (!(mask >> jj & 1u)) continue;
              std::uint32_t mid = mask;
              double s = string_sign(mid, jj);
              mid ^= 1u << jj;
              for (int ii = 0; ii < n; ++ii) {
                if (mid >> ii & 1u) continue;
                const double s2 = s * string_sign(mid, ii);
                out(fi.pos_by_k[static_cast<std::size_t>(k)][mid | (1u << ii)]) +=
                    g_site(ii, jj) * s2 * amp;
              }
            }
          }
          applied.col(a) = out;
        }
        const Eigen::MatrixXd proj =
            vecs.middleCols(start, g).transpose() * applied;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rot(0.5 * (proj + proj.transpose()));
        require(rot.info() == Eigen::Success, errc::internal, "degeneracy rotation failed");
        vecs.middleCols(start, g) = vecs.middleCols(start, g) * rot.eigenvectors();
      }
      start = stop;
    }

    for (Eigen::Index e = 0; e < dim; ++e) {
      fix_phase_col(vecs, e);
      const Eigen::MatrixXd cv = one_body_matrix(fi, k, vecs.col(e));
      std::uint32_t label = 0;
      for (int m = 0; m < n; ++m) {
        const double o = basis.orbitals.col(m).dot(cv * basis.orbitals.col(m));
        const double bit = std::round(o);
        require(std::abs(o - bit) < margin, errc::ambiguous_label,
                "mode occupation " + std::to_string(o) + " of level " + std::to_string(e) +
                    " in the " + std::to_string(k) + "-particle sector rounds outside margin " +
                    std::to_string(margin));
        if (bit >= 0.5) label |= 1u << m;
      }
      require(std::popcount(label) == k, errc::ambiguous_label,
              "label " + format_label(label, n) + " disagrees with the " + std::to_string(k) +
                  "-particle sector");
      require(!seen[label], errc::label_collision,
              "duplicate label " + format_label(label, n));
      seen[label] = true;
      lambda_of[label] = block.eigvals(e);
    }
  }

  // States in unreachable particle sectors carry exactly zero weight; their
  // Fock labels complete the spectrum.
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!seen[mask]) lambda_of[mask] = 0.0;
  }

  ent_spectrum s;
  s.n_modes = n;
  s.normalized = true;
  s.levels.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    spectrum_level lv;
    lv.has_label = true;
    lv.label = static_cast<std::uint32_t>(mask);
    lv.clamped = lambda_of[mask] < k_eigenvalue_floor;
    lv.probability = std::max(lambda_of[mask], k_eigenvalue_floor);
    lv.energy = -std::log(lv.probability);
    s.levels.push_back(lv);
  }
  return s;
}

pair_additivity pair_additivity_check(const ent_spectrum& labeled, double floor) {
  require(floor > 0.0, errc::invalid_argument, "certification floor must be positive");
  const int n = labeled.n_modes;
  require(n >= 0 && n <= k_max_cut_modes, errc::invalid_argument, "mode count out of range");
  const std::size_t count = std::size_t{1} << n;
  require(labeled.levels.size() == count, errc::malformed_spectrum,
          "additivity audit needs a complete labeled spectrum");

  std::vector<double> energy(count, 0.0);
  std::vector<double> prob(count, -1.0);
  for (const auto& lv : labeled.levels) {
    require(lv.has_label && lv.label < count, errc::malformed_spectrum,
            "additivity audit needs a complete labeled spectrum");
    require(prob[lv.label] < 0.0, errc::malformed_spectrum, "duplicate label in spectrum");
    energy[lv.label] = lv.energy;
    prob[lv.label] = lv.probability;
  }

  std::uint32_t dominant = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (prob[mask] > prob[dominant]) dominant = mask;
  }

  pair_additivity result;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t bi = 1u << i;
      const std::uint32_t bj = 1u << j;
      const std::uint32_t base = dominant & ~(bi | bj);
      const double p_min = std::min(std::min(prob[base], prob[base | bi]),
                                    std::min(prob[base | bj], prob[base | bi | bj]));
      if (p_min < floor) {
        ++result.uncertified;
        continue;
      }
      const double mixed = energy[base | bi | bj] + energy[base] - energy[base | bi] -
                           energy[base | bj];
      ++result.certified;
      if (std::fabs(mixed) > result.max_certified) result.max_certified = std::fabs(mixed);
    }
  }
  return result;
}

}  // namespace wickdist
