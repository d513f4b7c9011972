// SPDX-License-Identifier: Apache-2.0
#include "wickdist.h"

#include <bit>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <utility>

#include "core/error.hpp"
#include "core/gibbs.hpp"
#include "core/intdist.hpp"
#include "core/lattice.hpp"
#include "core/mode_energies.hpp"
#include "core/numeric.hpp"
#include "core/pipeline.hpp"
#include "core/spectrum.hpp"
#include "core/version.hpp"
#include "core/wick.hpp"

namespace {

thread_local std::string t_last_error = "";

wd_status status_from(wickdist::errc code) {
  switch (code) {
    case wickdist::errc::invalid_argument: return WD_ERR_INVALID_ARGUMENT;
    case wickdist::errc::capacity: return WD_ERR_CAPACITY;
    case wickdist::errc::malformed_spectrum: return WD_ERR_MALFORMED_SPECTRUM;
    case wickdist::errc::unsupported_model: return WD_ERR_UNSUPPORTED_MODEL;
    case wickdist::errc::ambiguous_label: return WD_ERR_AMBIGUOUS_LABEL;
    case wickdist::errc::label_collision: return WD_ERR_LABEL_COLLISION;
    case wickdist::errc::io: return WD_ERR_IO;
    case wickdist::errc::parse: return WD_ERR_PARSE;
    case wickdist::errc::internal: return WD_ERR_INTERNAL;
  }
  return WD_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes and the thread-local
// error message. Every exported function body goes through here.
template <typename Fn>
wd_status wrap(Fn&& fn) {
  try {
    fn();
    return WD_OK;
  } catch (const wickdist::error& e) {
    t_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return WD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return WD_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return WD_ERR_INTERNAL;
  }
}

void require_arg(bool ok, const char* message) {
  wickdist::require(ok, wickdist::errc::invalid_argument, message);
}

wickdist::free_fit_options fit_options_from(const wd_fit_options* opt) {
  wickdist::free_fit_options out{};
  if (opt == nullptr) return out;
  require_arg(opt->restarts >= 1, "restarts must be at least 1");
  require_arg(opt->max_evals >= 0, "max_evals must be nonnegative");
  require_arg(opt->max_evals <= std::numeric_limits<int>::max(), "max_evals too large");
  require_arg(opt->tol > 0.0, "tol must be positive");
  out.restarts = opt->restarts;
  out.max_evals_per_restart = static_cast<int>(opt->max_evals);
  out.ftol = opt->tol;
  out.seed = opt->seed;
  return out;
}

}  // namespace

struct wd_mode_energies {
  wickdist::mode_energies m;
};
struct wd_spectrum {
  wickdist::ent_spectrum s;
};
struct wd_wick_report {
  wickdist::wick_report r;
};
struct wd_fit_result {
  wickdist::free_fit_result f;
};
struct wd_ed_result {
  wickdist::ed_result r;
};

extern "C" {

const char* wd_version(void) { return wickdist::k_version; }

const char* wd_last_error(void) { return t_last_error.c_str(); }

/* ---- mode energies ------------------------------------------------------ */

wd_status wd_mode_energies_create(int n_modes, wd_mode_energies** out) {
  return wrap([&] {
    require_arg(out != nullptr, "out must not be NULL");
    wickdist::mode_energies m;
    m.n_modes = n_modes;
    m.single.assign(n_modes > 0 ? static_cast<size_t>(n_modes) : 0, 0.0);
    wickdist::validate(m);
    *out = new wd_mode_energies{std::move(m)};
  });
}

void wd_mode_energies_destroy(wd_mode_energies* m) { delete m; }

wd_status wd_mode_energies_set_e0(wd_mode_energies* m, double e0) {
  return wrap([&] {
    require_arg(m != nullptr, "handle must not be NULL");
    wickdist::require_finite(e0, "e0");
    m->m.e0 = e0;
  });
}

wd_status wd_mode_energies_set_single(wd_mode_energies* m, int k, double eps) {
  return wrap([&] {
    require_arg(m != nullptr, "handle must not be NULL");
    require_arg(k >= 0 && k < m->m.n_modes, "mode index out of range");
    wickdist::require_finite(eps, "single-mode energy");
    m->m.single[static_cast<size_t>(k)] = eps;
  });
}

wd_status wd_mode_energies_set_pair(wd_mode_energies* m, int i, int j, double eps) {
  return wrap([&] {
    require_arg(m != nullptr, "handle must not be NULL");
    require_arg(i >= 0 && i < m->m.n_modes, "mode index out of range");
    require_arg(j >= 0 && j < m->m.n_modes, "mode index out of range");
    require_arg(i != j, "pair energy needs two distinct modes");
    wickdist::require_finite(eps, "pair energy");
    const uint32_t key = wickdist::pair_key(i, j);
    if (eps == 0.0) {
      m->m.pair.erase(key);
    } else {
      m->m.pair[key] = eps;
    }
  });
}

wd_status wd_mode_energies_set_subset(wd_mode_energies* m, uint32_t mask, double eps) {
  return wrap([&] {
    require_arg(m != nullptr, "handle must not be NULL");
    require_arg(mask != 0, "subset mask must be nonempty");
    require_arg(m->m.n_modes < 32 && (mask >> m->m.n_modes) == 0, "subset mask out of range");
    wickdist::require_finite(eps, "subset energy");
    const int bits = std::popcount(mask);
    if (bits == 1) {
      const int k = std::countr_zero(mask);
      m->m.single[static_cast<size_t>(k)] = eps;
    } else {
      auto& table = (bits == 2) ? m->m.pair : m->m.higher;
      if (eps == 0.0) {
        table.erase(mask);
      } else {
        table[mask] = eps;
      }
    }
  });
}

wd_status wd_mode_energies_n_modes(const wd_mode_energies* m, int* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = m->m.n_modes;
  });
}

wd_status wd_mode_energies_get_e0(const wd_mode_energies* m, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = m->m.e0;
  });
}

wd_status wd_mode_energies_get_single(const wd_mode_energies* m, int k, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    require_arg(k >= 0 && k < m->m.n_modes, "mode index out of range");
    *out = m->m.single[static_cast<size_t>(k)];
  });
}

wd_status wd_mode_energies_get_pair(const wd_mode_energies* m, int i, int j, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    require_arg(i >= 0 && i < m->m.n_modes, "mode index out of range");
    require_arg(j >= 0 && j < m->m.n_modes, "mode index out of range");
    require_arg(i != j, "pair energy needs two distinct modes");
    *out = wickdist::pair_energy(m->m, i, j);
  });
}

wd_status wd_mode_energies_get_subset(const wd_mode_energies* m, uint32_t mask, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    require_arg(mask != 0, "subset mask must be nonempty");
    require_arg(m->m.n_modes < 32 && (mask >> m->m.n_modes) == 0, "subset mask out of range");
    const int bits = std::popcount(mask);
    if (bits == 1) {
      *out = m->m.single[static_cast<size_t>(std::countr_zero(mask))];
    } else {
      const auto& table = (bits == 2) ? m->m.pair : m->m.higher;
      const auto it = table.find(mask);
      *out = (it == table.end()) ? 0.0 : it->second;
    }
  });
}

/* ---- free models -------------------------------------------------------- */

wd_status wd_free_partition_function(const double* eps, int n, double* out) {
  return wrap([&] {
    require_arg(out != nullptr, "out must not be NULL");
    require_arg(n >= 0, "mode count must be nonnegative");
    require_arg(n == 0 || eps != nullptr, "eps must not be NULL");
    *out = wickdist::free_partition_function(
        std::vector<double>(eps, eps + static_cast<size_t>(n)));
  });
}

wd_status wd_free_occupation(double eps_k, double* out) {
  return wrap([&] {
    require_arg(out != nullptr, "out must not be NULL");
    *out = wickdist::free_occupation(eps_k);
  });
}

/* ---- spectra ------------------------------------------------------------ */

wd_status wd_spectrum_from_mode_energies(const wd_mode_energies* m, int normalize,
                                         wd_spectrum** out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_spectrum{wickdist::spectrum_from_mode_energies(m->m, normalize != 0)};
  });
}

wd_status wd_spectrum_to_mode_energies(const wd_spectrum* s, wd_mode_energies** out) {
  return wrap([&] {
    require_arg(s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_mode_energies{wickdist::spectrum_to_mode_energies(s->s)};
  });
}

wd_status wd_spectrum_read(const char* path, wd_spectrum** out) {
  return wrap([&] {
    require_arg(path != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_spectrum{wickdist::read_spectrum_file(path)};
  });
}

wd_status wd_spectrum_write(const wd_spectrum* s, const char* path) {
  return wrap([&] {
    require_arg(s != nullptr && path != nullptr, "arguments must not be NULL");
    wickdist::write_spectrum_file(path, s->s);
  });
}

wd_status wd_spectrum_normalize(wd_spectrum* s) {
  return wrap([&] {
    require_arg(s != nullptr, "handle must not be NULL");
    wickdist::normalize(s->s);
  });
}

void wd_spectrum_destroy(wd_spectrum* s) { delete s; }

wd_status wd_spectrum_level_count(const wd_spectrum* s, size_t* out) {
  return wrap([&] {
    require_arg(s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = s->s.levels.size();
  });
}

wd_status wd_spectrum_n_modes(const wd_spectrum* s, int* out) {
  return wrap([&] {
    require_arg(s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = s->s.n_modes;
  });
}

wd_status wd_spectrum_is_normalized(const wd_spectrum* s, int* out) {
  return wrap([&] {
    require_arg(s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = s->s.normalized ? 1 : 0;
  });
}

wd_status wd_spectrum_level(const wd_spectrum* s, size_t index, double* energy,
                            double* probability, int* has_label, uint32_t* label, int* clamped) {
  return wrap([&] {
    require_arg(s != nullptr, "handle must not be NULL");
    require_arg(index < s->s.levels.size(), "level index out of range");
    const auto& lv = s->s.levels[index];
    if (energy != nullptr) *energy = lv.energy;
    if (probability != nullptr) *probability = lv.probability;
    if (has_label != nullptr) *has_label = lv.has_label ? 1 : 0;
    if (label != nullptr) *label = lv.has_label ? lv.label : 0;
    if (clamped != nullptr) *clamped = lv.clamped ? 1 : 0;
  });
}

/* ---- exact Gibbs expectations ------------------------------------------- */

wd_status wd_exact_partition_function(const wd_mode_energies* m, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::exact_partition_function(m->m);
  });
}

wd_status wd_exact_occupation(const wd_mode_energies* m, int k, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::exact_occupation(m->m, k);
  });
}

wd_status wd_exact_pair_occupation(const wd_mode_energies* m, int k, int l, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::exact_pair_occupation(m->m, k, l);
  });
}

/* ---- Wick violations ---------------------------------------------------- */

wd_status wd_violation_exact(const wd_mode_energies* m, int i, int j, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::violation_exact(m->m, i, j);
  });
}

wd_status wd_violation_two_mode_closed(double e1, double e2, double e12, int as_printed,
                                       double* out) {
  return wrap([&] {
    require_arg(out != nullptr, "out must not be NULL");
    *out = wickdist::violation_two_mode_closed(e1, e2, e12, as_printed != 0);
  });
}

wd_status wd_perturbative_occupation(const wd_mode_energies* m, int k, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::perturbative_occupation(m->m, k);
  });
}

wd_status wd_perturbative_pair_occupation(const wd_mode_energies* m, int k, int l, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::perturbative_pair_occupation(m->m, k, l);
  });
}

wd_status wd_violation_perturbative(const wd_mode_energies* m, int i, int j, double* out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wickdist::violation_perturbative(m->m, i, j);
  });
}

wd_status wd_wick_report_compute(const wd_mode_energies* m, wd_method method, int as_printed,
                                 wd_wick_report** out) {
  return wrap([&] {
    require_arg(m != nullptr && out != nullptr, "arguments must not be NULL");
    require_arg(method >= WD_METHOD_EXACT && method <= WD_METHOD_DIRECT_CORRELATOR,
                "unknown method");
    *out = new wd_wick_report{wickdist::compute_report(
        m->m, static_cast<wickdist::wick_method>(method), as_printed != 0)};
  });
}

void wd_wick_report_destroy(wd_wick_report* r) { delete r; }

wd_status wd_wick_report_n_modes(const wd_wick_report* r, int* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = r->r.n_modes;
  });
}

wd_status wd_wick_report_method(const wd_wick_report* r, wd_method* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = static_cast<wd_method>(r->r.method);
  });
}

wd_status wd_wick_report_w_max(const wd_wick_report* r, double* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = r->r.w_max;
  });
}

wd_status wd_wick_report_pair(const wd_wick_report* r, int i, int j, double* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = r->r.pair(i, j);
  });
}

/* ---- interaction distance ----------------------------------------------- */

void wd_fit_options_init(wd_fit_options* opt) {
  if (opt == nullptr) return;
  const wickdist::free_fit_options d{};
  opt->restarts = d.restarts;
  opt->max_evals = d.max_evals_per_restart;
  opt->tol = d.ftol;
  opt->seed = d.seed;
}

wd_status wd_trace_distance_diagonal(const double* p, size_t np, const double* q, size_t nq,
                                     double* out) {
  return wrap([&] {
    require_arg(out != nullptr, "out must not be NULL");
    require_arg(np == 0 || p != nullptr, "p must not be NULL");
    require_arg(nq == 0 || q != nullptr, "q must not be NULL");
    *out = wickdist::trace_distance_diagonal(std::vector<double>(p, p + np),
                                             std::vector<double>(q, q + nq));
  });
}

wd_status wd_fit_free_spectrum(const wd_spectrum* s, int n_modes, const wd_fit_options* opt,
                               wd_fit_result** out) {
  return wrap([&] {
    require_arg(s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_fit_result{wickdist::fit_free_spectrum(s->s, n_modes, fit_options_from(opt))};
  });
}

void wd_fit_result_destroy(wd_fit_result* f) { delete f; }

wd_status wd_fit_result_d_f(const wd_fit_result* f, double* out) {
  return wrap([&] {
    require_arg(f != nullptr && out != nullptr, "arguments must not be NULL");
    *out = f->f.d_f;
  });
}

wd_status wd_fit_result_e0(const wd_fit_result* f, double* out) {
  return wrap([&] {
    require_arg(f != nullptr && out != nullptr, "arguments must not be NULL");
    *out = f->f.e0_star;
  });
}

wd_status wd_fit_result_n_modes(const wd_fit_result* f, int* out) {
  return wrap([&] {
    require_arg(f != nullptr && out != nullptr, "arguments must not be NULL");
    *out = static_cast<int>(f->f.eps_star.size());
  });
}

wd_status wd_fit_result_eps(const wd_fit_result* f, double* eps, size_t cap) {
  return wrap([&] {
    require_arg(f != nullptr && eps != nullptr, "arguments must not be NULL");
    require_arg(cap >= f->f.eps_star.size(), "eps buffer too small");
    std::memcpy(eps, f->f.eps_star.data(), f->f.eps_star.size() * sizeof(double));
  });
}

wd_status wd_fit_result_stats(const wd_fit_result* f, long long* objective_evals,
                              int* restarts_used, int* converged) {
  return wrap([&] {
    require_arg(f != nullptr, "handle must not be NULL");
    if (objective_evals != nullptr) *objective_evals = f->f.objective_evals;
    if (restarts_used != nullptr) *restarts_used = f->f.restarts_used;
    if (converged != nullptr) *converged = f->f.converged ? 1 : 0;
  });
}

wd_status wd_check_bound(double w_max, double d_f, double tol, int* ok, double* slack) {
  return wrap([&] {
    const auto b = wickdist::check_bound(w_max, d_f, tol > 0.0 ? tol : 1e-6);
    if (ok != nullptr) *ok = b.ok ? 1 : 0;
    if (slack != nullptr) *slack = b.slack;
  });
}

/* ---- exact diagonalization pipeline ------------------------------------- */

void wd_ed_model_init(wd_ed_model* model) {
  if (model == nullptr) return;
  const wickdist::lattice_model d{};
  model->length = d.length;
  model->filling = d.filling;
  model->hopping = d.hopping;
  model->interaction = d.interaction;
  model->chemical_potential = d.chemical_potential;
  model->boundary = (d.boundary == wickdist::boundary_kind::periodic) ? WD_BOUNDARY_PERIODIC
                                                                      : WD_BOUNDARY_OPEN;
  model->cut = 0;
}

wd_status wd_ed_run(const wd_ed_model* model, const wd_fit_options* opt, wd_ed_result** out) {
  return wrap([&] {
    require_arg(model != nullptr && out != nullptr, "arguments must not be NULL");
    require_arg(model->boundary == WD_BOUNDARY_OPEN || model->boundary == WD_BOUNDARY_PERIODIC,
                "unknown boundary kind");
    wickdist::lattice_model lm;
    lm.length = model->length;
    lm.filling = model->filling;
    lm.hopping = model->hopping;
    lm.interaction = model->interaction;
    lm.chemical_potential = model->chemical_potential;
    lm.boundary = (model->boundary == WD_BOUNDARY_PERIODIC) ? wickdist::boundary_kind::periodic
                                                            : wickdist::boundary_kind::open;
    wickdist::ed_options eo;
    eo.cut = model->cut;
    eo.fit = fit_options_from(opt);
    *out = new wd_ed_result{wickdist::run_ed_pipeline(lm, eo)};
  });
}

void wd_ed_result_destroy(wd_ed_result* r) { delete r; }

wd_status wd_ed_result_ground_energy(const wd_ed_result* r, double* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = r->r.ground_energy;
  });
}

wd_status wd_ed_result_gap(const wd_ed_result* r, double* gap, int* warning) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    if (gap != nullptr) *gap = r->r.gap;
    if (warning != nullptr) *warning = r->r.gap_warning ? 1 : 0;
  });
}

wd_status wd_ed_result_spectrum(const wd_ed_result* r, wd_spectrum** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_spectrum{r->r.spectrum};
  });
}

wd_status wd_ed_result_labeled_spectrum(const wd_ed_result* r, wd_spectrum** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    wickdist::require(r->r.labeling_ok, wickdist::errc::ambiguous_label,
                      r->r.labeling_message.empty() ? "labeling failed" : r->r.labeling_message);
    *out = new wd_spectrum{r->r.labeled};
  });
}

wd_status wd_ed_result_labeling(const wd_ed_result* r, int* ok, const char** message) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    if (ok != nullptr) *ok = r->r.labeling_ok ? 1 : 0;
    // The message points into the result handle; it stays valid until the
    // handle is destroyed.
    if (message != nullptr) *message = r->r.labeling_message.c_str();
  });
}

wd_status wd_ed_result_mode_energies(const wd_ed_result* r, wd_mode_energies** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    wickdist::require(r->r.labeling_ok, wickdist::errc::ambiguous_label,
                      r->r.labeling_message.empty() ? "labeling failed" : r->r.labeling_message);
    *out = new wd_mode_energies{r->r.recovered};
  });
}

wd_status wd_ed_result_pair_additivity(const wd_ed_result* r, double* max_certified,
                                       int* certified, int* uncertified) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    wickdist::require(r->r.labeling_ok, wickdist::errc::ambiguous_label,
                      r->r.labeling_message.empty() ? "labeling failed" : r->r.labeling_message);
    if (max_certified != nullptr) *max_certified = r->r.additivity.max_certified;
    if (certified != nullptr) *certified = r->r.additivity.certified;
    if (uncertified != nullptr) *uncertified = r->r.additivity.uncertified;
  });
}

wd_status wd_ed_result_direct_report(const wd_ed_result* r, wd_wick_report** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_wick_report{r->r.direct};
  });
}

wd_status wd_ed_result_fit_label_report(const wd_ed_result* r, wd_wick_report** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_wick_report{r->r.fit_label};
  });
}

wd_status wd_ed_result_fit(const wd_ed_result* r, wd_fit_result** out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wd_fit_result{r->r.fit};
  });
}

wd_status wd_ed_result_natural_occupations(const wd_ed_result* r, double* nu, size_t cap,
                                           int* degenerate) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    const auto& occ = r->r.orbitals.occupations;
    if (nu != nullptr) {
      require_arg(cap >= static_cast<size_t>(occ.size()), "nu buffer too small");
      for (Eigen::Index i = 0; i < occ.size(); ++i) nu[i] = occ[i];
    }
    if (degenerate != nullptr) *degenerate = r->r.orbitals.degenerate ? 1 : 0;
  });
}

wd_status wd_ed_result_residuals(const wd_ed_result* r, double* full_wick_max,
                                 double* anomalous_max) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    if (full_wick_max != nullptr) *full_wick_max = r->r.full_wick_max;
    if (anomalous_max != nullptr) *anomalous_max = r->r.max_anomalous;
  });
}

wd_status wd_ed_result_bound(const wd_ed_result* r, double tol, int* ok, double* slack) {
  return wrap([&] {
    require_arg(r != nullptr, "handle must not be NULL");
    const auto b =
        wickdist::check_bound(r->r.fit_label.w_max, r->r.fit.d_f, tol > 0.0 ? tol : 1e-6);
    if (ok != nullptr) *ok = b.ok ? 1 : 0;
    if (slack != nullptr) *slack = b.slack;
  });
}

wd_status wd_ed_result_clamped_count(const wd_ed_result* r, int* out) {
  return wrap([&] {
    require_arg(r != nullptr && out != nullptr, "arguments must not be NULL");
    *out = r->r.n_clamped;
  });
}

}  // extern "C"
