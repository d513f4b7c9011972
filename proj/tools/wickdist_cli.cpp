// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Links the shared C API only; every computation goes
// through wickdist.h. Exit codes: 0 success, 2 usage or input problems,
// 3 optimizer budget exhaustion, 4 internal invariant failure.
#include "wickdist.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_usage = 2;
constexpr int k_exit_no_convergence = 3;
constexpr int k_exit_internal = 4;

struct cli_failure {
  int code;
  std::string message;
};

[[noreturn]] void fail_usage(std::string message) {
  throw cli_failure{k_exit_usage, std::move(message)};
}

// Library failures surface the thread-local message; only genuine internal
// errors map to exit 4, everything else is an input problem.
void check(wd_status status) {
  if (status == WD_OK) return;
  const int code = (status == WD_ERR_INTERNAL) ? k_exit_internal : k_exit_usage;
  throw cli_failure{code, wd_last_error()};
}

template <typename T, void (*Destroy)(T*)>
class handle {
 public:
  handle() = default;
  ~handle() { reset(); }
  handle(const handle&) = delete;
  handle& operator=(const handle&) = delete;
  handle(handle&& other) noexcept : ptr_(other.ptr_) { other.ptr_ = nullptr; }
  handle& operator=(handle&& other) noexcept {
    if (this != &other) {
      reset();
      ptr_ = other.ptr_;
      other.ptr_ = nullptr;
    }
    return *this;
  }
  T** out() {
    reset();
    return &ptr_;
  }
  T* get() const { return ptr_; }

 private:
  void reset() {
    if (ptr_ != nullptr) Destroy(ptr_);
    ptr_ = nullptr;
  }
  T* ptr_ = nullptr;
};

using mode_energies_h = handle<wd_mode_energies, wd_mode_energies_destroy>;
using spectrum_h = handle<wd_spectrum, wd_spectrum_destroy>;
using wick_report_h = handle<wd_wick_report, wd_wick_report_destroy>;
using fit_result_h = handle<wd_fit_result, wd_fit_result_destroy>;
using ed_result_h = handle<wd_ed_result, wd_ed_result_destroy>;

std::string fmt(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string fmt17(double value) { return fmt(value, 17); }
std::string fmt12(double value) { return fmt(value, 12); }
std::string fmt6(double value) { return fmt(value, 6); }

const char* bool_str(bool b) { return b ? "true" : "false"; }

// Writes to the path when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail_usage("cannot open output file: " + out_path);
  out << text;
  if (!out.good()) fail_usage("cannot write output file: " + out_path);
}

/* ---- shared option bundles ---------------------------------------------- */

struct fit_flags {
  int restarts;
  long long max_evals;
  double tol;
  uint64_t seed;

  fit_flags() {
    wd_fit_options opt;
    wd_fit_options_init(&opt);
    restarts = opt.restarts;
    max_evals = opt.max_evals;
    tol = opt.tol;
    seed = opt.seed;
  }

  wd_fit_options to_options() const {
    wd_fit_options opt;
    wd_fit_options_init(&opt);
    opt.restarts = restarts;
    opt.max_evals = max_evals;
    opt.tol = tol;
    opt.seed = seed;
    return opt;
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Optimizer restart seed");
    cmd->add_option("--restarts", restarts, "Optimizer restart count");
    cmd->add_option("--tol", tol, "Simplex convergence threshold");
    cmd->add_option("--max-evals", max_evals,
                    "Objective evaluations per restart (0 = 200 per mode)");
  }
};

struct model_flags {
  wd_ed_model model;
  std::string config_path;
  CLI::Option* opt_length = nullptr;
  CLI::Option* opt_filling = nullptr;
  CLI::Option* opt_hopping = nullptr;
  CLI::Option* opt_interaction = nullptr;
  CLI::Option* opt_chemical = nullptr;
  CLI::Option* opt_boundary = nullptr;
  CLI::Option* opt_cut = nullptr;

  model_flags() { wd_ed_model_init(&model); }

  // Option names double as the config-file keys.
  void add_to(CLI::App* cmd, bool with_interaction) {
    opt_length = cmd->add_option("--L", model.length, "Chain length (sites)");
    opt_filling = cmd->add_option("--M", model.filling, "Particle number");
    opt_hopping = cmd->add_option("--t", model.hopping, "Hopping amplitude");
    if (with_interaction) {
      opt_interaction =
          cmd->add_option("--V", model.interaction, "Nearest-neighbor interaction");
    }
    opt_chemical = cmd->add_option("--mu", model.chemical_potential, "Chemical potential");
    opt_boundary =
        cmd->add_option_function<std::string>(
               "--boundary",
               [this](const std::string& value) { set_boundary(value); },
               "Boundary condition")
            ->check(CLI::IsMember({"open", "periodic"}))
            ->default_str("open");
    opt_cut = cmd->add_option("--cut", model.cut, "Left-block size (0 = half chain)");
    cmd->add_option("--config", config_path,
                    "Flat key=value model config; command-line flags override it");
  }

  // Flat key=value file; a key is ignored when its flag was given explicitly.
  void apply_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) fail_usage("cannot read config file: " + config_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string text = trim(line);
      if (text.empty() || text[0] == '#') continue;
      const auto eq = text.find('=');
      if (eq == std::string::npos) config_fail(line_no, "expected key=value");
      const std::string key = trim(text.substr(0, eq));
      const std::string value = trim(text.substr(eq + 1));
      if (key == "L") {
        set_int(opt_length, model.length, value, line_no);
      } else if (key == "M") {
        set_int(opt_filling, model.filling, value, line_no);
      } else if (key == "t") {
        set_real(opt_hopping, model.hopping, value, line_no);
      } else if (key == "V") {
        set_real(opt_interaction, model.interaction, value, line_no);
      } else if (key == "mu") {
        set_real(opt_chemical, model.chemical_potential, value, line_no);
      } else if (key == "boundary") {
        if (value != "open" && value != "periodic") {
          config_fail(line_no, "boundary must be open or periodic");
        }
        if (!given(opt_boundary)) set_boundary(value);
      } else if (key == "cut") {
        set_int(opt_cut, model.cut, value, line_no);
      } else {
        config_fail(line_no, "unknown key: " + key);
      }
    }
  }

 private:
  void set_boundary(const std::string& value) {
    model.boundary = (value == "periodic") ? WD_BOUNDARY_PERIODIC : WD_BOUNDARY_OPEN;
  }

  static bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

  [[noreturn]] void config_fail(int line_no, const std::string& what) const {
    fail_usage("config file " + config_path + " line " + std::to_string(line_no) + ": " + what);
  }

  static std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
  }

  void set_int(const CLI::Option* opt, int& field, const std::string& value, int line_no) {
    char* tail = nullptr;
    const long parsed = std::strtol(value.c_str(), &tail, 10);
    if (value.empty() || tail == nullptr || *tail != '\0') {
      config_fail(line_no, "expected an integer, got: " + value);
    }
    if (!given(opt)) field = static_cast<int>(parsed);
  }

  // A scan has no --V flag (opt == nullptr): the key is validated but the
  // sweep supplies the interaction, so the value is dropped.
  void set_real(const CLI::Option* opt, double& field, const std::string& value, int line_no) {
    char* tail = nullptr;
    const double parsed = std::strtod(value.c_str(), &tail);
    if (value.empty() || tail == nullptr || *tail != '\0' || !std::isfinite(parsed)) {
      config_fail(line_no, "expected a finite number, got: " + value);
    }
    if (opt != nullptr && !given(opt)) field = parsed;
  }
};

/* ---- two-mode ------------------------------------------------------------ */

struct two_mode_args {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps12 = 0.0;
};

int cmd_two_mode(const two_mode_args& args) {
  mode_energies_h m;
  check(wd_mode_energies_create(2, m.out()));
  check(wd_mode_energies_set_single(m.get(), 0, args.eps1));
  check(wd_mode_energies_set_single(m.get(), 1, args.eps2));
  check(wd_mode_energies_set_pair(m.get(), 0, 1, args.eps12));

  double z = 0.0, n1 = 0.0, n2 = 0.0, n12 = 0.0, w = 0.0, w_printed = 0.0;
  check(wd_exact_partition_function(m.get(), &z));
  check(wd_exact_occupation(m.get(), 0, &n1));
  check(wd_exact_occupation(m.get(), 1, &n2));
  check(wd_exact_pair_occupation(m.get(), 0, 1, &n12));
  const double e12 = args.eps1 + args.eps2 + args.eps12;
  check(wd_violation_two_mode_closed(args.eps1, args.eps2, e12, 0, &w));
  check(wd_violation_two_mode_closed(args.eps1, args.eps2, e12, 1, &w_printed));

  std::string text;
  text += "Z         = " + fmt12(z) + "\n";
  text += "<n_1>     = " + fmt12(n1) + "\n";
  text += "<n_2>     = " + fmt12(n2) + "\n";
  text += "<n_1 n_2> = " + fmt12(n12) + "\n";
  text += "W         = " + fmt12(w) + "\n";
  text += "W_printed = " + fmt12(w_printed) + "\n";
  std::fputs(text.c_str(), stdout);
  return k_exit_ok;
}

/* ---- wick ---------------------------------------------------------------- */

struct wick_args {
  std::string spectrum_path;
  std::string method = "exact";
  bool as_printed = false;
};

int cmd_wick(const wick_args& args) {
  spectrum_h s;
  check(wd_spectrum_read(args.spectrum_path.c_str(), s.out()));
  mode_energies_h m;
  check(wd_spectrum_to_mode_energies(s.get(), m.out()));

  wd_method method = WD_METHOD_EXACT;
  if (args.method == "exact") {
    method = WD_METHOD_EXACT;
  } else if (args.method == "two-mode") {
    method = WD_METHOD_TWO_MODE_CLOSED;
  } else if (args.method == "perturbative") {
    method = WD_METHOD_PERTURBATIVE;
  } else {
    fail_usage("unknown method: " + args.method);
  }

  wick_report_h report;
  check(wd_wick_report_compute(m.get(), method, args.as_printed ? 1 : 0, report.out()));
  int n = 0;
  double w_max = 0.0;
  check(wd_wick_report_n_modes(report.get(), &n));
  check(wd_wick_report_w_max(report.get(), &w_max));

  std::string text;
  text += "modes  = " + std::to_string(n) + "\n";
  text += "method = " + args.method + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double w = 0.0;
      check(wd_wick_report_pair(report.get(), i, j, &w));
      text += "W[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + fmt6(w) +
              "\n";
    }
  }
  text += "w_max  = " + fmt6(w_max) + "\n";
  std::fputs(text.c_str(), stdout);
  return k_exit_ok;
}

/* ---- intdist ------------------------------------------------------------- */

struct intdist_args {
  std::string spectrum_path;
  int n_modes = 0;
  fit_flags fit;
};

int cmd_intdist(const intdist_args& args) {
  spectrum_h s;
  check(wd_spectrum_read(args.spectrum_path.c_str(), s.out()));

  int n_modes = args.n_modes;
  if (n_modes <= 0) {
    check(wd_spectrum_n_modes(s.get(), &n_modes));
    if (n_modes <= 0) {
      size_t levels = 0;
      check(wd_spectrum_level_count(s.get(), &levels));
      n_modes = 1;
      while ((size_t{1} << n_modes) < levels) ++n_modes;
    }
  }

  const wd_fit_options opt = args.fit.to_options();
  fit_result_h fit;
  check(wd_fit_free_spectrum(s.get(), n_modes, &opt, fit.out()));

  double d_f = 0.0, e0 = 0.0;
  int fitted_modes = 0, restarts_used = 0, converged = 0;
  long long evals = 0;
  check(wd_fit_result_d_f(fit.get(), &d_f));
  check(wd_fit_result_e0(fit.get(), &e0));
  check(wd_fit_result_n_modes(fit.get(), &fitted_modes));
  check(wd_fit_result_stats(fit.get(), &evals, &restarts_used, &converged));
  std::vector<double> eps(static_cast<size_t>(fitted_modes), 0.0);
  check(wd_fit_result_eps(fit.get(), eps.data(), eps.size()));

  std::string text;
  text += "n_modes   = " + std::to_string(fitted_modes) + "\n";
  text += "d_f       = " + fmt17(d_f) + "\n";
  text += "e0_star   = " + fmt17(e0) + "\n";
  std::string eps_line;
  for (size_t i = 0; i < eps.size(); ++i) {
    if (i > 0) eps_line += " ";
    eps_line += fmt17(eps[i]);
  }
  text += "eps_star  = " + eps_line + "\n";
  text += "evals     = " + std::to_string(evals) + "\n";
  text += "restarts  = " + std::to_string(restarts_used) + "\n";
  text += "converged = " + std::string(bool_str(converged != 0)) + "\n";
  std::fputs(text.c_str(), stdout);
  return converged != 0 ? k_exit_ok : k_exit_no_convergence;
}

/* ---- ed run -------------------------------------------------------------- */

struct ed_run_args {
  model_flags model;
  fit_flags fit;
  std::string out_path;
};

std::string boundary_name(int boundary) {
  return boundary == WD_BOUNDARY_PERIODIC ? "periodic" : "open";
}

int cmd_ed_run(const ed_run_args& args) {
  const wd_fit_options opt = args.fit.to_options();
  ed_result_h result;
  check(wd_ed_run(&args.model.model, &opt, result.out()));

  const wd_ed_model& model = args.model.model;
  const int cut = model.cut > 0 ? model.cut : model.length / 2;

  double ground = 0.0, gap = 0.0;
  int gap_warning = 0;
  check(wd_ed_result_ground_energy(result.get(), &ground));
  check(wd_ed_result_gap(result.get(), &gap, &gap_warning));

  spectrum_h spectrum;
  check(wd_ed_result_spectrum(result.get(), spectrum.out()));
  size_t levels = 0;
  check(wd_spectrum_level_count(spectrum.get(), &levels));
  int clamped = 0;
  check(wd_ed_result_clamped_count(result.get(), &clamped));

  int labeling_ok = 0;
  const char* labeling_message = nullptr;
  check(wd_ed_result_labeling(result.get(), &labeling_ok, &labeling_message));

  wick_report_h direct;
  check(wd_ed_result_direct_report(result.get(), direct.out()));
  double w_max_orbitals = 0.0;
  check(wd_wick_report_w_max(direct.get(), &w_max_orbitals));

  wick_report_h fit_label;
  check(wd_ed_result_fit_label_report(result.get(), fit_label.out()));
  double w_max = 0.0;
  check(wd_wick_report_w_max(fit_label.get(), &w_max));

  double full_wick = 0.0, anomalous = 0.0;
  check(wd_ed_result_residuals(result.get(), &full_wick, &anomalous));

  std::vector<double> nu(static_cast<size_t>(cut), 0.0);
  int degenerate = 0;
  check(wd_ed_result_natural_occupations(result.get(), nu.data(), nu.size(), &degenerate));

  fit_result_h fit;
  check(wd_ed_result_fit(result.get(), fit.out()));
  double d_f = 0.0, e0 = 0.0;
  int fitted_modes = 0, restarts_used = 0, fit_converged = 0;
  long long evals = 0;
  check(wd_fit_result_d_f(fit.get(), &d_f));
  check(wd_fit_result_e0(fit.get(), &e0));
  check(wd_fit_result_n_modes(fit.get(), &fitted_modes));
  check(wd_fit_result_stats(fit.get(), &evals, &restarts_used, &fit_converged));
  std::vector<double> eps(static_cast<size_t>(fitted_modes), 0.0);
  check(wd_fit_result_eps(fit.get(), eps.data(), eps.size()));

  int bound_ok = 0;
  double bound_slack = 0.0;
  check(wd_ed_result_bound(result.get(), 0.0, &bound_ok, &bound_slack));

  std::string text;
  text += "version=" + std::string(wd_version()) + "\n";
  text += "L=" + std::to_string(model.length) + "\n";
  text += "M=" + std::to_string(model.filling) + "\n";
  text += "t=" + fmt17(model.hopping) + "\n";
  text += "V=" + fmt17(model.interaction) + "\n";
  text += "mu=" + fmt17(model.chemical_potential) + "\n";
  text += "boundary=" + boundary_name(model.boundary) + "\n";
  text += "cut=" + std::to_string(cut) + "\n";
  text += "seed=" + std::to_string(args.fit.seed) + "\n";
  text += "restarts=" + std::to_string(args.fit.restarts) + "\n";
  text += "max_evals=" +
          std::to_string(args.fit.max_evals > 0 ? args.fit.max_evals
                                                : static_cast<long long>(200) * cut) +
          "\n";
  text += "tol=" + fmt17(args.fit.tol) + "\n";
  text += "bound_tol=" + fmt17(1e-6) + "\n";
  text += "ground_energy=" + fmt17(ground) + "\n";
  text += "gap=" + fmt17(gap) + "\n";
  text += "gap_warning=" + std::string(bool_str(gap_warning != 0)) + "\n";
  text += "levels=" + std::to_string(levels) + "\n";
  text += "clamped=" + std::to_string(clamped) + "\n";
  text += "labeling_ok=" + std::string(bool_str(labeling_ok != 0)) + "\n";
  if (labeling_ok == 0 && labeling_message != nullptr && labeling_message[0] != '\0') {
    text += "labeling_error=" + std::string(labeling_message) + "\n";
  }
  if (labeling_ok != 0) {
    double max_pair = 0.0;
    int certified = 0, uncertified = 0;
    check(wd_ed_result_pair_additivity(result.get(), &max_pair, &certified, &uncertified));
    text += "max_pair_energy=" + fmt17(max_pair) + "\n";
    text += "pairs_certified=" + std::to_string(certified) + "\n";
    text += "pairs_uncertified=" + std::to_string(uncertified) + "\n";
  }
  std::string nu_line;
  for (size_t i = 0; i < nu.size(); ++i) {
    if (i > 0) nu_line += " ";
    nu_line += fmt17(nu[i]);
  }
  text += "natural_occupations=" + nu_line + "\n";
  text += "orbitals_degenerate=" + std::string(bool_str(degenerate != 0)) + "\n";
  text += "w_max=" + fmt17(w_max) + "\n";
  text += "w_max_orbitals=" + fmt17(w_max_orbitals) + "\n";
  text += "full_wick_max=" + fmt17(full_wick) + "\n";
  text += "anomalous_max=" + fmt17(anomalous) + "\n";
  text += "d_f=" + fmt17(d_f) + "\n";
  std::string eps_line;
  for (size_t i = 0; i < eps.size(); ++i) {
    if (i > 0) eps_line += " ";
    eps_line += fmt17(eps[i]);
  }
  text += "fit_eps=" + eps_line + "\n";
  text += "fit_e0=" + fmt17(e0) + "\n";
  text += "fit_evals=" + std::to_string(evals) + "\n";
  text += "fit_converged=" + std::string(bool_str(fit_converged != 0)) + "\n";
  text += "bound_ok=" + std::string(bool_str(bound_ok != 0)) + "\n";
  text += "bound_slack=" + fmt17(bound_slack) + "\n";
  std::fputs(text.c_str(), stdout);

  if (!args.out_path.empty()) {
    spectrum_h to_write;
    if (labeling_ok != 0) {
      check(wd_ed_result_labeled_spectrum(result.get(), to_write.out()));
    } else {
      check(wd_ed_result_spectrum(result.get(), to_write.out()));
    }
    check(wd_spectrum_write(to_write.get(), args.out_path.c_str()));
  }
  return k_exit_ok;
}

/* ---- ed scan ------------------------------------------------------------- */

struct ed_scan_args {
  model_flags model;
  fit_flags fit;
  std::string v_range;
  std::string out_path;
};

std::vector<double> parse_v_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    fail_usage("v-range must be start:stop:step");
  }
  const auto parse = [&text](size_t begin, size_t end) {
    const std::string part = text.substr(begin, end - begin);
    char* tail = nullptr;
    const double value = std::strtod(part.c_str(), &tail);
    if (part.empty() || tail == nullptr || *tail != '\0' || !std::isfinite(value)) {
      fail_usage("v-range must be start:stop:step, got: " + text);
    }
    return value;
  };
  const double start = parse(0, first);
  const double stop = parse(first + 1, second);
  const double step = parse(second + 1, text.size());
  if (step <= 0.0) fail_usage("v-range step must be positive");
  if (stop < start) fail_usage("v-range stop must not be below start");

  std::vector<double> values;
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) values.push_back(start + step * i);
  return values;
}

int cmd_ed_scan(const ed_scan_args& args) {
  const std::vector<double> vs = parse_v_range(args.v_range);
  const wd_fit_options opt = args.fit.to_options();

  std::string csv = "V,w_max,d_f,bound_slack,bound_ok,gap_warning,labeling_ok\n";
  for (const double v : vs) {
    wd_ed_model model = args.model.model;
    model.interaction = v;
    ed_result_h result;
    const wd_status status = wd_ed_run(&model, &opt, result.out());
    if (status != WD_OK) {
      if (status == WD_ERR_INTERNAL) throw cli_failure{k_exit_internal, wd_last_error()};
      // A failed row is recorded rather than aborting the sweep.
      csv += fmt17(v) + ",nan,nan,nan,false,false,false\n";
      continue;
    }
    wick_report_h fit_label;
    check(wd_ed_result_fit_label_report(result.get(), fit_label.out()));
    double w_max = 0.0;
    check(wd_wick_report_w_max(fit_label.get(), &w_max));
    fit_result_h fit;
    check(wd_ed_result_fit(result.get(), fit.out()));
    double d_f = 0.0;
    check(wd_fit_result_d_f(fit.get(), &d_f));
    int bound_ok = 0;
    double slack = 0.0;
    check(wd_ed_result_bound(result.get(), 0.0, &bound_ok, &slack));
    double gap = 0.0;
    int gap_warning = 0;
    check(wd_ed_result_gap(result.get(), &gap, &gap_warning));
    int labeling_ok = 0;
    check(wd_ed_result_labeling(result.get(), &labeling_ok, nullptr));

    csv += fmt17(v) + "," + fmt17(w_max) + "," + fmt17(d_f) + "," + fmt17(slack) + "," +
           bool_str(bound_ok != 0) + "," + bool_str(gap_warning != 0) + "," +
           bool_str(labeling_ok != 0) + "\n";
  }
  emit(args.out_path, csv);
  return k_exit_ok;
}

/* ---- verify -------------------------------------------------------------- */

struct verify_args {
  std::vector<std::string> suites;
  fit_flags fit;
};

struct suite_outcome {
  bool pass;
  std::string line;
};

// 500 random four-mode models with unit-bounded pair couplings; the violation
// must stay below six times the fitted distance plus tolerance on every one.
suite_outcome run_bound_suite(const fit_flags& flags) {
  std::mt19937_64 rng(flags.seed);
  std::uniform_real_distribution<double> single(-2.0, 2.0);
  std::uniform_real_distribution<double> pair(-1.0, 1.0);
  const wd_fit_options opt = flags.to_options();

  constexpr int k_instances = 500;
  constexpr int k_modes = 4;
  int violations = 0;
  double min_slack = HUGE_VAL;
  for (int inst = 0; inst < k_instances; ++inst) {
    mode_energies_h m;
    check(wd_mode_energies_create(k_modes, m.out()));
    for (int k = 0; k < k_modes; ++k) {
      check(wd_mode_energies_set_single(m.get(), k, single(rng)));
    }
    for (int i = 0; i < k_modes; ++i) {
      for (int j = i + 1; j < k_modes; ++j) {
        check(wd_mode_energies_set_pair(m.get(), i, j, pair(rng)));
      }
    }
    wick_report_h report;
    check(wd_wick_report_compute(m.get(), WD_METHOD_EXACT, 0, report.out()));
    double w_max = 0.0;
    check(wd_wick_report_w_max(report.get(), &w_max));
    spectrum_h s;
    check(wd_spectrum_from_mode_energies(m.get(), 1, s.out()));
    fit_result_h fit;
    check(wd_fit_free_spectrum(s.get(), k_modes, &opt, fit.out()));
    double d_f = 0.0;
    check(wd_fit_result_d_f(fit.get(), &d_f));
    int ok = 0;
    double slack = 0.0;
    check(wd_check_bound(w_max, d_f, 1e-6, &ok, &slack));
    if (ok == 0) ++violations;
    if (slack < min_slack) min_slack = slack;
  }
  suite_outcome outcome;
  outcome.pass = (violations == 0);
  outcome.line = "bound: instances=" + std::to_string(k_instances) +
                 " violations=" + std::to_string(violations) +
                 " min_slack=" + fmt17(min_slack);
  return outcome;
}

// Cross-checks the closed two-mode form against enumeration, the printed
// diagnostic against its exact relation to the closed form, and the
// perturbative violation against enumeration at weak coupling.
suite_outcome run_methods_suite(const fit_flags& flags) {
  std::mt19937_64 rng(flags.seed + 1);
  std::uniform_real_distribution<double> eps(-3.0, 3.0);

  double max_closed_diff = 0.0;
  double max_printed_diff = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    const double e1 = eps(rng);
    const double e2 = eps(rng);
    const double e12_coupling = eps(rng);
    mode_energies_h m;
    check(wd_mode_energies_create(2, m.out()));
    check(wd_mode_energies_set_single(m.get(), 0, e1));
    check(wd_mode_energies_set_single(m.get(), 1, e2));
    check(wd_mode_energies_set_pair(m.get(), 0, 1, e12_coupling));
    double exact = 0.0;
    check(wd_violation_exact(m.get(), 0, 1, &exact));
    const double e12 = e1 + e2 + e12_coupling;
    double closed = 0.0, printed = 0.0;
    check(wd_violation_two_mode_closed(e1, e2, e12, 0, &closed));
    check(wd_violation_two_mode_closed(e1, e2, e12, 1, &printed));
    const double closed_diff = std::fabs(closed - exact);
    const double printed_diff =
        std::fabs(printed - std::exp(-e12) * closed) / std::max(1.0, std::fabs(printed));
    if (closed_diff > max_closed_diff) max_closed_diff = closed_diff;
    if (printed_diff > max_printed_diff) max_printed_diff = printed_diff;
  }

  std::uniform_real_distribution<double> base(0.5, 2.5);
  std::uniform_real_distribution<double> sign_draw(-1.0, 1.0);
  double max_pert_err = 0.0;
  for (int inst = 0; inst < 20; ++inst) {
    constexpr int k_modes = 3;
    constexpr double k_scale = 0.01;
    mode_energies_h m;
    check(wd_mode_energies_create(k_modes, m.out()));
    for (int k = 0; k < k_modes; ++k) {
      check(wd_mode_energies_set_single(m.get(), k, base(rng)));
    }
    for (int i = 0; i < k_modes; ++i) {
      for (int j = i + 1; j < k_modes; ++j) {
        check(wd_mode_energies_set_pair(m.get(), i, j, k_scale * sign_draw(rng)));
      }
    }
    for (int i = 0; i < k_modes; ++i) {
      for (int j = i + 1; j < k_modes; ++j) {
        double exact = 0.0, pert = 0.0;
        check(wd_violation_exact(m.get(), i, j, &exact));
        check(wd_violation_perturbative(m.get(), i, j, &pert));
        const double err = std::fabs(pert - exact);
        if (err > max_pert_err) max_pert_err = err;
      }
    }
  }

  suite_outcome outcome;
  outcome.pass = (max_closed_diff <= 1e-12) && (max_printed_diff <= 1e-12) &&
                 (max_pert_err <= 1e-3);
  outcome.line = "methods: closed_vs_exact=" + fmt17(max_closed_diff) +
                 " printed_identity=" + fmt17(max_printed_diff) +
                 " perturbative_err=" + fmt17(max_pert_err);
  return outcome;
}

// A free chain must come out free at every stage: additive level energies,
// vanishing violations and Wick residuals, and a near-zero fitted distance.
suite_outcome run_free_chain_suite(const fit_flags& flags) {
  wd_ed_model model;
  wd_ed_model_init(&model);
  model.length = 10;
  model.filling = 5;
  model.interaction = 0.0;
  model.cut = 5;
  const wd_fit_options opt = flags.to_options();
  ed_result_h result;
  check(wd_ed_run(&model, &opt, result.out()));

  double max_pair = HUGE_VAL;
  int certified = 0;
  int labeling_ok = 0;
  check(wd_ed_result_labeling(result.get(), &labeling_ok, nullptr));
  if (labeling_ok != 0) {
    check(wd_ed_result_pair_additivity(result.get(), &max_pair, &certified, nullptr));
  }
  wick_report_h direct;
  check(wd_ed_result_direct_report(result.get(), direct.out()));
  double w_max = 0.0;
  check(wd_wick_report_w_max(direct.get(), &w_max));
  double full_wick = 0.0, anomalous = 0.0;
  check(wd_ed_result_residuals(result.get(), &full_wick, &anomalous));
  fit_result_h fit;
  check(wd_ed_result_fit(result.get(), fit.out()));
  double d_f = 0.0;
  check(wd_fit_result_d_f(fit.get(), &d_f));

  suite_outcome outcome;
  outcome.pass = (labeling_ok != 0) && (certified > 0) && (max_pair < 1e-10) &&
                 (w_max <= 1e-8) && (full_wick <= 1e-10) && (d_f <= 1e-4);
  outcome.line = "free-chain: max_pair_energy=" + fmt17(max_pair) + " certified_pairs=" +
                 std::to_string(certified) + " w_max=" + fmt17(w_max) +
                 " full_wick_max=" + fmt17(full_wick) + " d_f=" + fmt17(d_f);
  return outcome;
}

int cmd_verify(const verify_args& args) {
  std::vector<std::string> suites = args.suites;
  if (suites.empty()) suites = {"bound", "methods", "free-chain"};
  for (const auto& name : suites) {
    if (name != "bound" && name != "methods" && name != "free-chain") {
      fail_usage("unknown suite: " + name);
    }
  }

  std::string text;
  int failed = 0;
  for (const auto& name : suites) {
    suite_outcome outcome;
    if (name == "bound") {
      outcome = run_bound_suite(args.fit);
    } else if (name == "methods") {
      outcome = run_methods_suite(args.fit);
    } else {
      outcome = run_free_chain_suite(args.fit);
    }
    if (!outcome.pass) ++failed;
    text += std::string(outcome.pass ? "[PASS] " : "[FAIL] ") + outcome.line + "\n";
  }
  text += "verify: " + std::string(failed == 0 ? "PASS" : "FAIL") + " (" +
          std::to_string(suites.size() - static_cast<size_t>(failed)) + "/" +
          std::to_string(suites.size()) + " suites)\n";
  std::fputs(text.c_str(), stdout);
  return failed == 0 ? k_exit_ok : k_exit_internal;
}

/* ---- dispatch ------------------------------------------------------------ */

int run_cli(int argc, char** argv) {
  CLI::App app{"Wick-violation and interaction-distance toolkit"};
  app.set_version_flag("--version", wd_version());
  app.require_subcommand(1);

  auto* two = app.add_subcommand("two-mode", "Closed-form two-mode report");
  two_mode_args two_args;
  two->add_option("--eps1", two_args.eps1, "Single-mode energy 1")->required();
  two->add_option("--eps2", two_args.eps2, "Single-mode energy 2")->required();
  two->add_option("--eps12", two_args.eps12, "Pair coupling")->required();

  auto* wick = app.add_subcommand("wick", "Pairwise violations of a labeled spectrum");
  wick_args wick_arguments;
  wick->add_option("--spectrum", wick_arguments.spectrum_path, "Spectrum file")->required();
  wick->add_option("--method", wick_arguments.method, "exact, two-mode, or perturbative")
      ->check(CLI::IsMember({"exact", "two-mode", "perturbative"}));
  wick->add_flag("--as-printed", wick_arguments.as_printed,
                 "Use the printed-form two-mode diagnostic");

  auto* intdist = app.add_subcommand("intdist", "Fit the nearest free spectrum");
  intdist_args intdist_arguments;
  intdist->add_option("--spectrum", intdist_arguments.spectrum_path, "Spectrum file")
      ->required();
  intdist->add_option("--n-modes", intdist_arguments.n_modes,
                      "Fit mode count (0 = infer from the file)");
  intdist_arguments.fit.add_to(intdist);

  auto* ed = app.add_subcommand("ed", "Exact diagonalization pipeline");
  ed->require_subcommand(1);

  auto* run = ed->add_subcommand("run", "Single pipeline run with manifest");
  ed_run_args run_args;
  run_args.model.add_to(run, true);
  run_args.fit.add_to(run);
  run->add_option("--out", run_args.out_path, "Write the spectrum to this file");

  auto* scan = ed->add_subcommand("scan", "Interaction sweep to CSV");
  ed_scan_args scan_args;
  scan_args.model.add_to(scan, false);
  scan_args.fit.add_to(scan);
  scan->add_option("--v-range", scan_args.v_range, "Interaction sweep start:stop:step")
      ->required();
  scan->add_option("--out", scan_args.out_path, "Write the CSV to this file");

  auto* verify = app.add_subcommand("verify", "Self-check suites");
  verify_args verify_arguments;
  verify->add_option("--suites", verify_arguments.suites,
                     "Comma-separated subset of bound,methods,free-chain")
      ->delimiter(',');
  verify_arguments.fit.add_to(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? k_exit_ok : k_exit_usage;
  }

  if (two->parsed()) return cmd_two_mode(two_args);
  if (wick->parsed()) return cmd_wick(wick_arguments);
  if (intdist->parsed()) return cmd_intdist(intdist_arguments);
  if (ed->parsed() && run->parsed()) {
    run_args.model.apply_config();
    return cmd_ed_run(run_args);
  }
  if (ed->parsed() && scan->parsed()) {
    scan_args.model.apply_config();
    return cmd_ed_scan(scan_args);
  }
  if (verify->parsed()) return cmd_verify(verify_arguments);
  return k_exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const cli_failure& failure) {
    std::fprintf(stderr, "error: %s\n", failure.message.c_str());
    return failure.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return k_exit_internal;
  }
}
