// SPDX-License-Identifier: Apache-2.0
// Drives the installed CLI binary as a subprocess: exit codes, printed
// formats, config handling, and determinism of machine-readable output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef WICKDIST_CLI_PATH
#error "WICKDIST_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

run_result run_cli(const std::string& args) {
  const std::string command = std::string(WICKDIST_CLI_PATH) + " " + args + " 2>&1";
  std::FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  run_result r;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    r.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Value of a `key=value` manifest line.
std::string manifest_value(const std::string& text, const std::string& key) {
  const std::string prefix = key + "=";
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string line = text.substr(pos, end - pos);
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return {};
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(contains(run_cli("--help").output, "two-mode"));
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("two mode subcommand prints the worked report") {
  const run_result r = run_cli("two-mode --eps1 1 --eps2 2 --eps12 0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Z         = 1.53341210783"));
  CHECK(contains(r.output, "<n_1>     = 0.25960198342"));
  CHECK(contains(r.output, "<n_2>     = 0.107950541028"));
  CHECK(contains(r.output, "<n_1 n_2> = 0.0196929339922"));
  CHECK(contains(r.output, "W         = 0.00833124056996"));
  CHECK(contains(r.output, "W_printed = 0.000251581665875"));

  CHECK(run_cli("two-mode --eps1 1 --eps2 2").exit_code == 2);
  CHECK(run_cli("two-mode --eps1 x --eps2 2 --eps12 0").exit_code == 2);
}

TEST_CASE("intdist fits a free file to zero and reports line errors") {
  const std::string path = temp_file("wd_cli_free.txt");
  {
    // Normalized two-mode free spectrum with eps = (1, 2).
    std::ofstream out(path);
    out << "00,0.44018969856119535\n"
        << "10,1.4401896985611953\n"
        << "01,2.4401896985611953\n"
        << "11,3.4401896985611953\n";
  }
  const run_result r = run_cli("intdist --spectrum " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "n_modes   = 2"));
  CHECK(contains(r.output, "converged = true"));
  const double d_f = std::strtod(manifest_value(r.output, "d_f       ").c_str(), nullptr);
  CHECK(d_f <= 1e-6);
  std::filesystem::remove(path);

  const std::string empty = temp_file("wd_cli_empty.txt");
  {
    std::ofstream out(empty);
    out << "# no levels\n";
  }
  CHECK(run_cli("intdist --spectrum " + empty).exit_code == 2);
  std::filesystem::remove(empty);

  const std::string broken = temp_file("wd_cli_broken.txt");
  {
    std::ofstream out(broken);
    out << "0.5\nnot-a-number\n";
  }
  const run_result bad = run_cli("intdist --spectrum " + broken);
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "line 2"));
  std::filesystem::remove(broken);

  CHECK(run_cli("intdist --spectrum " + temp_file("wd_cli_missing.txt")).exit_code == 2);
}

TEST_CASE("wick subcommand reports pairwise violations of a labeled file") {
  const std::string path = temp_file("wd_cli_wick.txt");
  {
    std::ofstream out(path);
    out << "00,0.0\n10,1.0\n01,2.0\n11,3.5\n";
  }
  const run_result r = run_cli("wick --spectrum " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "W[1,2]"));
  CHECK(contains(r.output, "0.00833124"));
  std::filesystem::remove(path);
}

TEST_CASE("ed run emits a manifest and a consumable spectrum file") {
  const std::string out_path = temp_file("wd_cli_ed_spectrum.txt");
  const run_result r =
      run_cli("ed run --L 6 --M 3 --cut 3 --V 0 --out " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(manifest_value(r.output, "L") == "6");
  CHECK(manifest_value(r.output, "boundary") == "open");
  CHECK(manifest_value(r.output, "labeling_ok") == "true");
  CHECK(manifest_value(r.output, "bound_ok") == "true");
  CHECK(manifest_value(r.output, "fit_converged") == "true");
  const double w_max = std::strtod(manifest_value(r.output, "w_max").c_str(), nullptr);
  CHECK(w_max <= 1e-8);

  // The emitted labeled spectrum feeds straight back into intdist.
  const run_result fit = run_cli("intdist --spectrum " + out_path);
  CHECK(fit.exit_code == 0);
  CHECK(contains(fit.output, "n_modes   = 3"));
  std::filesystem::remove(out_path);
}

TEST_CASE("ed run config file is read and flags override it") {
  const std::string config = temp_file("wd_cli_config.ini");
  {
    std::ofstream out(config);
    out << "L=6\nM=3\ncut=3\nV=2.0\n";
  }
  const run_result base = run_cli("ed run --config " + config);
  CHECK(base.exit_code == 0);
  CHECK(manifest_value(base.output, "V") == "2");

  const run_result overridden = run_cli("ed run --config " + config + " --V 0");
  CHECK(overridden.exit_code == 0);
  CHECK(manifest_value(overridden.output, "V") == "0");

  {
    std::ofstream out(config);
    out << "L=6\nM=3\nbogus_key=1\n";
  }
  CHECK(run_cli("ed run --config " + config).exit_code == 2);
  std::filesystem::remove(config);
}

TEST_CASE("ed scan emits one row per coupling and survives label failures") {
  const run_result r = run_cli("ed scan --L 6 --M 3 --cut 3 --v-range 0:1:0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "V,w_max,d_f,bound_slack,bound_ok,gap_warning,labeling_ok"));
  // Header plus three rows, LF line endings.
  int lines = 0;
  for (char c : r.output) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 4);

  const run_result single = run_cli("ed scan --L 6 --M 3 --cut 3 --v-range 0:0:1");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.output, "true,false,true"));

  CHECK(run_cli("ed scan --L 6 --M 3 --v-range 1:0:0.5").exit_code == 2);
  CHECK(run_cli("ed scan --L 6 --M 3 --v-range 0:1:-0.5").exit_code == 2);
  CHECK(run_cli("ed scan --L 6 --M 3 --v-range 0:1").exit_code == 2);
  CHECK(run_cli("ed scan --L 6 --M 3 --v-range a:b:c").exit_code == 2);
}

TEST_CASE("verify suites can be selected and reject unknown names") {
  const run_result methods = run_cli("verify --suites methods");
  CHECK(methods.exit_code == 0);
  CHECK(contains(methods.output, "[PASS] methods:"));
  CHECK(!contains(methods.output, "bound:"));
  CHECK(contains(methods.output, "verify: PASS (1/1 suites)"));

  CHECK(run_cli("verify --suites nonsense").exit_code == 2);
}

TEST_CASE("scan output is byte identical across runs") {
  const std::string args = "ed scan --L 6 --M 3 --cut 3 --v-range 0:1.5:0.75 --seed 7";
  const run_result first = run_cli(args);
  const run_result second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.size() > 0);
}
