// SPDX-License-Identifier: Apache-2.0
#include "core/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace wickdist {

namespace {

double log_partition(const std::vector<spectrum_level>& levels) {
  double e_min = levels.front().energy;
  for (const auto& lv : levels) e_min = std::min(e_min, lv.energy);
  compensated_sum z;
  for (const auto& lv : levels) z.add(std::exp(-(lv.energy - e_min)));
  return -e_min + std::log(z.value());
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_energy(const std::string& token, std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  require(ec == std::errc() && ptr == end && std::isfinite(value), errc::parse,
          "line " + std::to_string(line_no) + ": bad energy value '" + token + "'");
  return value;
}

}  // namespace

double free_partition_function(const std::vector<double>& single) {
  require(!single.empty(), errc::invalid_argument, "need at least one mode");
  require_all_finite(single, "single-mode energy");
  double z = 1.0;
  for (double eps : single) z *= 1.0 + std::exp(-eps);
  return z;
}

double free_occupation(double eps_k) {
  require_finite(eps_k, "single-mode energy");
  return 1.0 / (1.0 + std::exp(eps_k));
}

ent_spectrum spectrum_from_mode_energies(const mode_energies& m, bool do_normalize) {
  std::vector<double> energies = level_energies(m);
  ent_spectrum s;
  s.n_modes = m.n_modes;
  s.levels.reserve(energies.size());
  for (std::size_t mask = 0; mask < energies.size(); ++mask) {
    spectrum_level lv;
    lv.energy = energies[mask];
    lv.has_label = true;
    lv.label = static_cast<std::uint32_t>(mask);
    s.levels.push_back(lv);
  }
  if (do_normalize) {
    const double ln_z = log_partition(s.levels);
    for (auto& lv : s.levels) lv.energy += ln_z;
  }
  for (auto& lv : s.levels) lv.probability = std::exp(-lv.energy);
  s.normalized = do_normalize || std::abs(probability_sum(s) - 1.0) <= 1e-12;
  return s;
}

mode_energies spectrum_to_mode_energies(const ent_spectrum& s) {
  require(!s.levels.empty(), errc::malformed_spectrum, "spectrum has no levels");
  for (const auto& lv : s.levels) {
    require(lv.has_label, errc::malformed_spectrum, "spectrum is not fully labeled");
  }
  std::size_t count = s.levels.size();
  require(std::has_single_bit(count), errc::malformed_spectrum,
          "labeled spectrum must have a power-of-two level count");
  const int n = s.n_modes > 0 ? s.n_modes : std::countr_zero(count);
  require(count == (std::size_t{1} << n), errc::malformed_spectrum,
          "level count does not match the mode count");

  std::vector<double> energies(count, 0.0);
  std::vector<bool> seen(count, false);
  for (const auto& lv : s.levels) {
    require(lv.label < count, errc::malformed_spectrum, "label references a mode out of range");
    require(!seen[lv.label], errc::malformed_spectrum,
            "duplicate label " + format_label(lv.label, n));
    seen[lv.label] = true;
    energies[lv.label] = lv.energy;
  }
  return mode_energies_from_levels(energies);
}

void normalize(ent_spectrum& s) {
  require(!s.levels.empty(), errc::invalid_argument, "cannot normalize an empty spectrum");
  const double ln_z = log_partition(s.levels);
  for (auto& lv : s.levels) {
    lv.energy += ln_z;
    lv.probability = std::exp(-lv.energy);
  }
  s.normalized = true;
}

double probability_sum(const ent_spectrum& s) {
  compensated_sum total;
  for (const auto& lv : s.levels) total.add(lv.probability);
  return total.value();
}

std::vector<double> sorted_probabilities(const ent_spectrum& s) {
  std::vector<double> p;
  p.reserve(s.levels.size());
  for (const auto& lv : s.levels) p.push_back(lv.probability);
  std::sort(p.begin(), p.end(), std::greater<double>());
  return p;
}

// ---- text format ----------------------------------------------------------

ent_spectrum read_spectrum(std::istream& in) {
  ent_spectrum s;
  std::string line;
  std::size_t line_no = 0;
  int label_len = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    spectrum_level lv;
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      lv.energy = parse_energy(body, line_no);
    } else {
      const std::string bits = trim(body.substr(0, comma));
      const std::string rest = trim(body.substr(comma + 1));
      require(rest.find(',') == std::string::npos, errc::malformed_spectrum,
              "line " + std::to_string(line_no) + ": expected `label_bits,energy`");
      require(!bits.empty(), errc::malformed_spectrum,
              "line " + std::to_string(line_no) + ": empty label");
      require(static_cast<int>(bits.size()) <= k_max_modes, errc::capacity,
              "line " + std::to_string(line_no) + ": label longer than mode cap");
      lv.has_label = true;
      try {
        lv.label = parse_label(bits);
      } catch (const error& e) {
        fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      }
      lv.energy = parse_energy(rest, line_no);
      if (label_len < 0) label_len = static_cast<int>(bits.size());
      require(static_cast<int>(bits.size()) == label_len, errc::malformed_spectrum,
              "line " + std::to_string(line_no) + ": inconsistent label length");
    }
    lv.probability = std::exp(-lv.energy);
    s.levels.push_back(lv);
  }
  require(!s.levels.empty(), errc::malformed_spectrum, "spectrum file has no levels");
  const bool labeled = label_len >= 0;
  for (const auto& lv : s.levels) {
    require(lv.has_label == labeled, errc::malformed_spectrum,
            "labeled and unlabeled lines cannot be mixed");
  }
  s.n_modes = labeled ? label_len : 0;
  s.normalized = std::abs(probability_sum(s) - 1.0) <= 1e-12;
  return s;
}

ent_spectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::io, "cannot open spectrum file '" + path + "'");
  return read_spectrum(in);
}

void write_spectrum(std::ostream& out, const ent_spectrum& s) {
  char buf[64];
  for (const auto& lv : s.levels) {
    std::snprintf(buf, sizeof buf, "%.17g", lv.energy);
    if (lv.has_label) {
      out << format_label(lv.label, s.n_modes) << ',' << buf << '\n';
    } else {
      out << buf << '\n';
    }
  }
}

void write_spectrum_file(const std::string& path, const ent_spectrum& s) {
  std::ofstream out(path);
  require(out.good(), errc::io, "cannot open output file '" + path + "'");
  write_spectrum(out, s);
  out.flush();
  require(out.good(), errc::io, "failed writing spectrum file '" + path + "'");
}

std::string format_label(std::uint32_t mask, int n_modes) {
  std::string bits(static_cast<std::size_t>(n_modes), '0');
  for (int i = 0; i < n_modes; ++i) {
    if (mask >> i & 1u) bits[static_cast<std::size_t>(i)] = '1';
  }
  return bits;
}

std::uint32_t parse_label(const std::string& bits) {
  require(!bits.empty() && static_cast<int>(bits.size()) <= k_max_modes, errc::parse,
          "label must have between 1 and 20 bits");
  std::uint32_t mask = 0;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    const char c = bits[p];
    require(c == '0' || c == '1', errc::parse, std::string("bad label character '") + c + "'");
    if (c == '1') mask |= 1u << p;
  }
  return mask;
}

}  // namespace wickdist
