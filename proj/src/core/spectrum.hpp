// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/mode_energies.hpp"

namespace wickdist {

struct spectrum_level {
  double energy = 0.0;
  double probability = 0.0;  // e^{-energy}, kept consistent with energy
  bool has_label = false;
  std::uint32_t label = 0;  // occupation bitmask, bit i = mode i
  bool clamped = false;     // probability was below the eigenvalue floor
};

// List of entanglement levels, optionally labeled by occupation patterns.
struct ent_spectrum {
  int n_modes = 0;  // 0 when unknown (unlabeled input of arbitrary length)
  bool normalized = false;
  std::vector<spectrum_level> levels;
};

// Z = prod_i (1 + e^{-eps_i}) for a free model with the given single-mode energies.
double free_partition_function(const std::vector<double>& single);

// <n_k> = 1 / (1 + e^{eps_k}).
double free_occupation(double eps_k);

// Enumerates all 2^N levels, labels ascending by bitmask. When normalize is set,
// ln(sum e^{-E}) is folded into the overall shift so probabilities sum to 1.
ent_spectrum spectrum_from_mode_energies(const mode_energies& m, bool normalize);

// Inverse of the above; requires a complete labeled spectrum (all 2^N distinct labels).
mode_energies spectrum_to_mode_energies(const ent_spectrum& s);

// Shifts all energies by ln(sum e^{-E}) so probabilities sum to 1.
void normalize(ent_spectrum& s);

double probability_sum(const ent_spectrum& s);

// Probabilities sorted descending (the pairing order used by the trace distance).
std::vector<double> sorted_probabilities(const ent_spectrum& s);

// ---- text format ----------------------------------------------------------
// One level per line: `label_bits,energy` or bare `energy`; `#` starts a comment.
// Labels are bitstrings whose leftmost character is mode 0; all labels must agree
// in length, and labeled/unlabeled lines cannot be mixed.

ent_spectrum read_spectrum(std::istream& in);
ent_spectrum read_spectrum_file(const std::string& path);
void write_spectrum(std::ostream& out, const ent_spectrum& s);
void write_spectrum_file(const std::string& path, const ent_spectrum& s);

std::string format_label(std::uint32_t mask, int n_modes);
std::uint32_t parse_label(const std::string& bits);

}  // namespace wickdist
