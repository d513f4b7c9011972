// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wickdist {

// Error categories; numeric values mirror wd_status in the public header.
enum class errc {
  invalid_argument = 1,
  capacity = 2,
  malformed_spectrum = 3,
  unsupported_model = 4,
  ambiguous_label = 5,
  label_collision = 6,
  io = 7,
  parse = 8,
  internal = 9,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace wickdist
