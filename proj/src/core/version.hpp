// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace wickdist {

inline constexpr const char* k_version = "0.1.0";

}  // namespace wickdist
