// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace ransim {

inline constexpr double kThermalNoiseDbmHz = -174.0;

// Power conversions.  Internal arithmetic is in watts; dBm appears only at
// I/O boundaries.
inline double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double w_to_dbm(double w) {
  if (w <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(w) + 30.0;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double x) {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(x);
}

}  // namespace ransim
