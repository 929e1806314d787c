// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "core/errors.hpp"
#include "core/units.hpp"

namespace ransim {

// Per-link gain/noise budget.
struct LinkBudget {
  double g_mimo_db = 0.0;
  double g_ant_db = 0.0;
  double noise_figure_db = 9.0;
  double thermal_noise_dbm_hz = kThermalNoiseDbmHz;

  // Noise power over `bandwidth_hz`: thermal density + 10*log10(B) + NF, in dBm.
  double noise_dbm(double bandwidth_hz) const {
    return thermal_noise_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  }
  double noise_w(double bandwidth_hz) const { return dbm_to_w(noise_dbm(bandwidth_hz)); }
};

// Received reference-signal power: gains plus transmit power minus pathloss,
// all in dB arithmetic.
inline double rsrp_dbm(double p_tx_dbm, const LinkBudget& budget, double pl_db) {
  return budget.g_mimo_db + budget.g_ant_db + p_tx_dbm - pl_db;
}

// Serving power over interference-plus-noise, linear units.
inline double sinr_linear(double rx_w, double interference_w, double noise_w) {
  if (!(noise_w > 0.0)) throw DomainError("noise power must be > 0 W");
  if (rx_w < 0.0 || interference_w < 0.0)
    throw DomainError("received/interference power must be >= 0 W");
  return rx_w / (interference_w + noise_w);
}

}  // namespace ransim
