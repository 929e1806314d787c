// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

namespace ransim {

// Component-level BS power model parameters.  Defaults are the reference
// macro-cell values: 6 transceiver chains, 130 W static draw, 31.1% PA
// efficiency, and feeder/DC/mains/cooling loss fractions.
struct PowerModelParams {
  int n_trx = 6;
  int n_ant = 1;
  double p0_w = 130.0;
  double eta_pa = 0.311;
  double p_rf_w = 12.9;
  double p_bb_w = 29.6;
  double sigma_feed = 0.5;
  double sigma_dc = 0.075;
  double sigma_ms = 0.09;
  double sigma_cool = 0.10;
  // When set, a sleeping cell consumes this flat wattage instead of the
  // model's zero-load value.
  std::optional<double> deep_sleep_w;

  void validate() const;  // throws ConfigError
};

// Load-dependent draw:
//   [p_tx/(eta_pa*(1-sigma_feed)) + p_rf + p_bb] /
//     [(1-sigma_dc)*(1-sigma_ms)*(1-sigma_cool)]
// Domain: 0 <= p_tx_w <= p_max_w.
double load_dependent_power_w(double p_tx_w, const PowerModelParams& params,
                              double p_max_w);

// Whole-BS consumption: n_trx * n_ant * (p0 + load_dependent_power(p_tx)).
double bs_power_w(double p_tx_w, const PowerModelParams& params, double p_max_w);

// Consumption of a sleeping cell (p_tx = 0), honouring deep_sleep_w.
double sleeping_power_w(const PowerModelParams& params, double p_max_w);

}  // namespace ransim
