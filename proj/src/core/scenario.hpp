// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ransim {

// One power level of a sweep: a finite dBm value or sleep.
struct PowerLevel {
  bool sleep = false;
  double dbm = 0.0;  // meaningful when !sleep

  // Stable key used in file names, CSV and JSON ("-inf" for sleep).
  std::string label() const;
};

// Variable-power cell set (K^v); the remaining cells form the static set (K^s).
struct ScenarioSpec {
  std::string name;
  std::vector<int> variable_cells;  // sorted, unique

  bool is_baseline() const { return variable_cells.empty(); }
  void validate(int n_bs) const;  // throws ConfigError
};

// Built-in names: baseline, centre, inner-ring-antipodal, inner-ring-alternate,
// central-triad; otherwise a comma-separated cell-id list ("4,10,13").
ScenarioSpec parse_scenario(const std::string& text);

const std::vector<ScenarioSpec>& builtin_scenarios();  // the four named ones

// Requested dBm -> radiated watts.  Values within 0.05 dB of p_max's dBm
// rating map to exactly p_max (the nominal top-of-grid label); anything
// higher is rejected.
double scenario_power_w_from_dbm(double dbm, double p_max_w);

// Default sweep grid: 43,40,...,1 dBm (15 finite levels) plus sleep.
std::vector<PowerLevel> default_power_grid();

}  // namespace ransim
