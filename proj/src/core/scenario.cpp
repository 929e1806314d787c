// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/units.hpp"

namespace ransim {

std::string PowerLevel::label() const {
  if (sleep) return "-inf";
  return csv::format_double(dbm);
}

void ScenarioSpec::validate(int n_bs) const {
  std::set<int> seen;
  for (int id : variable_cells) {
    if (id < 0 || id >= n_bs)
      throw ConfigError("scenario '" + name + "' references cell " +
                        std::to_string(id) + " outside 0.." + std::to_string(n_bs - 1));
    if (!seen.insert(id).second)
      throw ConfigError("scenario '" + name + "' lists cell " + std::to_string(id) +
                        " twice");
  }
}

const std::vector<ScenarioSpec>& builtin_scenarios() {
  static const std::vector<ScenarioSpec> kScenarios = {
      {"centre", {9}},
      {"inner-ring-antipodal", {8, 10}},
      {"inner-ring-alternate", {4, 10, 13}},
      {"central-triad", {4, 8, 9}},
  };
  return kScenarios;
}

ScenarioSpec parse_scenario(const std::string& text) {
  if (text.empty() || text == "baseline") return ScenarioSpec{"baseline", {}};
  for (const ScenarioSpec& s : builtin_scenarios())
    if (s.name == text) return s;

  // Comma-separated cell ids.
  ScenarioSpec spec;
  std::vector<int> ids;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t pos = text.find(',', start);
    const std::string tok =
        text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("unknown scenario '" + text +
                        "' (expected a built-in name or comma-separated cell ids)");
    ids.push_back(std::stoi(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  std::sort(ids.begin(), ids.end());
  spec.variable_cells = std::move(ids);
  spec.name = "custom";
  for (int id : spec.variable_cells) spec.name += "-" + std::to_string(id);
  return spec;
}

double scenario_power_w_from_dbm(double dbm, double p_max_w) {
  if (!std::isfinite(dbm)) throw ConfigError("power level must be finite dBm (or sleep)");
  const double p_max_dbm = w_to_dbm(p_max_w);
  // The nominal grid labels the p_max level by its rounded dBm rating
  // (20 W <-> "43 dBm"); accept that label as exactly p_max.
  if (std::abs(dbm - p_max_dbm) <= 0.05) return p_max_w;
  if (dbm > p_max_dbm)
    throw ConfigError("power level " + csv::format_double(dbm) + " dBm exceeds p_max (" +
                      csv::format_double(p_max_dbm) + " dBm)");
  return dbm_to_w(dbm);
}

std::vector<PowerLevel> default_power_grid() {
  std::vector<PowerLevel> grid;
  for (int dbm = 43; dbm >= 1; dbm -= 3) grid.push_back(PowerLevel{false, double(dbm)});
  grid.push_back(PowerLevel{true, 0.0});
  return grid;
}

}  // namespace ransim
