// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/energy.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace ransim {

void PowerModelParams::validate() const {
  if (n_trx < 1) throw ConfigError("energy.n_trx must be >= 1");
  if (n_ant < 1) throw ConfigError("energy.n_ant must be >= 1");
  if (!(eta_pa > 0.0 && eta_pa <= 1.0))
    throw ConfigError("energy.eta_pa must be within (0, 1]");
  for (auto [v, name] : {std::pair{sigma_feed, "sigma_feed"},
                         std::pair{sigma_dc, "sigma_dc"},
                         std::pair{sigma_ms, "sigma_ms"},
                         std::pair{sigma_cool, "sigma_cool"}}) {
    if (!(v >= 0.0 && v < 1.0))
      throw ConfigError(std::string("energy.") + name + " must be within [0, 1)");
  }
  for (auto [v, name] : {std::pair{p0_w, "p0_w"}, std::pair{p_rf_w, "p_rf_w"},
                         std::pair{p_bb_w, "p_bb_w"}}) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ConfigError(std::string("energy.") + name + " must be >= 0");
  }
  if (deep_sleep_w && !(*deep_sleep_w >= 0.0))
    throw ConfigError("energy.deep_sleep_w must be >= 0");
}

double load_dependent_power_w(double p_tx_w, const PowerModelParams& params,
                              double p_max_w) {
  if (!(p_tx_w >= 0.0))
    throw DomainError("transmit power must be >= 0 W, got " + std::to_string(p_tx_w));
  if (p_tx_w > p_max_w)
    throw DomainError("transmit power " + std::to_string(p_tx_w) +
                      " W exceeds p_max " + std::to_string(p_max_w) + " W");
  const double amplifier = p_tx_w / (params.eta_pa * (1.0 - params.sigma_feed));
  const double losses =
      (1.0 - params.sigma_dc) * (1.0 - params.sigma_ms) * (1.0 - params.sigma_cool);
  return (amplifier + params.p_rf_w + params.p_bb_w) / losses;
}

double bs_power_w(double p_tx_w, const PowerModelParams& params, double p_max_w) {
  return params.n_trx * params.n_ant *
         (params.p0_w + load_dependent_power_w(p_tx_w, params, p_max_w));
}

double sleeping_power_w(const PowerModelParams& params, double p_max_w) {
  if (params.deep_sleep_w) return *params.deep_sleep_w;
  return bs_power_w(0.0, params, p_max_w);
}

}  // namespace ransim
