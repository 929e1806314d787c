// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
//
// Urban-macro pathloss per 3GPP TR 36.873 Table 7.2-1 (3D-UMa).  Effective
// antenna heights subtract the 1 m environment height; the NLoS value is the
// maximum of the LoS loss and the NLoS formula at the same geometry.
#include "core/pathloss.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace ransim {

namespace {
constexpr double kSpeedOfLight = 3.0e8;  // propagation constant used by the standard
constexpr double kEnvHeight = 1.0;       // UMa effective environment height (m)
}  // namespace

void PathlossModel::validate() const {
  if (!(building_height_m >= 5.0 && building_height_m <= 50.0))
    throw ConfigError("link.building_height_m must be within 5..50 m");
  if (!(street_width_m >= 5.0 && street_width_m <= 50.0))
    throw ConfigError("link.street_width_m must be within 5..50 m");
}

namespace {

double uma_los_db(double d2d, double d3d, double h_bs, double h_ut, double f_ghz,
                  double f_hz) {
  const double h_bs_eff = h_bs - kEnvHeight;
  const double h_ut_eff = h_ut - kEnvHeight;
  const double d_bp = 4.0 * h_bs_eff * h_ut_eff * f_hz / kSpeedOfLight;
  if (d2d <= d_bp)
    return 22.0 * std::log10(d3d) + 28.0 + 20.0 * std::log10(f_ghz);
  return 40.0 * std::log10(d3d) + 28.0 + 20.0 * std::log10(f_ghz) -
         9.0 * std::log10(d_bp * d_bp + (h_bs - h_ut) * (h_bs - h_ut));
}

double uma_nlos_prime_db(double d3d, double h_bs, double h_ut, double f_ghz,
                         double w, double h) {
  return 161.04 - 7.1 * std::log10(w) + 7.5 * std::log10(h) -
         (24.37 - 3.7 * (h / h_bs) * (h / h_bs)) * std::log10(h_bs) +
         (43.42 - 3.1 * std::log10(h_bs)) * (std::log10(d3d) - 3.0) +
         20.0 * std::log10(f_ghz) -
         (3.2 * std::log10(17.625) * std::log10(17.625) - 4.97) -
         0.6 * (h_ut - 1.5);
}

}  // namespace

double pathloss_db(const PathlossModel& model, const Vec3& tx, const Vec3& rx,
                   double freq_hz) {
  const double d2d = distance_2d(tx, rx);
  const double d3d = distance_3d(tx, rx);
  if (!(d3d >= 10.0))
    throw DomainError("pathloss: 3D distance " + std::to_string(d3d) +
                      " m is below the 10 m model range");
  if (!(d2d <= 5000.0))
    throw DomainError("pathloss: 2D distance " + std::to_string(d2d) +
                      " m exceeds the 5 km model range");
  if (!(freq_hz >= 0.5e9 && freq_hz <= 6.0e9))
    throw DomainError("pathloss: carrier " + std::to_string(freq_hz) +
                      " Hz outside 0.5..6 GHz");

  const double f_ghz = freq_hz / 1e9;
  const double h_bs = tx.z;
  const double h_ut = rx.z;
  const double los = uma_los_db(d2d, d3d, h_bs, h_ut, f_ghz, freq_hz);
  switch (model.variant) {
    case PathlossVariant::UmaLos:
      return los;
    case PathlossVariant::UmaNlos:
      return std::max(los, uma_nlos_prime_db(d3d, h_bs, h_ut, f_ghz,
                                             model.street_width_m,
                                             model.building_height_m));
  }
  throw DomainError("unknown pathloss variant");
}

double free_space_pathloss_db(double distance_3d_m, double freq_hz) {
  // 20 log10(4*pi*d*f/c)
  return 20.0 * std::log10(4.0 * M_PI * distance_3d_m * freq_hz / 2.99792458e8);
}

}  // namespace ransim
