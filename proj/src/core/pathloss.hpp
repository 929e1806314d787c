// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/geometry.hpp"

namespace ransim {

enum class PathlossVariant {
  UmaNlos,  // 3GPP TR 36.873 Table 7.2-1 urban macro, max(LoS, NLoS')
  UmaLos,   // the LoS branch alone
};

struct PathlossModel {
  PathlossVariant variant = PathlossVariant::UmaNlos;
  double building_height_m = 20.0;  // h
  double street_width_m = 20.0;     // W

  void validate() const;  // throws ConfigError
};

// Pathloss in dB between tx and rx at carrier freq_hz.  Valid for 3D distance
// >= 10 m, 2D distance <= 5 km and 0.5..6 GHz; out-of-range input raises a
// domain error, it is never clamped.
double pathloss_db(const PathlossModel& model, const Vec3& tx, const Vec3& rx,
                   double freq_hz);

// Free-space reference at the same 3D distance (test/diagnostic helper).
double free_space_pathloss_db(double distance_3d_m, double freq_hz);

}  // namespace ransim
