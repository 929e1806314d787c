// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace ransim {

// Immutable deployment parameters of the homogeneous macro layer.
struct NetworkConfig {
  double carrier_freq_hz = 3.5e9;
  double bandwidth_hz = 10.0e6;
  int n_bs = 19;
  double bs_height_m = 25.0;
  double p_max_w = 20.0;
  double isd_m = 500.0;
  double ue_density_per_km2 = 1256.0;
  double ue_height_m = 1.5;
  // When set, exactly this many UEs are placed instead of a Poisson draw.
  std::optional<std::uint64_t> fixed_ue_count;

  void validate() const;  // throws ConfigError
};

struct Site {
  int cell_id;
  double x_m;
  double y_m;
  double z_m;
};

struct SitePlan {
  std::vector<Site> sites;  // ordered by cell_id
};

struct Region {
  std::vector<Vec2> polygon;  // CCW
  double area_km2 = 0.0;
};

// Centred hexagonal grid with n_bs = 3k(k-1)+1 sites (1, 7, 19, 37, ...),
// numbered row-major from the bottom row, left to right.  For n_bs = 19 the
// rows hold 3,4,5,4,3 sites, the central site is cell 9, its middle-row
// neighbours are 8 and 10, and the ring at one ISD is {4,5,8,10,13,14}.
SitePlan build_hex_grid(const NetworkConfig& config);

// Convex hull of the sites pushed outward by isd/2 (mitred offset), so every
// site's nominal coverage lies inside; a single site yields a hexagon of
// circumradius isd/2 around it.
Region default_region(const SitePlan& plan, const NetworkConfig& config);

// Homogeneous PPP over the region: count ~ Poisson(density * area), positions
// i.i.d. uniform (rejection from the bounding box), fully determined by seed.
std::vector<Vec3> place_ues(const Region& region, double density_per_km2,
                            double height_m, std::uint64_t seed);

// As above but with a fixed count (the fixed_ue_count test override).
std::vector<Vec3> place_ues_fixed(const Region& region, std::uint64_t count,
                                  double height_m, std::uint64_t seed);

void write_sites_csv(const SitePlan& plan, const std::string& path);
void write_region_csv(const Region& region, const std::string& path);
void write_ues_csv(const std::vector<Vec3>& ues, const std::string& path);

}  // namespace ransim
