// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/topology.hpp"

#include <cmath>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ransim {

void NetworkConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError(std::string("network.") + name + " must be strictly positive");
  };
  positive(carrier_freq_hz, "carrier_freq_hz");
  positive(bandwidth_hz, "bandwidth_hz");
  positive(bs_height_m, "bs_height_m");
  positive(p_max_w, "p_max_w");
  positive(isd_m, "isd_m");
  positive(ue_density_per_km2, "ue_density_per_km2");
  positive(ue_height_m, "ue_height_m");
  if (n_bs < 1) throw ConfigError("network.n_bs must be >= 1");
}

namespace {

// n = 3k(k-1)+1 for some ring count k >= 1, else no centred layout exists.
int hex_rings_for(int n_bs) {
  for (int k = 1; k <= 64; ++k) {
    const int n = 3 * k * (k - 1) + 1;
    if (n == n_bs) return k;
    if (n > n_bs) break;
  }
  throw DomainError("n_bs = " + std::to_string(n_bs) +
                    " has no centred hexagonal layout (expected 1, 7, 19, 37, ...)");
}

}  // namespace

SitePlan build_hex_grid(const NetworkConfig& config) {
  config.validate();
  const int k = hex_rings_for(config.n_bs);
  const double d = config.isd_m;
  const double row_dy = d * std::sqrt(3.0) / 2.0;

  SitePlan plan;
  plan.sites.reserve(static_cast<size_t>(config.n_bs));
  int next_id = 0;
  const int n_rows = 2 * k - 1;
  for (int r = 0; r < n_rows; ++r) {
    const int count = (2 * k - 1) - std::abs(r - (k - 1));
    const double y = (r - (k - 1)) * row_dy;
    for (int i = 0; i < count; ++i) {
      const double x = (i - (count - 1) / 2.0) * d;
      plan.sites.push_back(Site{next_id++, x, y, config.bs_height_m});
    }
  }
  return plan;
}

Region default_region(const SitePlan& plan, const NetworkConfig& config) {
  if (plan.sites.empty()) throw DomainError("default_region requires a non-empty plan");
  const double margin = config.isd_m / 2.0;

  std::vector<Vec2> pts;
  pts.reserve(plan.sites.size());
  for (const Site& s : plan.sites) pts.push_back(Vec2{s.x_m, s.y_m});
  std::vector<Vec2> hull = convex_hull(std::move(pts));

  Region region;
  if (hull.size() >= 3) {
    region.polygon = offset_convex_polygon(hull, margin);
  } else {
    // Degenerate hull (single site): hexagon of circumradius isd/2 around it.
    const Vec2 c = hull.empty() ? Vec2{plan.sites[0].x_m, plan.sites[0].y_m} : hull[0];
    region.polygon.reserve(6);
    for (int i = 0; i < 6; ++i) {
      const double a = i * (M_PI / 3.0);
      region.polygon.push_back(Vec2{c.x + margin * std::cos(a), c.y + margin * std::sin(a)});
    }
  }
  region.area_km2 = polygon_area(region.polygon) / 1e6;
  if (!(region.area_km2 > 0.0)) throw RuntimeError("region area must be positive");
  return region;
}

namespace {

std::vector<Vec3> sample_uniform(const Region& region, std::uint64_t count,
                                 double height_m, Rng& rng) {
  const BoundingBox bb = bounding_box(region.polygon);
  std::vector<Vec3> out;
  out.reserve(count);
  while (out.size() < count) {
    const double x = rng.uniform(bb.min_x, bb.max_x);
    const double y = rng.uniform(bb.min_y, bb.max_y);
    if (point_in_convex_polygon(region.polygon, x, y)) out.push_back(Vec3{x, y, height_m});
  }
  return out;
}

}  // namespace

std::vector<Vec3> place_ues(const Region& region, double density_per_km2,
                            double height_m, std::uint64_t seed) {
  if (!(density_per_km2 > 0.0)) throw DomainError("UE density must be > 0");
  if (!(region.area_km2 > 0.0)) throw DomainError("cannot place UEs in a zero-area region");
  Rng rng(seed);
  const std::uint64_t count = rng.poisson(density_per_km2 * region.area_km2);
  return sample_uniform(region, count, height_m, rng);
}

std::vector<Vec3> place_ues_fixed(const Region& region, std::uint64_t count,
                                  double height_m, std::uint64_t seed) {
  if (!(region.area_km2 > 0.0)) throw DomainError("cannot place UEs in a zero-area region");
  Rng rng(seed);
  return sample_uniform(region, count, height_m, rng);
}

void write_sites_csv(const SitePlan& plan, const std::string& path) {
  csv::Writer w(path);
  w.write_line("cell_id,x_m,y_m,z_m");
  for (const Site& s : plan.sites) {
    std::string& row = w.row_buffer();
    csv::append_int(row, s.cell_id);
    row += ',';
    csv::append_double(row, s.x_m);
    row += ',';
    csv::append_double(row, s.y_m);
    row += ',';
    csv::append_double(row, s.z_m);
    w.commit_row();
  }
  w.close();
}

void write_region_csv(const Region& region, const std::string& path) {
  csv::Writer w(path);
  w.write_line("vertex_id,x_m,y_m");
  for (size_t i = 0; i < region.polygon.size(); ++i) {
    std::string& row = w.row_buffer();
    csv::append_uint(row, i);
    row += ',';
    csv::append_double(row, region.polygon[i].x);
    row += ',';
    csv::append_double(row, region.polygon[i].y);
    w.commit_row();
  }
  w.close();
}

void write_ues_csv(const std::vector<Vec3>& ues, const std::string& path) {
  csv::Writer w(path);
  w.write_line("ue_id,x_m,y_m,z_m");
  for (size_t i = 0; i < ues.size(); ++i) {
    std::string& row = w.row_buffer();
    csv::append_uint(row, i);
    row += ',';
    csv::append_double(row, ues[i].x);
    row += ',';
    csv::append_double(row, ues[i].y);
    row += ',';
    csv::append_double(row, ues[i].z);
    w.commit_row();
  }
  w.close();
}

}  // namespace ransim
