// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

namespace ransim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance_2d(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance_3d(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Convex hull (monotone chain), CCW, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Offsets a CCW convex polygon outward by `margin` with mitred corners.
std::vector<Vec2> offset_convex_polygon(const std::vector<Vec2>& poly, double margin);

double polygon_area(const std::vector<Vec2>& poly);  // shoelace, CCW positive

bool point_in_convex_polygon(const std::vector<Vec2>& poly, double x, double y);

struct BoundingBox {
  double min_x, min_y, max_x, max_y;
};
BoundingBox bounding_box(const std::vector<Vec2>& poly);

}  // namespace ransim
