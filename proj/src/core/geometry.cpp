// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/geometry.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ransim {

namespace {
double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
}  // namespace

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;

  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;  // CCW
}

std::vector<Vec2> offset_convex_polygon(const std::vector<Vec2>& poly, double margin) {
  const size_t n = poly.size();
  if (n < 3) throw DomainError("offset requires a polygon with >= 3 vertices");
  std::vector<Vec2> out(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec2& prev = poly[(i + n - 1) % n];
    const Vec2& cur = poly[i];
    const Vec2& next = poly[(i + 1) % n];
    // Outward normal of a CCW edge (dx,dy) is (dy,-dx).
    auto unit_normal = [](const Vec2& a, const Vec2& b) {
      const double dx = b.x - a.x, dy = b.y - a.y;
      const double len = std::hypot(dx, dy);
      return Vec2{dy / len, -dx / len};
    };
    const Vec2 n1 = unit_normal(prev, cur);
    const Vec2 n2 = unit_normal(cur, next);
    // Intersect the two shifted edge lines (mitred corner).
    const Vec2 a1{cur.x + margin * n1.x, cur.y + margin * n1.y};
    const Vec2 a2{cur.x + margin * n2.x, cur.y + margin * n2.y};
    const Vec2 d1{cur.x - prev.x, cur.y - prev.y};
    const Vec2 d2{next.x - cur.x, next.y - cur.y};
    const double det = d1.x * (-d2.y) - (-d2.x) * d1.y;
    if (std::abs(det) < 1e-12) {
      // Nearly collinear edges: both normals agree, shift directly.
      out[i] = a1;
      continue;
    }
    const double t = ((a2.x - a1.x) * (-d2.y) - (-d2.x) * (a2.y - a1.y)) / det;
    out[i] = Vec2{a1.x + t * d1.x, a1.y + t * d1.y};
  }
  return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
  double acc = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

bool point_in_convex_polygon(const std::vector<Vec2>& poly, double x, double y) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    if ((b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) < 0.0) return false;
  }
  return true;
}

BoundingBox bounding_box(const std::vector<Vec2>& poly) {
  BoundingBox bb{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
  for (const Vec2& p : poly) {
    bb.min_x = std::min(bb.min_x, p.x);
    bb.min_y = std::min(bb.min_y, p.y);
    bb.max_x = std::max(bb.max_x, p.x);
    bb.max_y = std::max(bb.max_y, p.y);
  }
  return bb;
}

}  // namespace ransim
