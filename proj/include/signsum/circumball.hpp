#pragma once

#include <span>
#include <string>

#include "signsum/geom2d.hpp"
#include "signsum/report.hpp"

namespace signsum {

struct Circle {
  Vec2 center;
  double radius = 0.0;

  /// Containment with slack `tol * (1 + radius)`.
  bool contains(Vec2 p, double tol = 1e-12) const {
    return norm(p - center) <= radius + tol * (1.0 + radius);
  }
};

/// Smallest circle containing `points` (randomized incremental algorithm).
/// Points are sorted and shuffled with a fixed seed first, so the result does
/// not depend on the input order.
Circle min_enclosing_circle(std::span<const Vec2> points);

/// Circumcircle R(P) of a polygon.
Circle circumradius(const ConvexPolygon& p);

/// Checks 2 n sin(pi/n) R(P) >= per(P) for an m-gon with m <= n. Equality is
/// flagged only for a regular n-gon or a singleton.
BoundReport dowker_check(const ConvexPolygon& p, int n);

/// Exactly n vertices, all at distance R(P) from the circumcenter (relative
/// tolerance `tol`), and consecutive central angles 2 pi / n within `tol`
/// radians.
bool is_regular_ngon(const ConvexPolygon& p, int n, double tol);

}  // namespace signsum
