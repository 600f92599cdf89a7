#include "signsum/geom2d.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace signsum {
namespace {

// Relative sine threshold below which a turn counts as straight.
constexpr double kCollinearSine = 1e-12;
constexpr double kDuplicateTol = 1e-12;

bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

double max_abs_coord(std::span<const Vec2> pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

// Turn at b on the path a -> b -> c is a proper left turn.
bool strict_left(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 u = b - a;
  const Vec2 w = c - b;
  return cross(u, w) > kCollinearSine * norm(u) * norm(w);
}

// Drops near-duplicate and straight vertices from a closed CCW chain until
// stable. Monotone chain leaves such vertices behind when input points are
// nearly coincident.
std::vector<Vec2> clean_cycle(std::vector<Vec2> v, double dup_tol) {
  bool changed = true;
  while (changed && v.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() > 1; ++i) {
      const Vec2 next = v[(i + 1) % v.size()];
      if (std::abs(v[i].x - next.x) <= dup_tol && std::abs(v[i].y - next.y) <= dup_tol) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>((i + 1) % v.size()));
        changed = true;
        break;
      }
    }
    if (changed || v.size() < 3) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 prev = v[(i + v.size() - 1) % v.size()];
      const Vec2 next = v[(i + 1) % v.size()];
      if (!strict_left(prev, v[i], next)) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() == 2 && lex_less(v[1], v[0])) std::swap(v[0], v[1]);
  if (v.size() > 2) {
    auto first = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), first, v.end());
  }
  return v;
}

std::size_t bottom_index(const std::vector<Vec2>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
  }
  return best;
}

double edge_angle(Vec2 e) {
  double a = std::atan2(e.y, e.x);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

ConvexPolygon ConvexPolygon::hull_of(std::span<const Vec2> points) {
  if (points.empty()) throw GeometryError("empty point set");
  for (const auto& p : points) {
    if (!is_finite(p)) throw GeometryError("non-finite point coordinate");
  }
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return ConvexPolygon(std::move(pts));

  // Andrew's monotone chain; pops straight and reflex turns.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && !strict_left(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !strict_left(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  const double dup_tol = kDuplicateTol * (1.0 + max_abs_coord(pts));
  return ConvexPolygon(clean_cycle(std::move(hull), dup_tol));
}

double ConvexPolygon::extent() const { return max_abs_coord(vertices_); }

ConvexPolygon ConvexPolygon::translated(Vec2 t) const {
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p += t;
  return hull_of(v);
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p = p * s;
  return hull_of(v);
}

ConvexPolygon convex_hull(std::span<const Vec2> points) { return ConvexPolygon::hull_of(points); }

double perimeter(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  if (v.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += norm(v[(i + 1) % v.size()] - v[i]);
  return total;
}

double area(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * twice;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  const std::size_t na = a.size() == 1 ? 0 : a.size();
  const std::size_t nb = b.size() == 1 ? 0 : b.size();
  const std::size_t ia0 = bottom_index(a);
  const std::size_t ib0 = bottom_index(b);

  // Vertices are formed as a[i] + b[j] from the original coordinates rather
  // than accumulated edges, so K + (-K) comes out exactly antisymmetric.
  std::vector<Vec2> out;
  out.reserve(na + nb + 1);
  std::size_t i = 0;
  std::size_t j = 0;
  auto at_a = [&](std::size_t s) { return a[(ia0 + s) % a.size()]; };
  auto at_b = [&](std::size_t s) { return b[(ib0 + s) % b.size()]; };
  while (i < na || j < nb) {
    out.push_back(at_a(i) + at_b(j));
    if (i == na) {
      ++j;
    } else if (j == nb) {
      ++i;
    } else {
      const double ta = edge_angle(at_a(i + 1) - at_a(i));
      const double tb = edge_angle(at_b(j + 1) - at_b(j));
      if (ta < tb) {
        ++i;
      } else if (tb < ta) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
  }
  if (out.empty()) out.push_back(at_a(0) + at_b(0));
  return ConvexPolygon::hull_of(out);
}

ConvexPolygon minkowski_sum(std::span<const ConvexPolygon> bodies) {
  if (bodies.empty()) throw GeometryError("empty body list");
  ConvexPolygon acc = bodies.front();
  for (std::size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, bodies[i]);
  return acc;
}

ConvexPolygon symmetrize(const ConvexPolygon& k) {
  return minkowski_sum(k, k.negated()).scaled(0.5);
}

ConvexPolygon regular_polygon(int m, double rho, double phase) {
  if (m <= 0) throw GeometryError("regular polygon needs m >= 1");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw GeometryError("regular polygon needs rho >= 0");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v.push_back(polar(2.0 * std::numbers::pi * j / m + phase, rho));
  return ConvexPolygon::hull_of(v);
}

double support(const ConvexPolygon& p, Vec2 dir) {
  if (dir.x == 0.0 && dir.y == 0.0) throw GeometryError("zero support direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, dot(v, dir));
  return best;
}

bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double tol) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Vec2 d = a[i] - b[(i + shift) % n];
      ok = std::abs(d.x) <= tol && std::abs(d.y) <= tol;
    }
    if (ok) return true;
  }
  return false;
}

bool is_origin_symmetric(const ConvexPolygon& p, double tol) {
  return approx_equal(p, p.negated(), tol * (1.0 + p.extent()));
}

}  // namespace signsum
