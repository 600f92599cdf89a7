#include "signsum/circumball.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace signsum {
namespace {

constexpr std::uint64_t kShuffleSeed = 0x5eedc1c1eULL;

Circle from_two(Vec2 a, Vec2 b) {
  const Vec2 c = 0.5 * (a + b);
  return {c, std::max(norm(a - c), norm(b - c))};
}

Circle from_three(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double scale = std::max(dot(ab, ab), dot(ac, ac));
  if (std::abs(d) <= 1e-14 * scale) {
    // Collinear support: the farthest pair spans the circle.
    Circle best = from_two(a, b);
    for (const Circle cand : {from_two(a, c), from_two(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  const Vec2 offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  const Vec2 center = a + offset;
  return {center, std::max({norm(a - center), norm(b - center), norm(c - center)})};
}

// Fisher-Yates with an explicit index draw so the permutation does not depend
// on the standard library's shuffle implementation.
void seeded_shuffle(std::vector<Vec2>& v) {
  std::mt19937_64 rng(kShuffleSeed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

Circle min_enclosing_circle(std::span<const Vec2> points) {
  if (points.empty()) throw GeometryError("empty point set");
  std::vector<Vec2> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (!is_finite(p)) throw GeometryError("non-finite point coordinate");
  }
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  seeded_shuffle(pts);

  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (c.contains(pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (c.contains(pts[j])) continue;
      c = from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!c.contains(pts[k])) c = from_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

Circle circumradius(const ConvexPolygon& p) { return min_enclosing_circle(p.vertices()); }

bool is_regular_ngon(const ConvexPolygon& p, int n, double tol) {
  if (n < 1 || p.size() != static_cast<std::size_t>(n)) return false;
  if (n == 1) return true;
  const Circle c = circumradius(p);
  const auto& v = p.vertices();
  const double step = 2.0 * std::numbers::pi / n;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i] - c.center;
    const Vec2 b = v[(i + 1) % v.size()] - c.center;
    if (std::abs(norm(a) - c.radius) > tol * c.radius) return false;
    double angle = std::atan2(cross(a, b), dot(a, b));
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    if (std::abs(angle - step) > tol) return false;
  }
  return true;
}

BoundReport dowker_check(const ConvexPolygon& p, int n) {
  if (n < 1) throw GeometryError("n must be positive");
  if (p.size() > static_cast<std::size_t>(n)) throw GeometryError("vertex count exceeds n");
  const double radius = circumradius(p).radius;
  BoundReport r = make_report(2.0 * n * std::sin(std::numbers::pi / n) * radius, perimeter(p),
                              "dowker n=" + std::to_string(n) + " m=" + std::to_string(p.size()));
  r.equality = r.equality && (p.is_singleton() || is_regular_ngon(p, n, 1e-6));
  return r;
}

}  // namespace signsum
