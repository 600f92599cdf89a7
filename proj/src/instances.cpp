#include "signsum/instances.hpp"

#include <numbers>

namespace signsum {
namespace {

constexpr double kPi = std::numbers::pi;

Vec2 random_shape_point(InstanceRng& rng, int shape) {
  switch (shape) {
    case 0:
      return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    case 1:
      return polar(rng.uniform(0.0, 2.0 * kPi));
    default: {
      const Vec2 p = polar(rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.5, 1.0));
      return {p.x, 0.1 * p.y};
    }
  }
}

}  // namespace

ConvexPolygon random_convex_polygon(InstanceRng& rng, int max_vertices) {
  const int m = rng.integer(1, max_vertices);
  const int shape = rng.integer(0, 2);
  const double scale = rng.uniform(0.1, 10.0);
  const double turn = rng.uniform(0.0, 2.0 * kPi);
  const Vec2 shift{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
  const Vec2 ex = polar(turn);
  const Vec2 ey = polar(turn + 0.5 * kPi);
  std::vector<Vec2> pts;
  for (int i = 0; i < m; ++i) {
    const Vec2 p = random_shape_point(rng, shape);
    pts.push_back(shift + scale * (p.x * ex + p.y * ey));
  }
  return ConvexPolygon::hull_of(pts);
}

ConvexPolygon random_symmetric_polygon(InstanceRng& rng, int max_vertices) {
  const int half = rng.integer(1, std::max(1, max_vertices / 2));
  const Vec2 center{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
  const double scale = rng.uniform(0.2, 5.0);
  std::vector<Vec2> pts;
  for (int i = 0; i < half; ++i) {
    const Vec2 p = scale * Vec2{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    pts.push_back(center + p);
    pts.push_back(center - p);
  }
  return ConvexPolygon::hull_of(pts);
}

GeneratorSet random_generator_set(InstanceRng& rng, int n_min, int n_max) {
  const int n = rng.integer(n_min, n_max);
  std::vector<Vec2> gens;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && rng.chance(0.05)) {
      gens.push_back(rng.uniform(-2.0, 2.0) * gens[static_cast<std::size_t>(rng.integer(0, i - 1))]);
    } else if (rng.chance(0.03)) {
      gens.push_back({0.0, 0.0});
    } else {
      gens.push_back(polar(rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.01, 3.0)));
    }
  }
  return GeneratorSet::planar(gens);
}

std::vector<ConvexPolygon> random_symmetric_bodies(InstanceRng& rng, int max_bodies,
                                                   int max_vertices) {
  const int n = rng.integer(1, max_bodies);
  std::vector<ConvexPolygon> out;
  for (int i = 0; i < n; ++i) out.push_back(random_symmetric_polygon(rng, max_vertices));
  return out;
}

GeneratorSet regular_generators(int n, double length, double phase) {
  if (n < 1) throw GeometryError("n must be positive");
  std::vector<Vec2> gens;
  for (int j = 0; j < n; ++j) gens.push_back(polar(j * kPi / n + phase, length));
  return GeneratorSet::planar(gens);
}

std::vector<ConvexPolygon> regular_segments(int n, double half_length, double phase) {
  if (n < 1) throw GeometryError("n must be positive");
  std::vector<ConvexPolygon> out;
  for (int j = 1; j <= n; ++j) {
    const Vec2 u = polar(j * kPi / n + phase, half_length);
    const Vec2 ends[] = {-u, u};
    out.push_back(ConvexPolygon::hull_of(ends));
  }
  return out;
}

}  // namespace signsum
