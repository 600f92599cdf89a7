#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "signsum/geom2d.hpp"
#include "signsum/zonotope.hpp"

namespace signsum {

/// Seeded source for random test instances. Draws are built from raw 64-bit
/// output so a seed gives the same instances on every standard library.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Hull of at most `max_vertices` random points drawn from one of several
/// shapes (square, circle, thin ellipse), randomly placed.
ConvexPolygon random_convex_polygon(InstanceRng& rng, int max_vertices);

/// Centrally symmetric polygon with at most `max_vertices` vertices and a
/// random center.
ConvexPolygon random_symmetric_polygon(InstanceRng& rng, int max_vertices);

/// Planar generators, n uniform in [n_min, n_max]. Includes occasional zero
/// and parallel generators.
GeneratorSet random_generator_set(InstanceRng& rng, int n_min, int n_max);

std::vector<ConvexPolygon> random_symmetric_bodies(InstanceRng& rng, int max_bodies,
                                                   int max_vertices);

/// n unit generators at angles j pi / n, j = 0..n-1.
GeneratorSet regular_generators(int n, double length = 1.0, double phase = 0.0);

/// n segments [-u, u] with |u| = half_length at angles j pi / n + phase,
/// j = 1..n.
std::vector<ConvexPolygon> regular_segments(int n, double half_length = 1.0, double phase = 0.0);

}  // namespace signsum
