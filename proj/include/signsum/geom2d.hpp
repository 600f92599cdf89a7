#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace signsum {

/// Error raised for precondition violations on geometric inputs.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector in R^d, used by the brute-force oracle and the optimizer.
using VecN = std::vector<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

double norm(std::span<const double> v);

/// Unit vector at angle `theta`.
inline Vec2 polar(double theta, double r = 1.0) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

/// Convex polygon in canonical form: strictly counter-clockwise, collinear and
/// duplicate vertices removed, starting at the lexicographically smallest
/// vertex. One vertex is a singleton, two vertices a segment.
class ConvexPolygon {
 public:
  /// Convex hull of `points`. Throws GeometryError on empty or non-finite
  /// input.
  static ConvexPolygon hull_of(std::span<const Vec2> points);

  ConvexPolygon() = delete;

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_singleton() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  /// Largest coordinate magnitude, used to scale tolerances.
  double extent() const;

  ConvexPolygon translated(Vec2 t) const;
  ConvexPolygon scaled(double s) const;
  ConvexPolygon negated() const { return scaled(-1.0); }

  bool operator==(const ConvexPolygon&) const = default;

 private:
  explicit ConvexPolygon(std::vector<Vec2> v) : vertices_(std::move(v)) {}
  std::vector<Vec2> vertices_;
};

struct Segment {
  Vec2 a;
  Vec2 b;

  double length() const { return norm(b - a); }
};

ConvexPolygon convex_hull(std::span<const Vec2> points);

/// Boundary length. A segment counts both sides, so per([x,y]) = 2|x-y|.
double perimeter(const ConvexPolygon& p);

double area(const ConvexPolygon& p);

/// P + Q by merging the two counter-clockwise edge sequences.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

ConvexPolygon minkowski_sum(std::span<const ConvexPolygon> bodies);

/// (K - K) / 2, the origin-symmetric body associated with K.
ConvexPolygon symmetrize(const ConvexPolygon& k);

/// m vertices rho * (cos(2 pi j / m + phase), sin(2 pi j / m + phase)).
ConvexPolygon regular_polygon(int m, double rho, double phase);

/// max_v <v, dir>. Throws on a zero direction.
double support(const ConvexPolygon& p, Vec2 dir);

/// True when P equals -P as a vertex set within `tol` times (1 + extent).
bool is_origin_symmetric(const ConvexPolygon& p, double tol = 1e-9);

/// Vertex-set comparison within an absolute tolerance.
bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double tol);

}  // namespace signsum
