#include "signsum/bounds.hpp"

#include <algorithm>
#include <numbers>

#include "signsum/zonotope.hpp"

namespace signsum {
namespace {

constexpr double kPi = std::numbers::pi;

double reciprocal_half_sine(int m) { return 1.0 / std::sin(kPi / (2.0 * m)); }

Vec2 vertex_mean(const ConvexPolygon& p) {
  Vec2 c{};
  for (const auto& v : p.vertices()) c += v;
  return c * (1.0 / static_cast<double>(p.size()));
}

}  // namespace

const char* to_string(CKind kind) {
  switch (kind) {
    case CKind::exact:
      return "exact";
    case CKind::lower:
      return "lower";
    case CKind::upper:
      return "upper";
    case CKind::estimate:
      return "estimate";
  }
  return "estimate";
}

CValue c_exact_2nn(int n) {
  if (n <= 0) throw GeometryError("n must be positive");
  return {2, n, n, reciprocal_half_sine(n), CKind::exact};
}

CValue c_lower_bound(int k, int n) {
  if (k <= 0) throw GeometryError("k must be positive");
  if (n == 0) n = k;
  if (n < k) throw GeometryError("need n >= k");
  return {2, n, k, reciprocal_half_sine(k), k == 1 || k == n ? CKind::exact : CKind::lower};
}

CValue c_upper_bound(int n, int d, int k) {
  if (n <= 0) throw GeometryError("n must be positive");
  if (d < 2) throw GeometryError("upper bound stated for d >= 2");
  if (k == 0) k = n;
  if (k < 1 || k > n) throw GeometryError("need 1 <= k <= n");
  return {d, n, k, reciprocal_half_sine(n), d == 2 && k == n ? CKind::exact : CKind::upper};
}

SymmetricBodySet::SymmetricBodySet(std::vector<ConvexPolygon> bodies) {
  if (bodies.empty()) throw GeometryError("empty body list");
  bodies_.reserve(bodies.size());
  radii_.reserve(bodies.size());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const ConvexPolygon& k = bodies[i];
    ConvexPolygon c = symmetrize(k);
    const double tol = 1e-9 * (1.0 + k.extent());
    if (!approx_equal(c.translated(vertex_mean(k)), k, tol)) {
      warnings_.push_back("body " + std::to_string(i) +
                          " is not centrally symmetric; using (K - K) / 2");
    }
    radii_.push_back(circumradius(c).radius);
    bodies_.push_back(std::move(c));
  }
}

BoundReport minkowski_circumradius_check(const SymmetricBodySet& s) {
  const int n = static_cast<int>(s.size());
  double total = 0.0;
  for (double r : s.radii()) total += r;
  const double lhs = circumradius(s.sum()).radius;
  const double rhs = total / (n * std::sin(kPi / (2.0 * n)));
  return make_report(lhs, rhs, "minkowski n=" + std::to_string(n));
}

bool equality_direction_check(const SymmetricBodySet& s, double tol) {
  if (s.size() < 2) throw GeometryError("condition check needs at least two bodies");
  std::vector<double> lengths;
  std::vector<double> angles;
  for (const auto& b : s.bodies()) {
    if (b.size() > 2) throw GeometryError("condition check implemented for segment bodies only");
    if (b.is_singleton()) {
      lengths.push_back(0.0);
      continue;
    }
    const Vec2 d = b.vertices()[1] - b.vertices()[0];
    lengths.push_back(norm(d));
    angles.push_back(half_turn_angle(d));
  }
  const double longest = *std::max_element(lengths.begin(), lengths.end());
  if (longest == 0.0) return true;
  for (double l : lengths) {
    if (std::abs(l - longest) > tol * longest) return false;
  }
  std::sort(angles.begin(), angles.end());
  const double gap = kPi / static_cast<double>(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = i + 1 < angles.size() ? angles[i + 1] : angles.front() + kPi;
    if (std::abs(next - angles[i] - gap) > tol) return false;
  }
  return true;
}

std::vector<Segment> longest_segments(const ConvexPolygon& p, double rel_tol) {
  const auto& v = p.vertices();
  if (v.size() == 1) return {Segment{v[0], v[0]}};
  double diameter = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) diameter = std::max(diameter, norm(v[j] - v[i]));
  }
  std::vector<Segment> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (norm(v[j] - v[i]) >= (1.0 - rel_tol) * diameter) out.push_back({v[i], v[j]});
    }
  }
  return out;
}

std::optional<Segment> unique_longest_segment(const ConvexPolygon& p, double rel_tol) {
  auto all = longest_segments(p, rel_tol);
  if (all.size() != 1) return std::nullopt;
  return all.front();
}

bool longest_segment_condition(const SymmetricBodySet& s, double tol) {
  std::vector<ConvexPolygon> segments;
  for (const auto& b : s.bodies()) {
    const auto seg = unique_longest_segment(b);
    if (!seg) return false;
    const Vec2 ends[] = {seg->a, seg->b};
    segments.push_back(ConvexPolygon::hull_of(ends));
  }
  return equality_direction_check(SymmetricBodySet(std::move(segments)), tol);
}

double ball_volume(int d) {
  if (d < 0) throw GeometryError("dimension must be >= 0");
  double k = (d % 2 == 0) ? 1.0 : 2.0;
  for (int j = (d % 2 == 0) ? 2 : 3; j <= d; j += 2) k *= 2.0 * kPi / j;
  return k;
}

double remark_constant(int d) {
  if (d < 1) throw GeometryError("dimension must be >= 1");
  return 2.0 * ball_volume(d - 1) / (d * ball_volume(d));
}

double quermassintegral_w1(const ConvexPolygon& p) { return 0.5 * perimeter(p); }

double quermassintegral_ball(int d, double rho) {
  if (d < 1) throw GeometryError("dimension must be >= 1");
  return ball_volume(d) * rho;
}

double quermassintegral_segment(int d, double rho) {
  if (d < 1) throw GeometryError("dimension must be >= 1");
  return 2.0 * ball_volume(d - 1) * rho / d;
}

std::vector<BoundReport> remark_chain_check(const SymmetricBodySet& s) {
  const ConvexPolygon total = s.sum();
  const double r_sum = circumradius(total).radius;
  const double w_sum = quermassintegral_w1(total);
  double w_parts = 0.0;
  double r_parts = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w_parts += quermassintegral_w1(s.bodies()[i]);
    r_parts += s.radii()[i];
  }
  return {
      make_report(ball_volume(2) * r_sum, w_sum, "chain: k2 R(sum) >= W1(sum)"),
      make_report(w_sum, w_parts, "chain: W1(sum) = sum W1"),
      make_report(w_parts, 2.0 * ball_volume(1) / 2.0 * r_parts, "chain: sum W1 >= k1 sum R"),
      make_report(r_sum, remark_constant(2) * r_parts, "chain: R(sum) >= (2/pi) sum R"),
  };
}

double zonoid_disc_ratio(int n) {
  if (n < 1) throw GeometryError("n must be positive");
  return 1.0 / (n * std::sin(kPi / (2.0 * n)));
}

double zonoid_disc_ratio_geometric(int n) {
  if (n < 1) throw GeometryError("n must be positive");
  std::vector<Vec2> halves;
  for (int j = 1; j <= n; ++j) halves.push_back(polar(j * kPi / n, 0.5));
  const double r = circumradius(build_zonotope(GeneratorSet::planar(halves))).radius;
  return r / (0.5 * n);
}

}  // namespace signsum
