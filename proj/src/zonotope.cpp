#include "signsum/zonotope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace signsum {
namespace {

// The Gray-code running sum is rebuilt from scratch this often to bound drift.
constexpr std::uint64_t kResyncInterval = 1024;

struct Oriented {
  std::size_t index;
  double angle;
  Vec2 vec;  // generator flipped into the upper half plane
  int flip;  // +1 or -1
};

std::vector<Oriented> oriented_nonzero(const std::vector<Vec2>& gens) {
  std::vector<Oriented> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Vec2 u = gens[i];
    if (u.x == 0.0 && u.y == 0.0) continue;
    bool flipped = false;
    const double a = half_turn_angle(u, &flipped);
    out.push_back({i, a, flipped ? -u : u, flipped ? -1 : 1});
  }
  std::sort(out.begin(), out.end(), [](const Oriented& l, const Oriented& r) {
    return l.angle < r.angle || (l.angle == r.angle && l.index < r.index);
  });
  return out;
}

double norm2(const VecN& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<VecN> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw GeometryError("generator set must be non-empty");
  const std::size_t d = generators_.front().size();
  if (d == 0) throw GeometryError("generators must have dimension >= 1");
  for (const auto& g : generators_) {
    if (g.size() != d) throw GeometryError("generators have mixed dimensions");
    for (double c : g) {
      if (!std::isfinite(c)) throw GeometryError("non-finite generator coordinate");
    }
  }
}

GeneratorSet GeneratorSet::planar(std::span<const Vec2> generators) {
  std::vector<VecN> g;
  g.reserve(generators.size());
  for (const auto& u : generators) g.push_back({u.x, u.y});
  return GeneratorSet(std::move(g));
}

std::vector<Vec2> GeneratorSet::planar_generators() const {
  if (dimension() != 2) throw GeometryError("non-planar generators");
  std::vector<Vec2> out;
  out.reserve(size());
  for (const auto& g : generators_) out.push_back({g[0], g[1]});
  return out;
}

double half_turn_angle(Vec2 v, bool* flipped) {
  bool flip = v.y < 0.0 || (v.y == 0.0 && v.x < 0.0);
  if (flip) v = -v;
  double a = std::atan2(v.y, v.x);
  // (-1, tiny) rounds to pi; fold it onto 0.
  if (a >= std::numbers::pi) {
    flip = !flip;
    a = 0.0;
  }
  if (flipped != nullptr) *flipped = flip;
  return a <= 0.0 ? 0.0 : a;
}

SignedSumResult evaluate_pattern(const GeneratorSet& g, const SignPattern& signs) {
  if (signs.size() != g.size()) throw GeometryError("sign pattern length mismatch");
  SignedSumResult r;
  r.pattern = signs;
  r.vector.assign(g.dimension(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw GeometryError("signs must be +1 or -1");
    for (std::size_t c = 0; c < g.dimension(); ++c) r.vector[c] += signs[i] * g[i][c];
  }
  r.value = norm(r.vector);
  return r;
}

ConvexPolygon build_zonotope(const GeneratorSet& g) {
  const auto gens = g.planar_generators();
  const auto sorted = oriented_nonzero(gens);
  Vec2 v{};
  for (const auto& o : sorted) v = v - o.vec;
  std::vector<Vec2> pts{v, -v};
  pts.reserve(2 * sorted.size() + 2);
  for (const auto& o : sorted) {
    v += 2.0 * o.vec;
    pts.push_back(v);
    pts.push_back(-v);
  }
  return ConvexPolygon::hull_of(pts);
}

SignedSumResult max_signed_sum_sweep(const GeneratorSet& g) {
  const auto gens = g.planar_generators();
  const auto sorted = oriented_nonzero(gens);

  // Prefix k of the sorted order gets +1 (in oriented form), the rest -1.
  Vec2 v{};
  for (const auto& o : sorted) v = v - o.vec;
  double best = dot(v, v);
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    v += 2.0 * sorted[k].vec;
    const double n2 = dot(v, v);
    if (n2 > best) {
      best = n2;
      best_k = k + 1;
    }
  }

  SignPattern signs(g.size(), 1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    signs[sorted[k].index] = (k < best_k ? 1 : -1) * sorted[k].flip;
  }
  return evaluate_pattern(g, signs);
}

SignedSumResult max_signed_sum_brute(const GeneratorSet& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceLimit) throw GeometryError("instance too large for oracle");
  const std::size_t d = g.dimension();

  SignPattern signs(n, 1);
  VecN v(d, 0.0);
  auto rebuild = [&] {
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < d; ++c) v[c] += signs[i] * g[i][c];
    }
  };
  rebuild();
  double best = norm2(v);
  SignPattern best_signs = signs;

  // Gray code over signs[1..n-1]; step t flips the lowest set bit of t.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t t = 1; t < total; ++t) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(t)) + 1;
    signs[i] = -signs[i];
    if (t % kResyncInterval == 0) {
      rebuild();
    } else {
      for (std::size_t c = 0; c < d; ++c) v[c] += 2.0 * signs[i] * g[i][c];
    }
    const double n2 = norm2(v);
    if (n2 > best) {
      best = n2;
      best_signs = signs;
    }
  }
  return evaluate_pattern(g, best_signs);
}

double signed_sum_lower_bound(const GeneratorSet& g) {
  const double n = static_cast<double>(g.size());
  double total = 0.0;
  for (const auto& u : g.generators()) total += norm(u);
  return total / (n * std::sin(std::numbers::pi / (2.0 * n)));
}

bool equality_case_check(const GeneratorSet& g, double tol) {
  const auto gens = g.planar_generators();
  double longest = 0.0;
  for (const auto& u : gens) longest = std::max(longest, norm(u));
  if (longest == 0.0) return true;
  for (const auto& u : gens) {
    if (std::abs(norm(u) - longest) > tol * longest) return false;
  }
  std::vector<double> angles;
  angles.reserve(gens.size());
  for (const auto& u : gens) angles.push_back(half_turn_angle(u));
  std::sort(angles.begin(), angles.end());
  const double gap = std::numbers::pi / static_cast<double>(gens.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = i + 1 < angles.size() ? angles[i + 1] : angles.front() + std::numbers::pi;
    if (std::abs(next - angles[i] - gap) > tol) return false;
  }
  return true;
}

}  // namespace signsum
