#pragma once

#include <cstddef>
#include <vector>

#include "signsum/geom2d.hpp"

namespace signsum {

/// Generators u^1..u^n of the zonotope sum [-u^i, u^i]. All generators share
/// one dimension; zero vectors are allowed.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<VecN> generators);
  static GeneratorSet planar(std::span<const Vec2> generators);

  std::size_t size() const { return generators_.size(); }
  std::size_t dimension() const { return generators_.front().size(); }
  const std::vector<VecN>& generators() const { return generators_; }
  const VecN& operator[](std::size_t i) const { return generators_[i]; }

  /// Planar view; throws GeometryError unless dimension() == 2.
  std::vector<Vec2> planar_generators() const;

 private:
  std::vector<VecN> generators_;
};

using SignPattern = std::vector<int>;

struct SignedSumResult {
  double value = 0.0;
  SignPattern pattern;
  VecN vector;
};

/// Sum of signs[i] * generators[i] and its norm, evaluated in input order.
SignedSumResult evaluate_pattern(const GeneratorSet& g, const SignPattern& signs);

/// The origin-symmetric polygon sum [-u^i, u^i]; at most 2n vertices.
ConvexPolygon build_zonotope(const GeneratorSet& g);

/// Exact max over all 2^n sign patterns in O(n log n). Generators are
/// oriented into the upper half plane and sorted by angle; the zonotope
/// vertices are then the prefix patterns of that order, one per arc between
/// consecutive critical directions.
SignedSumResult max_signed_sum_sweep(const GeneratorSet& g);

inline constexpr std::size_t kBruteForceLimit = 24;

/// Exhaustive max over 2^(n-1) patterns with the first sign fixed to +1. Works
/// in any dimension; throws GeometryError when n > kBruteForceLimit.
SignedSumResult max_signed_sum_brute(const GeneratorSet& g);

/// (1 / (n sin(pi / 2n))) * sum |u^i|.
double signed_sum_lower_bound(const GeneratorSet& g);

/// True iff all generators vanish, or they share one norm (relative `tol`) and
/// the 2n points +-u^i have consecutive angular gaps pi / n within `tol`.
bool equality_case_check(const GeneratorSet& g, double tol);

/// Direction of v folded into [0, pi) with the flip reported in `flipped`.
double half_turn_angle(Vec2 v, bool* flipped = nullptr);

}  // namespace signsum
