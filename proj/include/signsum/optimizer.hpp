#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "signsum/geom2d.hpp"
#include "signsum/report.hpp"

namespace signsum {

class OptimizerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n unit vectors in R^d (d = 2 or 3) and the angles that generate them:
/// one angle per vector for d = 2, (polar, azimuth) pairs for d = 3.
struct UnitConfiguration {
  int d = 2;
  std::vector<double> angles;
  std::vector<VecN> vectors;

  static UnitConfiguration from_angles(int d, std::vector<double> angles);
  std::size_t size() const { return vectors.size(); }
};

struct OptimizerSettings {
  int restarts = 100;
  std::uint64_t seed = 42;
  int max_iters = 200;  // outer sweeps per restart
  double tol = 1e-9;    // smallest line-search bracket
};

struct ConfigurationEstimate {
  int d = 2;
  int n = 1;
  int k = 1;
  double best_value = 0.0;
  UnitConfiguration best_config;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

inline constexpr double kEnumerationGuard = 1e7;

/// Number of signed k-subset sums the enumeration visits: C(n,k) 2^(k-1).
double enumeration_size(int n, int k);

/// max over k-subsets and signs of |sum eps_i u^i|. Uses the planar sweep when
/// d = 2 and k = n, enumeration otherwise (guarded by kEnumerationGuard).
double objective(const UnitConfiguration& c, int k);

/// Multi-start coordinate-wise golden-section descent on the angles. The
/// result is an upper estimate of c(d, n, k).
ConfigurationEstimate estimate_c(int d, int n, int k, const OptimizerSettings& settings);

/// Lower side: value >= 1 / sin(pi / 2k) (planar only). Upper side:
/// 1 / sin(pi / 2n) >= value. Both with tolerance 1e-6.
struct SandwichReport {
  BoundReport lower;
  BoundReport upper;
  bool lower_applies = true;
  bool holds = false;
};

SandwichReport sandwich_check(const ConfigurationEstimate& e);

/// Directions of a planar configuration folded into [0, pi) and sorted.
std::vector<double> canonical_angles(const UnitConfiguration& c);

}  // namespace signsum
