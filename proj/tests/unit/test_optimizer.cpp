#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "signsum/bounds.hpp"
#include "signsum/optimizer.hpp"
#include "signsum/zonotope.hpp"

using namespace signsum;

namespace {

constexpr double kPi = std::numbers::pi;

// Explicit enumeration over k-subsets and signs, independent of the library.
double subset_oracle(const std::vector<VecN>& v, int k) {
  const int n = static_cast<int>(v.size());
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
      if (s & ~mask) continue;
      VecN sum(v[0].size(), 0.0);
      for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1)) continue;
        const double e = (s >> i) & 1 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += e * v[i][c];
      }
      best = std::max(best, norm(sum));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("configurations from angles") {
  const auto c = UnitConfiguration::from_angles(2, {0.0, kPi / 2});
  REQUIRE(c.size() == 2);
  CHECK(c.vectors[1][0] == doctest::Approx(0.0));
  CHECK(c.vectors[1][1] == doctest::Approx(1.0));
  const auto s = UnitConfiguration::from_angles(3, {0.0, 0.0, kPi / 2, 0.0});
  REQUIRE(s.size() == 2);
  CHECK(s.vectors[0][2] == doctest::Approx(1.0));
  CHECK(s.vectors[1][0] == doctest::Approx(1.0));
  for (const auto& v : s.vectors) CHECK(norm(v) == doctest::Approx(1.0));
  CHECK_THROWS_AS(UnitConfiguration::from_angles(3, {0.0}), OptimizerError);
  CHECK_THROWS_AS(UnitConfiguration::from_angles(4, {0.0}), OptimizerError);
  CHECK_THROWS_AS(UnitConfiguration::from_angles(2, {}), OptimizerError);
}

TEST_CASE("objective matches the subset oracle") {
  CHECK(enumeration_size(5, 3) == 40.0);
  CHECK(enumeration_size(4, 1) == 4.0);
  const std::vector<double> angles2 = {0.1, 0.9, 2.0, 2.5, 4.0, 5.5};
  const auto c2 = UnitConfiguration::from_angles(2, angles2);
  for (int k = 1; k <= 6; ++k) {
    CHECK(objective(c2, k) == doctest::Approx(subset_oracle(c2.vectors, k)).epsilon(1e-12));
  }
  const auto c3 = UnitConfiguration::from_angles(3, {0.3, 0.1, 1.2, 2.0, 2.2, 4.1, 1.6, 5.0, 0.7, 3.3});
  for (int k = 1; k <= 5; ++k) {
    CHECK(objective(c3, k) == doctest::Approx(subset_oracle(c3.vectors, k)).epsilon(1e-12));
  }
  // One unit vector alone.
  CHECK(objective(c2, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(objective(c2, 7), OptimizerError);
  CHECK_THROWS_AS(objective(c2, 0), OptimizerError);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(estimate_c(3, 40, 20, {}), OptimizerError);
  CHECK_THROWS_AS(estimate_c(2, 40, 20, {}), OptimizerError);
  CHECK_THROWS_AS(estimate_c(1, 3, 3, {}), OptimizerError);
  CHECK_THROWS_AS(estimate_c(2, 3, 4, {}), OptimizerError);
  // d = 2, k = n uses the sweep and is never guarded.
  OptimizerSettings quick;
  quick.restarts = 1;
  quick.max_iters = 2;
  CHECK_NOTHROW(estimate_c(2, 40, 40, quick));
}

TEST_CASE("estimate recovers small exact values") {
  OptimizerSettings s;
  s.restarts = 20;
  s.seed = 7;
  for (int n = 1; n <= 5; ++n) {
    const auto e = estimate_c(2, n, n, s);
    const double want = c_exact_2nn(n).value;
    CHECK(std::abs(e.best_value - want) <= 1e-9);
    CHECK(e.best_value >= want - 1e-9);
    CHECK(e.restarts_used == 20);
    CHECK(e.seed == 7u);
    CHECK(sandwich_check(e).holds);
    const auto a = canonical_angles(e.best_config);
    REQUIRE(a.size() == static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j) CHECK(a[j] - a[j - 1] == doctest::Approx(kPi / n).epsilon(1e-3));
  }
}

TEST_CASE("estimate is deterministic under a fixed seed") {
  OptimizerSettings s;
  s.restarts = 5;
  s.seed = 99;
  const auto a = estimate_c(2, 4, 3, s);
  const auto b = estimate_c(2, 4, 3, s);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_config.angles == b.best_config.angles);
  const auto c = estimate_c(3, 4, 4, s);
  const auto d = estimate_c(3, 4, 4, s);
  CHECK(c.best_value == d.best_value);
}

TEST_CASE("estimates respect the sandwich") {
  OptimizerSettings s;
  s.restarts = 8;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto e = estimate_c(2, n, k, s);
      const auto r = sandwich_check(e);
      CHECK(r.lower_applies);
      CHECK(r.holds);
      CHECK(e.best_value >= 1 / std::sin(kPi / (2 * k)) - 1e-6);
      CHECK(e.best_value <= 1 / std::sin(kPi / (2 * n)) + 1e-6);
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const auto e = estimate_c(3, n, n, s);
    const auto r = sandwich_check(e);
    CHECK_FALSE(r.lower_applies);
    CHECK(r.holds);
    for (const auto& v : e.best_config.vectors) CHECK(norm(v) == doctest::Approx(1.0));
  }
  // k = 1 is trivially 1 in any dimension.
  CHECK(estimate_c(3, 3, 1, s).best_value == doctest::Approx(1.0));
}

TEST_CASE("settings validation") {
  OptimizerSettings bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(estimate_c(2, 2, 2, bad), OptimizerError);
  bad.restarts = 1;
  bad.tol = -1;
  CHECK_THROWS_AS(estimate_c(2, 2, 2, bad), OptimizerError);
}
