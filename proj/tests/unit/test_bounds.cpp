#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "signsum/bounds.hpp"
#include "signsum/instances.hpp"
#include "signsum/zonotope.hpp"

using namespace signsum;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon poly(std::vector<Vec2> pts) { return ConvexPolygon::hull_of(pts); }

// Ball volumes from the Gamma function.
double gamma_ball(int d) { return std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0); }

}  // namespace

TEST_CASE("c values and kinds") {
  CHECK(c_exact_2nn(1).value == doctest::Approx(1.0));
  CHECK(c_exact_2nn(2).value == doctest::Approx(std::sqrt(2.0)));
  CHECK(c_exact_2nn(3).value == doctest::Approx(2.0));
  CHECK(c_exact_2nn(3).kind == CKind::exact);
  CHECK_THROWS_AS(c_exact_2nn(0), GeometryError);

  CHECK(c_lower_bound(3).kind == CKind::exact);
  CHECK(c_lower_bound(1, 5).kind == CKind::exact);
  const auto lb = c_lower_bound(3, 7);
  CHECK(lb.kind == CKind::lower);
  CHECK(lb.value == doctest::Approx(2.0));
  CHECK(lb.n == 7);
  CHECK_THROWS_AS(c_lower_bound(4, 3), GeometryError);
  CHECK_THROWS_AS(c_lower_bound(0), GeometryError);

  CHECK(c_upper_bound(4).kind == CKind::exact);
  CHECK(c_upper_bound(4, 3).kind == CKind::upper);
  CHECK(c_upper_bound(4, 2, 2).kind == CKind::upper);
  CHECK(c_upper_bound(4, 3).value == doctest::Approx(1.0 / std::sin(kPi / 8)));
  CHECK_THROWS_AS(c_upper_bound(4, 1), GeometryError);
  CHECK_THROWS_AS(c_upper_bound(4, 2, 5), GeometryError);

  CHECK(std::string(to_string(CKind::estimate)) == "estimate");
  // Exact values are monotone in n.
  for (int n = 1; n < 50; ++n) CHECK(c_exact_2nn(n + 1).value > c_exact_2nn(n).value);
}

TEST_CASE("rhombus pair fixtures") {
  SUBCASE("left pair attains equality") {
    const SymmetricBodySet s({poly({{-1, 0}, {0, -0.25}, {1, 0}, {0, 0.25}}),
                              poly({{0, -1}, {0.25, 0}, {0, 1}, {-0.25, 0}})});
    const auto r = minkowski_circumradius_check(s);
    CHECK(r.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.equality);
    CHECK(s.warnings().empty());
    CHECK(longest_segment_condition(s, 1e-9));
  }
  SUBCASE("right pair is strict") {
    const SymmetricBodySet s({poly({{-1, 0}, {0, -0.5}, {1, 0}, {0, 0.5}}),
                              poly({{0, -1}, {0.5, 0}, {0, 1}, {-0.5, 0}})});
    const auto r = minkowski_circumradius_check(s);
    CHECK(r.lhs == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(r.slack - (1.5 - std::sqrt(2.0))) <= 1e-9);
    CHECK_FALSE(r.equality);
    CHECK(longest_segment_condition(s, 1e-9));
  }
}

TEST_CASE("segment sharpness") {
  for (int n = 2; n <= 10; ++n) {
    const SymmetricBodySet s(regular_segments(n, 1.5, 0.2));
    const auto r = minkowski_circumradius_check(s);
    CHECK(r.equality);
    CHECK(equality_direction_check(s, 1e-9));
  }
  const SymmetricBodySet bad({poly({{-1, 0}, {1, 0}}), poly({{-1, -1}, {1, 1}})});
  CHECK_FALSE(equality_direction_check(bad, 1e-9));
  CHECK_FALSE(minkowski_circumradius_check(bad).equality);
  const SymmetricBodySet unequal({poly({{-1, 0}, {1, 0}}), poly({{0, -2}, {0, 2}})});
  CHECK_FALSE(equality_direction_check(unequal, 1e-9));

  const SymmetricBodySet one({poly({{-1, 0}, {1, 0}})});
  CHECK_THROWS_AS(equality_direction_check(one, 1e-9), GeometryError);
  const SymmetricBodySet fat({poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}), poly({{-1, 0}, {1, 0}})});
  CHECK_THROWS_WITH_AS(equality_direction_check(fat, 1e-9),
                       "condition check implemented for segment bodies only", GeometryError);
}

TEST_CASE("body set symmetrizes and warns") {
  const auto tri = poly({{0, 0}, {2, 0}, {0, 2}});
  const SymmetricBodySet s({tri, regular_polygon(4, 1.0, 0.0).translated({5, 5})});
  CHECK(s.warnings().size() == 1);
  for (const auto& b : s.bodies()) CHECK(is_origin_symmetric(b));
  CHECK(s.radii()[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(SymmetricBodySet({}), GeometryError);
}

TEST_CASE("symmetric sum inequality on random bodies") {
  InstanceRng rng(43);
  for (int i = 0; i < 200; ++i) {
    const SymmetricBodySet s(random_symmetric_bodies(rng, 6, 10));
    CHECK(minkowski_circumradius_check(s).holds());
  }
}

TEST_CASE("longest segments") {
  const auto sq = poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  CHECK(longest_segments(sq).size() == 2);
  CHECK_FALSE(unique_longest_segment(sq).has_value());
  const auto rh = poly({{-2, 0}, {0, -1}, {2, 0}, {0, 1}});
  const auto u = unique_longest_segment(rh);
  REQUIRE(u.has_value());
  CHECK(u->length() == doctest::Approx(4.0));
  const SymmetricBodySet squares({sq, sq});
  CHECK_FALSE(longest_segment_condition(squares, 1e-9));
}

TEST_CASE("ball volumes and constants") {
  CHECK(ball_volume(0) == 1.0);
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(kPi));
  for (int d = 0; d <= 20; ++d) CHECK(ball_volume(d) == doctest::Approx(gamma_ball(d)).epsilon(1e-12));
  CHECK(std::abs(remark_constant(2) - 2 / kPi) <= 1e-12);
  CHECK(std::abs(remark_constant(3) - 0.5) <= 1e-12);
  CHECK(std::abs(remark_constant(1) - 1.0) <= 1e-12);
  // Decreasing towards sqrt(2 / (pi d)).
  for (int d = 1; d < 30; ++d) CHECK(remark_constant(d + 1) < remark_constant(d));
  CHECK(remark_constant(200) * std::sqrt(kPi * 200 / 2.0) == doctest::Approx(1.0).epsilon(5e-3));
  // Segment over ball of the same radius.
  for (int d = 1; d <= 6; ++d) {
    CHECK(quermassintegral_segment(d, 1.0) / quermassintegral_ball(d, 1.0) ==
          doctest::Approx(remark_constant(d)));
  }
  CHECK(quermassintegral_ball(2, 1.0) == doctest::Approx(kPi));
  CHECK(quermassintegral_w1(regular_polygon(4, std::sqrt(2.0), kPi / 4)) == doctest::Approx(4.0));
  CHECK_THROWS_AS(ball_volume(-1), GeometryError);
  CHECK_THROWS_AS(remark_constant(0), GeometryError);
}

TEST_CASE("zonoid ratio") {
  CHECK(zonoid_disc_ratio(1) == doctest::Approx(1.0));
  for (int n = 1; n < 10000; ++n) {
    if (!(zonoid_disc_ratio(n + 1) < zonoid_disc_ratio(n))) {
      FAIL("not decreasing at n=" << n);
    }
  }
  CHECK(zonoid_disc_ratio(10000) - 2 / kPi < 1e-8);
  CHECK(zonoid_disc_ratio(10000) > 2 / kPi);
  for (int n = 1; n <= 64; ++n) {
    CHECK(std::abs(zonoid_disc_ratio_geometric(n) - zonoid_disc_ratio(n)) <= 1e-9);
  }
  CHECK_THROWS_AS(zonoid_disc_ratio(0), GeometryError);
}

TEST_CASE("planar chain") {
  SUBCASE("squares") {
    const auto sq = regular_polygon(4, 1.0, 0.3);
    const auto r = remark_chain_check(SymmetricBodySet({sq, sq}));
    REQUIRE(r.size() == 4);
    for (std::size_t j = 0; j < r.size(); ++j) CHECK(r[j].holds());
    CHECK(r[1].equality);
    CHECK_FALSE(r[3].equality);
  }
  SUBCASE("segments close the lower link") {
    const auto r = remark_chain_check(SymmetricBodySet(regular_segments(3)));
    CHECK(r[2].equality);
    CHECK(r[1].equality);
  }
  SUBCASE("random") {
    InstanceRng rng(47);
    for (int i = 0; i < 200; ++i) {
      const auto r = remark_chain_check(SymmetricBodySet(random_symmetric_bodies(rng, 6, 10)));
      CHECK(r[0].holds());
      CHECK(r[1].equality);
      CHECK(r[2].holds());
      CHECK(r[3].holds());
    }
  }
}
