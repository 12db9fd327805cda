// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mocg/errors.hpp"
#include "mocg/geometry.hpp"

using namespace mocg;
using namespace mocg::testing;
using doctest::Approx;

TEST_CASE("bearing of axis and diagonal directions") {
  CHECK(bearing({0, 0}, {1, 0}) == Approx(0.0));
  CHECK(bearing({0, 0}, {0, 1}) == Approx(kPi / 2));
  CHECK(bearing({5, 9}, {4, 6}) == Approx(4.3906).epsilon(1e-4));
  CHECK_THROWS_AS(bearing({1, 1}, {1, 1}), DegenerateInput);
}

TEST_CASE("bearing is rotation equivariant") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5), ang(0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double phi = ang(rng);
    auto rot = [&](Vec2 p) { return Vec2{p.x * std::cos(phi) - p.y * std::sin(phi), p.x * std::sin(phi) + p.y * std::cos(phi)}; };
    CHECK(angular_distance(bearing(rot(a), rot(b)), normalize_angle(bearing(a, b) + phi)) < 1e-9);
  }
}

TEST_CASE("angle range membership wraps through zero") {
  const AngleRange d = AngleRange::ccw(3 * kPi / 2, kPi / 2);
  CHECK(d.contains(0.0));
  CHECK_FALSE(d.contains(kPi));
  CHECK(d.contains(3 * kPi / 2));
  CHECK(d.contains(kPi / 2));
}

TEST_CASE("angle range and its complement split every other direction") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (int k = 0; k < 500; ++k) {
    const double a = ang(rng), b = ang(rng), th = ang(rng);
    if (angular_distance(th, a) < 1e-6 || angular_distance(th, b) < 1e-6) continue;
    CHECK(AngleRange::ccw(a, b).contains(th, 0.0) != AngleRange::ccw(b, a).contains(th, 0.0));
  }
}

TEST_CASE("segments against the unit obstacle") {
  const Obstacles obs{o1()};
  CHECK(segment_obstacle_free({0, 0}, {1, 0}, obs));
  CHECK_FALSE(segment_obstacle_free({1, 1}, {4, 4}, obs));
  CHECK(segment_obstacle_free({1, 2}, {4, 2}, obs));
  CHECK(segment_obstacle_free({1, 1}, {2, 2}, obs));
  CHECK(segment_obstacle_free({1, 3}, {3, 1}, obs));  // grazes the corner (2,2)
}

TEST_CASE("segment predicate agrees with dense sampling") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 5);
  const Obstacles obs{o1(), make_polygon({{3.5, 0.5}, {4.5, 1.0}, {4.0, 2.0}})};
  for (int k = 0; k < 300; ++k) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    bool hit = false;
    for (int s = 0; s <= 1000 && !hit; ++s) {
      const Vec2 p = a + (s / 1000.0) * (b - a);
      for (const auto& o : obs) hit |= point_strictly_inside(p, o, 1e-6);
    }
    if (hit) CHECK_FALSE(segment_obstacle_free(a, b, obs));
  }
}

TEST_CASE("regions against obstacles") {
  const Obstacles obs{o1()};
  CHECK(region_obstacle_free(Disk{{8, 8}, 1}, obs));
  CHECK_FALSE(region_obstacle_free(make_polygon({{1, 1}, {4, 1}, {2.5, 4}}), obs));
  CHECK_FALSE(region_obstacle_free(Disk{{2.5, 2.5}, 0.1}, obs));
}

TEST_CASE("projection onto a convex polygon") {
  const Polygon g = goal_sq();
  CHECK(project_to_convex_polygon({5, 5}, g) == Vec2{5, 5});
  const Vec2 a = project_to_convex_polygon({5, 9}, g);
  CHECK(a.x == Approx(5));
  CHECK(a.y == Approx(6));
  const Vec2 b = project_to_convex_polygon({8, 8}, g);
  CHECK(b.x == Approx(6));
  CHECK(b.y == Approx(6));
  CHECK_THROWS_AS(project_to_convex_polygon({0, 0}, make_polygon({{0, 0}, {4, 0}, {1, 1}, {0, 4}})), InvalidInput);
}

TEST_CASE("projection beats sampled boundary points") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 12), t(0, 1);
  const Polygon g = make_polygon({{4, 4}, {7, 5}, {6, 7}, {3.5, 6}});
  for (int k = 0; k < 50; ++k) {
    const Vec2 p{u(rng), u(rng)};
    const Vec2 q = project_to_convex_polygon(p, g);
    for (int s = 0; s < 100; ++s) {
      const std::size_t i = static_cast<std::size_t>(s) % g.size();
      const Vec2 b = g.v[i] + t(rng) * (g.at_wrap(static_cast<std::ptrdiff_t>(i) + 1) - g.v[i]);
      CHECK(dist(p, q) <= dist(p, b) + 1e-9);
    }
  }
}

TEST_CASE("polygons are stored counterclockwise and validated") {
  const Polygon cw = make_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(signed_area(cw.v) > 0);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidInput);
  CHECK(is_convex(goal_sq()));
}

TEST_CASE("offsets move edges outward and inward") {
  const auto out = offset_convex(goal_sq(), 0.5);
  const Box b = bounding_box(Polygon{out});
  CHECK(b.lo.x == Approx(3.5));
  CHECK(b.hi.y == Approx(6.5));
  const auto in = offset_convex(goal_sq(), -0.5);
  const Box c = bounding_box(Polygon{in});
  CHECK(c.lo.x == Approx(4.5));
  CHECK(c.hi.y == Approx(5.5));
}

TEST_CASE("touching polygons") {
  CHECK(polygons_touch(rect(0, 0, 1, 1), rect(1, 0, 2, 1)));
  CHECK_FALSE(polygons_touch(rect(0, 0, 1, 1), rect(1.5, 0, 2, 1)));
  CHECK(polygons_touch(rect(0, 0, 4, 4), rect(1, 1, 2, 2)));
}
