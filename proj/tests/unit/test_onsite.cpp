// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mocg/errors.hpp"
#include "mocg/onsite.hpp"

using namespace mocg;
using namespace mocg::testing;
using doctest::Approx;

TEST_CASE("apollonius disk") {
  const ApolloniusDisk a = apollonius({0, 0}, {3, 0}, 2.0);
  CHECK(a.center.x == Approx(4.0));
  CHECK(a.center.y == Approx(0.0));
  CHECK(a.radius == Approx(2.0));
  const ApolloniusDisk b = apollonius({0, 0}, {0, 1}, 3.0);
  CHECK(b.center.y == Approx(9.0 / 8.0));
  CHECK(b.radius == Approx(3.0 / 8.0));
  CHECK_THROWS_AS(apollonius({1, 1}, {1, 1}, 2.0), DegenerateInput);
}

TEST_CASE("onsite region tangent points") {
  const OnsiteRegion r = onsite_region({0, 0}, {3, 0}, 2.0, 0.0);
  const double s3 = std::sqrt(3.0);
  CHECK(r.T1.x == Approx(3.0));
  CHECK(r.T2.x == Approx(3.0));
  CHECK(std::abs(r.T1.y) == Approx(s3));
  CHECK(r.T1.y * r.T2.y < 0);
  const OnsiteRegion e = onsite_region({0, 0}, {3, 0}, 2.0, 0.1);
  CHECK(e.expanded.r == Approx(2.1));
  for (Vec2 t : {e.T1, e.T2}) {
    CHECK(dist(t, e.expanded.c) == Approx(2.1));
    CHECK(dot(t - Vec2{0, 0}, t - e.expanded.c) == Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("mirrored inputs swap tangent points") {
  const OnsiteRegion a = onsite_region({0, 1}, {3, 2}, 2.0, 0.05);
  const OnsiteRegion b = onsite_region({0, -1}, {3, -2}, 2.0, 0.05);
  CHECK(a.T1.x == Approx(b.T2.x));
  CHECK(a.T1.y == Approx(-b.T2.y));
}

TEST_CASE("pursuer inside the expanded disk") {
  CHECK_THROWS_AS(onsite_region({0, 0}, {3, 0}, 2.0, 2.5), RegionDegenerate);
}

TEST_CASE("onsite checks in the unit-obstacle world") {
  const World w = world_o1();
  CHECK(check_onsite(w, {7, 8}, {8, 8}, 2.0, 0.05));
  CHECK_FALSE(check_onsite(w, {7, 8}, {6.2, 6.8}, 2.0, 0.05));
  CHECK_FALSE(check_onsite(w, {0.5, 2.5}, {1.6, 2.5}, 2.0, 0.05));
}

TEST_CASE("onsite control starts as pure pursuit") {
  const Vec2 P{1, 1}, E{2, 3};
  const OnsiteSnapshot s = onsite_snapshot(P, E, 2.0, 0.05);
  const Vec2 u = onsite_control(s, P, E, 2.0);
  const Vec2 pure = normalized(E - P);
  CHECK(u.x == Approx(pure.x));
  CHECK(u.y == Approx(pure.y));
}

TEST_CASE("onsite control stays within a right angle of pursuit after one evader step") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-3, 3), ang(0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    const Vec2 P{u(rng), u(rng)}, E{u(rng), u(rng)};
    if (dist(P, E) < 0.5) continue;
    const OnsiteSnapshot s = onsite_snapshot(P, E, 2.0, 0.05);
    const Vec2 P2 = P + 0.02 * onsite_control(s, P, E, 2.0);
    const Vec2 c = onsite_control(s, P2, E, 2.0);
    CHECK(dot(c, E - P2) > 0);
  }
}

TEST_CASE("onsite control is scale invariant") {
  const Vec2 P{1, 1}, E{2, 3};
  const OnsiteSnapshot s1 = onsite_snapshot(P, E, 2.0, 0.05);
  const OnsiteSnapshot s2 = onsite_snapshot(3.0 * P, 3.0 * E, 2.0, 0.15);
  const Vec2 P1 = P + Vec2{0.1, 0.0}, E1 = E + Vec2{0.0, 0.05};
  const Vec2 a = onsite_control(s1, P1, E1, 2.0), b = onsite_control(s2, 3.0 * P1, 3.0 * E1, 2.0);
  CHECK(a.x == Approx(b.x));
  CHECK(a.y == Approx(b.y));
}
