// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mocg/errors.hpp"
#include "mocg/esp.hpp"
#include "oracles.hpp"

using namespace mocg;
using namespace mocg::testing;
using doctest::Approx;

TEST_CASE("shortest path with clear line of sight") {
  const EspGraph g(world_o1());
  const EspPath p = g.path({0, 0}, {4, 0});
  CHECK(p.length == Approx(4.0));
  REQUIRE(p.points.size() == 2);
}

TEST_CASE("shortest path around the unit obstacle") {
  const EspGraph g(world_o1());
  const EspPath p = g.path({1.5, 2.5}, {3.5, 2.5});
  CHECK(p.length == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(p.points.size() == 4);
  for (std::size_t i = 1; i + 1 < p.points.size(); ++i) {
    const Vec2 v = p.points[i];
    CHECK(((v == Vec2{2, 2}) || (v == Vec2{3, 2}) || (v == Vec2{2, 3}) || (v == Vec2{3, 3})));
  }
  CHECK(grid_esp_length(world_o1(), {1.5, 2.5}, {3.5, 2.5}, 200, 4) == Approx(p.length).epsilon(0.01));
}

TEST_CASE("zero-length path") {
  const EspGraph g(world_o1());
  const EspPath p = g.path({5, 5}, {5, 5});
  CHECK(p.length == 0.0);
  CHECK(p.points.size() == 2);
}

TEST_CASE("reachability thresholds") {
  const EspGraph g(world_o1());
  CHECK(esp_reachable(g, {0, 0}, {4, 0}, 4.0));
  CHECK_FALSE(esp_reachable(g, {0, 0}, {4, 0}, 3.9));
  CHECK_FALSE(esp_reachable(g, {1.5, 2.5}, {3.5, 2.5}, 2.0));
}

TEST_CASE("path errors") {
  const EspGraph g(world_o1());
  CHECK_THROWS_AS(g.path({2.5, 2.5}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(g.path({-1, 0}, {0, 0}), InvalidInput);
  const EspGraph walled(World{arena10(), {rect(4.9, -1, 5.1, 11)}, goal_sq()});
  CHECK_THROWS_AS(walled.path({1, 1}, {9, 1}), Unreachable);
}

TEST_CASE("shortest-path distance is a metric at least the straight-line distance") {
  const World w = world_both();
  const EspGraph g(w);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 10);
  auto sample = [&] {
    for (;;) {
      const Vec2 p{u(rng), u(rng)};
      if (w.in_free_space(p)) return p;
    }
  };
  for (int k = 0; k < 100; ++k) {
    const Vec2 a = sample(), b = sample(), c = sample();
    const double ab = g.distance(a, b), ba = g.distance(b, a);
    CHECK(ab == Approx(ba).epsilon(1e-9));
    CHECK(ab <= g.distance(a, c) + g.distance(c, b) + 1e-6);
    CHECK(ab >= dist(a, b) - 1e-12);
    if (w.visible(a, b)) CHECK(ab == Approx(dist(a, b)));
  }
}

TEST_CASE("wavefront in open space is a split circle") {
  const EspGraph g(world_o1());
  const auto ws = wavefront(g, {8, 8}, 1.0);
  REQUIRE(ws.size() == 2);
  for (const auto& w : ws) {
    CHECK(w.center == Vec2{8, 8});
    CHECK(w.radius == Approx(1.0));
    CHECK(w.arc.span == Approx(kPi).epsilon(1e-6));
  }
}

TEST_CASE("wavefront bends around obstacle corners") {
  const EspGraph g(world_o1());
  const auto ws = wavefront(g, {1.5, 2.5}, 1.2);
  bool src = false, c22 = false, c23 = false;
  for (const auto& w : ws) {
    if (w.center == Vec2{1.5, 2.5}) {
      src = true;
      CHECK(w.radius == Approx(1.2));
    }
    if (w.center == Vec2{2, 2}) {
      c22 = true;
      CHECK(w.radius == Approx(0.49289).epsilon(1e-5));
    }
    if (w.center == Vec2{2, 3}) {
      c23 = true;
      CHECK(w.radius == Approx(0.49289).epsilon(1e-5));
    }
    CHECK(w.arc.span <= kPi + 1e-12);
  }
  CHECK(src);
  CHECK(c22);
  CHECK(c23);
}

TEST_CASE("wavefront arcs sit at the requested distance") {
  const EspGraph g(world_both());
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> t(0, 1);
  for (auto [src, ell] : {std::pair{Vec2{1.5, 2.5}, 1.2}, std::pair{Vec2{5, 8.5}, 2.5}, std::pair{Vec2{3.5, 3.5}, 3.0}}) {
    const auto ws = wavefront(g, src, ell);
    REQUIRE_FALSE(ws.empty());
    for (const auto& w : ws) {
      for (int k = 0; k < 100; ++k) {
        const Vec2 p = w.center + w.radius * unit_from_angle(w.arc.start + t(rng) * w.arc.span);
        if (!g.world().in_free_space(p)) continue;
        CHECK(std::abs(g.distance(src, p) - ell) <= 1e-6);
      }
    }
  }
}

TEST_CASE("sector of a wavelet") {
  const Wavelet quarter{{0, 0}, 1.0, AngleRange::ccw(0, kPi / 2), -1, 0.0};
  const Sector s = sector_of_wavelet(quarter);
  CHECK(point_in_sector({0.5, 0.5}, s));
  CHECK_FALSE(point_in_sector({-0.5, 0.5}, s));
  const Wavelet wide{{0, 0}, 1.0, AngleRange{0, 1.5 * kPi, false}, -1, 0.0};
  CHECK_THROWS_AS(sector_of_wavelet(wide), InvalidInput);
  const Sector point = sector_of_wavelet(Wavelet{{3, 3}, 0.0, AngleRange{0, 1, false}, -1, 0.0});
  CHECK(point_in_sector({3, 3}, point));
}
