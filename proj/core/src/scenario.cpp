// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "mocg/errors.hpp"

namespace mocg {

double Scenario::max_speed() const {
  double v = 0.0;
  for (const auto& p : pursuers) v = std::max(v, p.speed);
  for (const auto& e : evaders) v = std::max(v, e.speed);
  return v;
}

double Scenario::effective_delta() const { return delta ? *delta : 0.05 * diameter(goal); }

double Scenario::effective_dt() const {
  if (dt) return *dt;
  const double v = max_speed();
  return v > 0.0 ? 0.01 * diameter(arena) / v : 0.01;
}

std::uint64_t Scenario::evader_seed(std::size_t j) const {
  if (evaders[j].policy.seed) return *evaders[j].policy.seed;
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (j + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Checker {
  const FieldLocator& locate;
  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ScenarioError(msg, locate ? locate(path) : 0);
  }
  void polygon(const std::string& path, const Polygon& p, const char* what) const {
    try {
      (void)make_polygon(p.v);
    } catch (const InvalidInput& e) {
      fail(path, std::string(what) + ": " + e.what());
    }
  }
};

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

void validate_scenario(const Scenario& s, const FieldLocator& locate) {
  const Checker c{locate};
  if (s.version != kScenarioVersion) c.fail("version", "unsupported scenario version " + std::to_string(s.version));
  c.polygon("arena", s.arena, "arena polygon invalid");
  if (!is_convex(s.arena)) c.fail("arena", "arena polygon not convex");
  c.polygon("goal", s.goal, "goal polygon invalid");
  if (!is_convex(s.goal)) c.fail("goal", "goal polygon not convex");
  for (const Vec2& v : s.goal.v)
    if (!point_in_closed(v, s.arena)) c.fail("goal", "goal polygon leaves the arena");
  for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
    const std::string path = "obstacles[" + std::to_string(i) + "]";
    c.polygon(path, s.obstacles[i], "obstacle polygon invalid");
    if (!region_obstacle_free(s.goal, {s.obstacles[i]})) c.fail(path, "obstacle overlaps the goal");
    for (std::size_t j = 0; j < i; ++j)
      if (polygons_touch(s.obstacles[i], s.obstacles[j])) c.fail(path, "obstacle touches obstacle " + std::to_string(j));
  }
  if (s.pursuers.empty()) c.fail("pursuers", "at least one pursuer is required");
  if (s.evaders.empty()) c.fail("evaders", "at least one evader is required");
  if (s.max_steps < 0) c.fail("max_steps", "max_steps must be non-negative");
  if (s.allocation_stride < 1) c.fail("allocation_stride", "allocation_stride must be at least 1");
  if (s.delta && !(*s.delta > 0.0)) c.fail("delta", "delta must be positive");
  if (s.dt && !(*s.dt > 0.0)) c.fail("dt", "dt must be positive");
  if (s.render.every < 0) c.fail("render", "render.every must be non-negative");

  const World w = s.world();
  for (std::size_t i = 0; i < s.pursuers.size(); ++i) {
    const auto& p = s.pursuers[i];
    const std::string path = "pursuers[" + std::to_string(i) + "]";
    if (!(p.speed > 0.0) || !std::isfinite(p.speed)) c.fail(path + ".speed", "pursuer speed must be positive");
    if (!finite(p.position) || !w.in_free_space(p.position)) c.fail(path + ".position", "pursuer starts outside free space");
  }
  for (std::size_t j = 0; j < s.evaders.size(); ++j) {
    const auto& e = s.evaders[j];
    const std::string path = "evaders[" + std::to_string(j) + "]";
    if (!(e.speed > 0.0) || !std::isfinite(e.speed)) c.fail(path + ".speed", "evader speed must be positive");
    if (!finite(e.position) || !w.in_free_space(e.position)) c.fail(path + ".position", "evader starts outside free space");
    if (w.in_goal(e.position)) c.fail(path + ".position", "evader starts inside the goal");
    if (e.policy.resample_every < 1) c.fail(path + ".policy", "resample_every must be at least 1");
  }
  const double dt = s.effective_dt();
  const double rmin = 2.0 * s.max_speed() * dt;
  for (std::size_t i = 0; i < s.pursuers.size(); ++i) {
    const auto& p = s.pursuers[i];
    const std::string path = "pursuers[" + std::to_string(i) + "]";
    if (!(p.capture_radius > 0.0)) c.fail(path + ".capture_radius", "capture radius must be positive");
    if (p.capture_radius < rmin - 1e-12)
      c.fail(path + ".capture_radius", "capture radius below 2 * max speed * dt = " + std::to_string(rmin));
    for (std::size_t j = 0; j < s.evaders.size(); ++j)
      if (!(s.alpha(i, j) > 1.0))
        c.fail(path + ".speed", "pursuer must be faster than evader " + std::to_string(j + 1));
  }
}

}  // namespace mocg
