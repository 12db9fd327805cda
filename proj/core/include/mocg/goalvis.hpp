// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mocg/convexopt.hpp"
#include "mocg/esp.hpp"

namespace mocg {

// Goal vertices bounding the smallest sector from x that covers the goal;
// D[bearing(x, xL), bearing(x, xU)] covers it counter-clockwise.
struct CoveringPoints {
  Vec2 xL, xU;
  std::size_t iL = 0, iU = 0;
};

// Throws InvalidInput when x lies in the goal.
CoveringPoints minimum_covering_points(Vec2 x, const Polygon& goal);

bool is_goal_visible(const World& w, Vec2 x);

struct FirstVisible {
  Vec2 yL, yU;
  bool yL_fallback = false;
  bool yU_fallback = false;
};

FirstVisible first_visible_vertices(const World& w, Vec2 x, const CoveringPoints& cov);

// Convex polygon that contains x, covers the goal and is obstacle-free, plus the
// directions x may move in while staying inside it.
struct Gcp {
  Polygon polygon;
  AngleRange range;
  bool minimal = false;  // built from the covering triangle only
};

// Throws InvalidInput when x is not goal-visible.
Gcp build_gcp(const World& w, Vec2 x);

// Directions from x into the convex polygon (full circle when x is interior).
AngleRange direction_range_at(const Polygon& convex, Vec2 x);

struct GoalvisCommand {
  Vec2 u;                 // unit heading, or zero to hold
  double max_travel = 0;  // distance that keeps the pursuer in the polygon and short of the target
};

// Head for target when its bearing is admissible, else the nearer end of the range.
Vec2 goalvis_control(Vec2 P, Vec2 target, const AngleRange& range);
GoalvisCommand goalvis_command(Vec2 P, Vec2 target, const Gcp& gcp);

}  // namespace mocg
