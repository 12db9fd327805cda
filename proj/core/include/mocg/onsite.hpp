// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mocg/esp.hpp"
#include "mocg/geometry.hpp"

namespace mocg {

struct ApolloniusDisk {
  Vec2 center;
  double radius = 0.0;
};

// Throws DegenerateInput when P == E, InvalidInput when alpha <= 1.
ApolloniusDisk apollonius(Vec2 P, Vec2 E, double alpha);

struct OnsiteRegion {
  ApolloniusDisk disk;
  Disk expanded;   // disk grown by delta
  Vec2 T1, T2;     // tangent points seen from P
  Polygon triangle;
};

// Throws RegionDegenerate when P lies inside the expanded disk.
OnsiteRegion onsite_region(Vec2 P, Vec2 E, double alpha, double delta);

bool point_in_onsite_region(Vec2 x, const OnsiteRegion& reg, double tol = kEpsGeom);

// Region misses every obstacle, stays inside the arena, expanded disk misses the goal.
bool check_onsite(const World& w, Vec2 P, Vec2 E, double alpha, double delta);

// Expanded disk frozen at engagement time.
struct OnsiteSnapshot {
  Vec2 center;
  double radius = 0.0;  // R_A(t) + delta
};

OnsiteSnapshot onsite_snapshot(Vec2 P, Vec2 E, double alpha, double delta);

// Unit heading keeping the current Apollonius disk inside the snapshot disk.
Vec2 onsite_control(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha);
// Point the controller heads for; lies in the current Apollonius disk.
Vec2 onsite_target(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha);
// Slack of the containment A(tau) inside the snapshot disk (>= 0 when contained).
double onsite_containment_slack(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha);

}  // namespace mocg
