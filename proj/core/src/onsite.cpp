// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/onsite.hpp"

#include "mocg/errors.hpp"

namespace mocg {

ApolloniusDisk apollonius(Vec2 P, Vec2 E, double alpha) {
  if (!(alpha > 1.0)) throw InvalidInput("speed ratio must exceed 1");
  const double d = dist(P, E);
  if (d < 1e-15) throw DegenerateInput("pursuer and evader coincide");
  const double a2 = alpha * alpha;
  return {(a2 * E - P) / (a2 - 1.0), alpha * d / (a2 - 1.0)};
}

OnsiteRegion onsite_region(Vec2 P, Vec2 E, double alpha, double delta) {
  OnsiteRegion reg;
  reg.disk = apollonius(P, E, alpha);
  reg.expanded = {reg.disk.center, reg.disk.radius + delta};
  const Vec2 w = P - reg.disk.center;
  const double w2 = norm2(w);
  const double l1 = reg.expanded.r * reg.expanded.r;
  if (w2 - l1 <= 1e-12 * std::max(1.0, w2)) throw RegionDegenerate("pursuer lies inside its expanded Apollonius disk");
  const double l2 = reg.expanded.r * std::sqrt(w2 - l1);
  reg.T1 = reg.disk.center + (l1 * w + l2 * perp_cw(w)) / w2;
  reg.T2 = reg.disk.center + (l1 * w - l2 * perp_cw(w)) / w2;
  std::vector<Vec2> tri{P, reg.T1, reg.T2};
  if (signed_area(tri) < 0.0) std::swap(tri[1], tri[2]);
  reg.triangle = Polygon{tri};
  return reg;
}

bool point_in_onsite_region(Vec2 x, const OnsiteRegion& reg, double tol) {
  if (dist(x, reg.expanded.c) <= reg.expanded.r + tol) return true;
  return point_in_closed(x, reg.triangle, tol);
}

bool check_onsite(const World& w, Vec2 P, Vec2 E, double alpha, double delta) {
  OnsiteRegion reg;
  try {
    reg = onsite_region(P, E, alpha, delta);
  } catch (const RegionDegenerate&) {
    return false;
  }
  if (!region_obstacle_free(reg.triangle, w.obstacles)) return false;
  if (!region_obstacle_free(reg.expanded, w.obstacles)) return false;
  if (!region_in_arena(reg.triangle, w.arena) || !region_in_arena(reg.expanded, w.arena)) return false;
  // Closed disk against closed goal: touching already counts as meeting.
  return distance_to_convex_polygon(reg.expanded.c, w.goal) > reg.expanded.r;
}

OnsiteSnapshot onsite_snapshot(Vec2 P, Vec2 E, double alpha, double delta) {
  const ApolloniusDisk a = apollonius(P, E, alpha);
  return {a.center, a.radius + delta};
}

Vec2 onsite_control(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha) {
  const ApolloniusDisk a = apollonius(P, E, alpha);
  const Vec2 z = alpha * (snap.radius - a.radius) * normalized(E - P) + (a.center - snap.center);
  const double n = norm(z);
  if (n < 1e-12) return normalized(E - P);
  return z / n;
}

Vec2 onsite_target(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha) {
  const ApolloniusDisk a = apollonius(P, E, alpha);
  const double slack = alpha * (snap.radius - a.radius);
  if (slack <= 0.0) return a.center;
  return a.center + dist(a.center, P) * (a.center - snap.center) / slack;
}

double onsite_containment_slack(const OnsiteSnapshot& snap, Vec2 P, Vec2 E, double alpha) {
  const ApolloniusDisk a = apollonius(P, E, alpha);
  return snap.radius - dist(a.center, snap.center) - a.radius;
}

}  // namespace mocg
