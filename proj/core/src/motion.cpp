// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/motion.hpp"

#include <algorithm>
#include <limits>

#include "mocg/goalvis.hpp"

namespace mocg {

namespace {

bool reachable(const World& w, Vec2 a, Vec2 b) { return w.in_free_space(b) && w.visible(a, b); }

// Unit tangent of the boundary edge (obstacle or arena) nearest to p.
Vec2 nearest_edge_tangent(const World& w, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  Vec2 tangent{0.0, 0.0};
  auto scan = [&](const Polygon& poly) {
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
      const Vec2 a = poly.v[i], b = poly.v[(i + 1) % n];
      const double d = distance_to_segment(p, a, b);
      if (d < best) {
        best = d;
        tangent = normalized(b - a);
      }
    }
  };
  for (const Polygon& o : w.obstacles) scan(o);
  scan(w.arena);
  return tangent;
}

}  // namespace

Vec2 clip_motion(const World& w, Vec2 from, Vec2 to, bool* clipped) {
  if (clipped) *clipped = false;
  if (dist(from, to) < 1e-15 || reachable(w, from, to)) return to;
  if (clipped) *clipped = true;
  const Vec2 d = to - from;
  const double len = norm(d);
  double t = first_blocked_parameter(from, to, w.obstacles);
  t = std::min(t, ray_exit_distance(from, d / len, w.arena) / len);
  const Vec2 hit = from + t * d;
  Vec2 p1 = from + std::max(0.0, t - 1e-9 / len) * d;
  if (!reachable(w, from, p1)) p1 = from;
  const Vec2 rem = to - p1;
  const Vec2 tau = nearest_edge_tangent(w, hit);
  Vec2 slide = dot(rem, tau) * tau;
  for (int k = 0; k < 4; ++k) {
    const Vec2 p2 = p1 + slide;
    if (norm(slide) < 1e-15) break;
    if (reachable(w, p1, p2)) return p2;
    slide = 0.5 * slide;
  }
  return p1;
}

Vec2 follow_path(const std::vector<Vec2>& pts, std::size_t& next, Vec2 P, double budget) {
  while (next < pts.size()) {
    const double d = dist(P, pts[next]);
    if (d <= budget) {
      budget -= d;
      P = pts[next];
      ++next;
      continue;
    }
    return P + (budget / d) * (pts[next] - P);
  }
  return P;
}

Control goalvis_member_control(const World& w, Vec2 P, Vec2 x_I) {
  const Gcp gcp = build_gcp(w, P);
  const GoalvisCommand cmd = goalvis_command(P, x_I, gcp);
  return Control{cmd.u, cmd.max_travel};
}

}  // namespace mocg
