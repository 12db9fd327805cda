// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/goalvis.hpp"

#include <algorithm>
#include <limits>

#include "mocg/errors.hpp"

namespace mocg {

CoveringPoints minimum_covering_points(Vec2 x, const Polygon& goal) {
  if (point_in_closed(x, goal)) throw InvalidInput("point lies in the goal");
  // Angles relative to the centroid bearing all lie in (-pi, pi) for x outside a convex goal.
  const double ref = bearing(x, vertex_centroid(goal));
  std::size_t lo = 0, hi = 0;
  double amin = std::numeric_limits<double>::infinity(), amax = -amin;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    double a = normalize_angle(bearing(x, goal.v[i]) - ref);
    if (a > kPi) a -= kTwoPi;
    const double d = dist(x, goal.v[i]);
    // Collinear ties go to the farther vertex.
    if (a < amin - 1e-12 || (a <= amin + 1e-12 && d > dist(x, goal.v[lo]))) {
      amin = std::min(a, amin);
      lo = i;
    }
    if (a > amax + 1e-12 || (a >= amax - 1e-12 && d > dist(x, goal.v[hi]))) {
      amax = std::max(a, amax);
      hi = i;
    }
  }
  return {goal.v[lo], goal.v[hi], lo, hi};
}

bool is_goal_visible(const World& w, Vec2 x) {
  if (point_in_closed(x, w.goal)) return true;
  const CoveringPoints cov = minimum_covering_points(x, w.goal);
  std::vector<Vec2> tri{x, cov.xL, cov.xU};
  if (std::abs(signed_area(tri)) < 1e-14) {
    return w.visible(x, cov.xL) && w.visible(x, cov.xU);
  }
  if (signed_area(tri) < 0.0) std::swap(tri[1], tri[2]);
  const Polygon t{tri};
  return region_obstacle_free(t, w.obstacles) && region_in_arena(t, w.arena);
}

FirstVisible first_visible_vertices(const World& w, Vec2 x, const CoveringPoints& cov) {
  const double thL = bearing(x, cov.xL), thU = bearing(x, cov.xU);
  std::vector<Vec2> cands;
  for (const Polygon& o : w.obstacles) cands.insert(cands.end(), o.v.begin(), o.v.end());
  cands.insert(cands.end(), w.arena.v.begin(), w.arena.v.end());

  FirstVisible fv;
  double bestL = std::numeric_limits<double>::infinity(), bestU = bestL;
  bool haveL = false, haveU = false;
  for (const Vec2& y : cands) {
    if (dist(x, y) < 1e-9) continue;
    const double th = bearing(x, y);
    const double cwL = ccw_span(th, thL), cwU = ccw_span(th, thU);
    const double ccwU = ccw_span(thU, th), ccwL = ccw_span(thL, th);
    const bool left_ok = cwL <= kPi && cwU <= kPi;
    const bool right_ok = ccwU <= kPi && ccwL <= kPi;
    if (!left_ok && !right_ok) continue;
    if (!w.visible(x, y)) continue;
    if (left_ok && (cwL < bestL - 1e-12 || (cwL <= bestL + 1e-12 && haveL && dist(x, y) < dist(x, fv.yL)))) {
      bestL = cwL;
      fv.yL = y;
      haveL = true;
    }
    if (right_ok && (ccwU < bestU - 1e-12 || (ccwU <= bestU + 1e-12 && haveU && dist(x, y) < dist(x, fv.yU)))) {
      bestU = ccwU;
      fv.yU = y;
      haveU = true;
    }
  }
  if (!haveL) {
    fv.yL = 2.0 * x - cov.xU;
    fv.yL_fallback = true;
  }
  if (!haveU) {
    fv.yU = 2.0 * x - cov.xL;
    fv.yU_fallback = true;
  }
  return fv;
}

AngleRange direction_range_at(const Polygon& poly, Vec2 x) {
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (dist(poly.v[k], x) > 1e-9) continue;
    std::size_t nx = (k + 1) % n, pv = (k + n - 1) % n;
    while (dist(poly.v[nx], x) <= 1e-9) nx = (nx + 1) % n;
    while (dist(poly.v[pv], x) <= 1e-9) pv = (pv + n - 1) % n;
    return AngleRange::ccw(bearing(x, poly.v[nx]), bearing(x, poly.v[pv]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 a = poly.v[k], b = poly.v[(k + 1) % n];
    if (distance_to_segment(x, a, b) <= 1e-9) {
      const double th = bearing(a, b);
      return AngleRange{th, kPi, false};
    }
  }
  return AngleRange::full_circle();
}

namespace {

bool valid_gcp(const World& w, const std::vector<Vec2>& pts, Vec2 x) {
  if (pts.size() < 3 || signed_area(pts) <= 1e-14) return false;
  if (!is_simple(pts)) return false;
  const Polygon p{pts};
  if (!is_convex(p, 1e-10)) return false;
  if (!point_in_closed(x, p)) return false;
  for (const Vec2& g : w.goal.v)
    if (!point_in_closed(g, p, 1e-9)) return false;
  return region_obstacle_free(p, w.obstacles) && region_in_arena(p, w.arena);
}

// Point where segment a->b meets the line through p with direction d, if it does.
bool hit_segment(Vec2 a, Vec2 b, Vec2 p, Vec2 d, Vec2& out) {
  double s = 0.0, u = 0.0;
  if (!line_intersection(a, b - a, p, d, s, u)) return false;
  if (s < -1e-12 || s > 1 + 1e-12) return false;
  out = a + std::clamp(s, 0.0, 1.0) * (b - a);
  return true;
}

std::vector<Vec2> assemble(Vec2 x, const std::vector<Vec2>& chain, Vec2 yL, Vec2 yU, int mode) {
  // mode 0: both sides, 1: half-plane on the L side, 2: half-plane on the U side
  const std::size_t m = chain.size();
  std::vector<Vec2> pts{x};
  auto l_side = [&](std::vector<Vec2>& out) {
    const Vec2 a = chain[0], b = chain[1];
    Vec2 xpp;
    if (cross(b - a, yL - a) < 0.0 && hit_segment(x, yL, a, b - a, xpp)) {
      out.push_back(xpp);
    } else {
      out.push_back(yL);
      out.push_back(a);
    }
  };
  auto u_side = [&](std::vector<Vec2>& out) {
    const Vec2 a = chain[m - 2], b = chain[m - 1];
    Vec2 xpp;
    if (cross(b - a, yU - a) < 0.0 && hit_segment(x, yU, a, b - a, xpp)) {
      out.push_back(xpp);
    } else {
      out.push_back(b);
      out.push_back(yU);
    }
  };
  if (mode == 2) {
    Vec2 wpt;
    const double th = bearing(x, yU) - kPi;
    if (!hit_segment(yL, chain[0], x, unit_from_angle(th), wpt)) return {};
    pts.push_back(wpt);
    pts.push_back(chain[0]);
  } else {
    l_side(pts);
  }
  for (std::size_t i = 1; i + 1 < m; ++i) pts.push_back(chain[i]);
  if (mode == 1) {
    Vec2 wpt;
    const double th = bearing(x, yL) + kPi;
    pts.push_back(chain[m - 1]);
    if (!hit_segment(chain[m - 1], yU, x, unit_from_angle(th), wpt)) return {};
    pts.push_back(wpt);
  } else {
    u_side(pts);
  }
  return remove_collinear(pts, 1e-12);
}

}  // namespace

Gcp build_gcp(const World& w, Vec2 x) {
  if (!is_goal_visible(w, x)) throw InvalidInput("point is not goal-visible");
  Gcp out;
  if (point_in_closed(x, w.goal)) {
    double eps = 1e-3 * diameter(w.goal);
    std::vector<Vec2> pts;
    for (int i = 0; i < 30; ++i, eps *= 0.5) {
      pts = offset_convex(w.goal, eps);
      pts = clip_convex(pts, w.arena);
      if (!pts.empty() && region_obstacle_free(Polygon{pts}, w.obstacles)) break;
      pts.clear();
    }
    out.polygon = pts.empty() ? w.goal : Polygon{pts};
    out.range = direction_range_at(out.polygon, x);
    return out;
  }
  const CoveringPoints cov = minimum_covering_points(x, w.goal);
  std::vector<Vec2> chain;
  for (std::size_t i = cov.iL;; i = (i + 1) % w.goal.size()) {
    chain.push_back(w.goal.v[i]);
    if (i == cov.iU) break;
  }
  const FirstVisible fv = first_visible_vertices(w, x, cov);
  const double thL = bearing(x, fv.yL), thU = bearing(x, fv.yU);
  int mode = 0;
  if (ccw_span(thL, thU) > kPi) {
    const double ref = bearing(x, vertex_centroid(w.goal));
    const double bisL = normalize_angle(thL + 0.5 * kPi), bisU = normalize_angle(thU - 0.5 * kPi);
    mode = angular_distance(bisU, ref) < angular_distance(bisL, ref) ? 2 : 1;
  }
  for (double f : {1.0, 0.5, 0.25, 0.125}) {
    const Vec2 yL = x + f * (fv.yL - x), yU = x + f * (fv.yU - x);
    const auto pts = assemble(x, chain, yL, yU, mode);
    if (valid_gcp(w, pts, x)) {
      out.polygon = Polygon{pts};
      out.range = direction_range_at(out.polygon, x);
      return out;
    }
  }
  std::vector<Vec2> pts{x};
  pts.insert(pts.end(), chain.begin(), chain.end());
  out.polygon = Polygon{remove_collinear(pts, 1e-12)};
  out.range = direction_range_at(out.polygon, x);
  out.minimal = true;
  return out;
}

Vec2 goalvis_control(Vec2 P, Vec2 target, const AngleRange& range) {
  if (dist(P, target) < 1e-9) return {0.0, 0.0};
  return unit_from_angle(range.clamp(bearing(P, target)));
}

GoalvisCommand goalvis_command(Vec2 P, Vec2 target, const Gcp& gcp) {
  GoalvisCommand cmd;
  cmd.u = goalvis_control(P, target, gcp.range);
  if (norm(cmd.u) == 0.0) return cmd;
  double travel = std::numeric_limits<double>::infinity();
  const Polygon& poly = gcp.polygon;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Vec2 a = poly.v[i], b = poly.v[(i + 1) % n];
    const double len = dist(a, b);
    const Vec2 outward = perp_cw(b - a) / len;
    const double slack = dot(outward, a - P);
    if (slack <= 1e-9) continue;  // edges through P
    const double rate = dot(outward, cmd.u);
    if (rate > 0.0) travel = std::min(travel, slack / rate);
  }
  if (gcp.range.contains(bearing(P, target), 0.0)) travel = std::min(travel, dist(P, target));
  cmd.max_travel = travel;
  return cmd;
}

}  // namespace mocg
