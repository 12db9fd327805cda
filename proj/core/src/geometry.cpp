// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/geometry.hpp"

#include <algorithm>
#include <limits>

#include "mocg/errors.hpp"

namespace mocg {

Vec2 normalized(Vec2 a) {
  const double n = norm(a);
  if (n < 1e-15) throw DegenerateInput("cannot normalize a zero-length vector");
  return a / n;
}

double normalize_angle(double th) {
  double r = std::fmod(th, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double bearing(Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  if (norm(d) < 1e-15) throw DegenerateInput("bearing between coincident points");
  return normalize_angle(std::atan2(d.y, d.x));
}

double ccw_span(double a, double b) { return normalize_angle(b - a); }

double angular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

AngleRange AngleRange::ccw(double from, double to) {
  return {normalize_angle(from), ccw_span(from, to), false};
}

bool AngleRange::contains(double th, double tol) const {
  if (full) return true;
  const double off = normalize_angle(th - start);
  return off <= span + tol || off >= kTwoPi - tol;
}

double AngleRange::clamp(double th) const {
  if (contains(th, 0.0)) return normalize_angle(th);
  const double a = angular_distance(th, start);
  const double b = angular_distance(th, end());
  return a <= b ? start : end();
}

const Vec2& Polygon::at_wrap(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  return v[static_cast<std::size_t>(((i % n) + n) % n)];
}

double signed_area(const std::vector<Vec2>& pts) {
  double a = 0.0;
  for (std::size_t i = 0, n = pts.size(); i < n; ++i) a += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * a;
}

namespace {

int orient(Vec2 a, Vec2 b, Vec2 c, double eps = 1e-12) {
  const double v = cross(b - a, c - a);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b, double eps) { return distance_to_segment(p, a, b) <= eps; }

bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 != 0 || o2 != 0) return true;
  }
  return on_segment(c, a, b, 1e-12) || on_segment(d, a, b, 1e-12) || on_segment(a, c, d, 1e-12) ||
         on_segment(b, c, d, 1e-12);
}

}  // namespace

bool is_simple(const std::vector<Vec2>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(pts[i], pts[(i + 1) % n]) < 1e-12) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
    }
  }
  return true;
}

Polygon make_polygon(std::vector<Vec2> pts) {
  if (pts.size() < 3) throw InvalidInput("polygon needs at least 3 vertices");
  const double a = signed_area(pts);
  if (std::abs(a) < 1e-12) throw InvalidInput("polygon has zero area");
  if (!is_simple(pts)) throw InvalidInput("polygon is not simple");
  if (a < 0.0) std::reverse(pts.begin(), pts.end());
  return Polygon{std::move(pts)};
}

bool is_convex(const Polygon& p, double eps) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = p.v[i], b = p.v[(i + 1) % n], c = p.v[(i + 2) % n];
    if (cross(b - a, c - b) < -eps) return false;
  }
  return true;
}

Box bounding_box(const Polygon& p) {
  Box b{p.v.front(), p.v.front()};
  for (const Vec2& q : p.v) {
    b.lo.x = std::min(b.lo.x, q.x);
    b.lo.y = std::min(b.lo.y, q.y);
    b.hi.x = std::max(b.hi.x, q.x);
    b.hi.y = std::max(b.hi.y, q.y);
  }
  return b;
}

Vec2 vertex_centroid(const Polygon& p) {
  Vec2 c;
  for (const Vec2& q : p.v) c += q;
  return c / static_cast<double>(p.size());
}

double diameter(const Polygon& p) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) d = std::max(d, dist(p.v[i], p.v[j]));
  return d;
}

Vec2 closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double l2 = norm2(ab);
  if (l2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
  return a + t * ab;
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) { return dist(p, closest_point_on_segment(p, a, b)); }

double distance_to_boundary(Vec2 p, const Polygon& poly) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = poly.size(); i < n; ++i)
    d = std::min(d, distance_to_segment(p, poly.v[i], poly.v[(i + 1) % n]));
  return d;
}

bool point_on_boundary(Vec2 p, const Polygon& poly, double eps) { return distance_to_boundary(p, poly) <= eps; }

namespace {

bool crossing_inside(Vec2 p, const Polygon& poly) {
  bool in = false;
  for (std::size_t i = 0, n = poly.size(), j = n - 1; i < n; j = i++) {
    const Vec2 a = poly.v[i], b = poly.v[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

}  // namespace

// The crossing test is cheap; the boundary distance settles only the ambiguous side.
bool point_in_closed(Vec2 p, const Polygon& poly, double eps) {
  return crossing_inside(p, poly) || point_on_boundary(p, poly, eps);
}

bool point_strictly_inside(Vec2 p, const Polygon& poly, double eps) {
  return crossing_inside(p, poly) && !point_on_boundary(p, poly, eps);
}

Vec2 interior_point(const Polygon& poly) {
  const std::size_t n = poly.size();
  // The lowest (then leftmost) vertex is always convex.
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (poly.v[i].y < poly.v[k].y || (poly.v[i].y == poly.v[k].y && poly.v[i].x < poly.v[k].x)) k = i;
  }
  const Vec2 a = poly.v[(k + n - 1) % n], v = poly.v[k], b = poly.v[(k + 1) % n];
  const Polygon tri{{a, v, b}};
  double best = -1.0;
  Vec2 q;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || i == (k + 1) % n || i == (k + n - 1) % n) continue;
    if (!point_in_closed(poly.v[i], tri, 0.0)) continue;
    const double d = std::abs(cross(b - a, poly.v[i] - a));
    if (d > best) {
      best = d;
      q = poly.v[i];
    }
  }
  if (best < 0.0) return (a + v + b) / 3.0;
  return 0.5 * (v + q);
}

namespace {

// Parameters along a->b where the segment meets the polygon boundary.
void boundary_parameters(Vec2 a, Vec2 b, const Polygon& poly, std::vector<double>& ts) {
  const Vec2 d = b - a;
  const double dd = norm2(d);
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Vec2 p = poly.v[i], q = poly.v[(i + 1) % n];
    const Vec2 e = q - p;
    const double den = cross(d, e);
    const double scale = std::sqrt(dd * norm2(e));
    if (std::abs(den) > 1e-12 * scale) {
      const double t = cross(p - a, e) / den;
      const double u = cross(p - a, d) / den;
      if (t >= -1e-12 && t <= 1 + 1e-12 && u >= -1e-12 && u <= 1 + 1e-12) ts.push_back(std::clamp(t, 0.0, 1.0));
    } else if (std::abs(cross(p - a, d)) <= 1e-12 * std::sqrt(dd) * (1.0 + norm(p - a))) {
      // Collinear: edge endpoints projected on the segment.
      for (Vec2 w : {p, q}) {
        const double t = dot(w - a, d) / dd;
        if (t >= 0.0 && t <= 1.0) ts.push_back(t);
      }
    }
  }
}

template <class InsideFn>
bool any_piece_inside(Vec2 a, Vec2 b, const Polygon& poly, InsideFn bad, double* first_t = nullptr) {
  std::vector<double> ts{0.0, 1.0};
  boundary_parameters(a, b, poly, ts);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] < 1e-12) continue;
    const Vec2 m = a + 0.5 * (ts[i] + ts[i + 1]) * (b - a);
    if (bad(m)) {
      if (first_t) *first_t = ts[i];
      return true;
    }
  }
  return false;
}

Box segment_box(Vec2 a, Vec2 b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

}  // namespace

bool segment_obstacle_free(Vec2 a, Vec2 b, const Polygon& obstacle) {
  if (!segment_box(a, b).overlaps(bounding_box(obstacle), 1e-9)) return true;
  if (dist(a, b) < 1e-15) return !point_strictly_inside(a, obstacle);
  return !any_piece_inside(a, b, obstacle, [&](Vec2 m) { return point_strictly_inside(m, obstacle); });
}

bool segment_obstacle_free(Vec2 a, Vec2 b, const Obstacles& obstacles) {
  for (const Polygon& o : obstacles)
    if (!segment_obstacle_free(a, b, o)) return false;
  return true;
}

bool segment_in_region(Vec2 a, Vec2 b, const Polygon& region) {
  if (!point_in_closed(a, region) || !point_in_closed(b, region)) return false;
  if (dist(a, b) < 1e-15) return true;
  return !any_piece_inside(a, b, region, [&](Vec2 m) { return !point_in_closed(m, region); });
}

double first_blocked_parameter(Vec2 a, Vec2 b, const Obstacles& obstacles) {
  double best = 1.0;
  for (const Polygon& o : obstacles) {
    if (!segment_box(a, b).overlaps(bounding_box(o), 1e-9)) continue;
    double t = 1.0;
    if (any_piece_inside(a, b, o, [&](Vec2 m) { return point_strictly_inside(m, o); }, &t)) best = std::min(best, t);
  }
  return best;
}

bool region_obstacle_free(const Polygon& region, const Obstacles& obstacles) {
  const Box rb = bounding_box(region);
  for (const Polygon& o : obstacles) {
    if (!rb.overlaps(bounding_box(o), 1e-9)) continue;
    for (std::size_t i = 0, n = region.size(); i < n; ++i)
      if (!segment_obstacle_free(region.v[i], region.v[(i + 1) % n], o)) return false;
    // No boundary crossing: either the obstacle sits inside the region or they are apart.
    if (point_in_closed(interior_point(o), region, 0.0)) return false;
  }
  return true;
}

bool region_obstacle_free(const Disk& region, const Obstacles& obstacles) {
  for (const Polygon& o : obstacles) {
    if (point_strictly_inside(region.c, o)) return false;
    if (distance_to_boundary(region.c, o) < region.r - kEpsGeom) return false;
  }
  return true;
}

namespace {

// Arc of the sector boundary passes through the obstacle interior.
bool arc_hits(const Sector& s, const Polygon& o) {
  std::vector<double> offs{0.0, s.arc.span};
  for (std::size_t i = 0, n = o.size(); i < n; ++i) {
    const Vec2 p = o.v[i] - s.apex, e = o.v[(i + 1) % n] - o.v[i];
    const double A = norm2(e), B = 2.0 * dot(p, e), C = norm2(p) - s.radius * s.radius;
    const double disc = B * B - 4 * A * C;
    if (disc < 0.0) continue;
    const double sq = std::sqrt(disc);
    for (double u : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
      if (u < -1e-12 || u > 1 + 1e-12) continue;
      const Vec2 q = p + u * e;
      if (norm(q) < 1e-15) continue;
      const double off = normalize_angle(std::atan2(q.y, q.x) - s.arc.start);
      if (off <= s.arc.span) offs.push_back(off);
    }
  }
  std::sort(offs.begin(), offs.end());
  for (std::size_t i = 0; i + 1 < offs.size(); ++i) {
    if (offs[i + 1] - offs[i] < 1e-12) continue;
    const double th = s.arc.start + 0.5 * (offs[i] + offs[i + 1]);
    if (point_strictly_inside(s.apex + s.radius * unit_from_angle(th), o)) return true;
  }
  return false;
}

}  // namespace

bool point_in_sector(Vec2 p, const Sector& s, double eps) {
  const Vec2 d = p - s.apex;
  const double r = norm(d);
  if (r <= eps) return true;
  if (r > s.radius + eps) return false;
  if (s.arc.contains(std::atan2(d.y, d.x), 0.0)) return true;
  // Within eps of one of the bounding radii.
  for (double th : {s.arc.start, s.arc.end()}) {
    if (distance_to_segment(p, s.apex, s.apex + s.radius * unit_from_angle(th)) <= eps) return true;
  }
  return false;
}

bool region_obstacle_free(const Sector& region, const Obstacles& obstacles) {
  const Vec2 e1 = region.apex + region.radius * unit_from_angle(region.arc.start);
  const Vec2 e2 = region.apex + region.radius * unit_from_angle(region.arc.end());
  for (const Polygon& o : obstacles) {
    if (!segment_obstacle_free(region.apex, e1, o) || !segment_obstacle_free(region.apex, e2, o)) return false;
    if (arc_hits(region, o)) return false;
    if (point_in_sector(interior_point(o), region, 0.0)) return false;
  }
  return true;
}

bool region_in_arena(const Polygon& region, const Polygon& arena) {
  for (std::size_t i = 0, n = region.size(); i < n; ++i)
    if (!segment_in_region(region.v[i], region.v[(i + 1) % n], arena)) return false;
  // A non-convex arena could still poke into the region.
  for (const Vec2& q : arena.v)
    if (point_strictly_inside(q, region)) return false;
  return true;
}

bool region_in_arena(const Disk& region, const Polygon& arena) {
  if (!point_in_closed(region.c, arena)) return false;
  return distance_to_boundary(region.c, arena) >= region.r - kEpsGeom;
}

Vec2 project_to_sector(Vec2 p, const Sector& s) {
  if (point_in_sector(p, s, 0.0)) return p;
  const Vec2 d = p - s.apex;
  Vec2 best = s.apex;
  double bd = dist(p, best);
  auto consider = [&](Vec2 q) {
    const double dq = dist(p, q);
    if (dq < bd) {
      bd = dq;
      best = q;
    }
  };
  if (norm(d) > 0.0 && s.arc.contains(std::atan2(d.y, d.x), 0.0)) consider(s.apex + s.radius * normalized(d));
  for (double th : {s.arc.start, s.arc.end()})
    consider(closest_point_on_segment(p, s.apex, s.apex + s.radius * unit_from_angle(th)));
  return best;
}

Vec2 project_to_convex_polygon(Vec2 p, const Polygon& poly) {
  if (!is_convex(poly)) throw InvalidInput("projection target polygon is not convex");
  bool inside = true;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    if (cross(poly.v[(i + 1) % n] - poly.v[i], p - poly.v[i]) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return p;
  Vec2 best = poly.v[0];
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Vec2 q = closest_point_on_segment(p, poly.v[i], poly.v[(i + 1) % n]);
    const double d = dist(p, q);
    if (d < bd) {
      bd = d;
      best = q;
    }
  }
  return best;
}

double distance_to_convex_polygon(Vec2 p, const Polygon& poly) { return dist(p, project_to_convex_polygon(p, poly)); }

double convex_polygon_distance(const Polygon& a, const Polygon& b) {
  for (const Vec2& q : a.v)
    if (point_in_closed(q, b, 0.0)) return 0.0;
  for (const Vec2& q : b.v)
    if (point_in_closed(q, a, 0.0)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec2 a0 = a.v[i], a1 = a.v[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec2 b0 = b.v[j], b1 = b.v[(j + 1) % b.size()];
      if (segments_touch(a0, a1, b0, b1)) return 0.0;
      d = std::min({d, distance_to_segment(a0, b0, b1), distance_to_segment(a1, b0, b1),
                    distance_to_segment(b0, a0, a1), distance_to_segment(b1, a0, a1)});
    }
  }
  return d;
}

namespace {

// Keeps the part of a convex polygon left of the directed line a->b shifted right by `pad`.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& in, Vec2 a, Vec2 b, double pad) {
  std::vector<Vec2> out;
  const Vec2 d = b - a;
  const double len = norm(d);
  for (std::size_t k = 0, m = in.size(); k < m; ++k) {
    const Vec2 p = in[k], q = in[(k + 1) % m];
    const double sp = cross(d, p - a) / len + pad, sq = cross(d, q - a) / len + pad;
    if (sp >= 0.0) out.push_back(p);
    if ((sp >= 0.0) != (sq >= 0.0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

}  // namespace

bool polygons_touch(const Polygon& a, const Polygon& b) {
  if (!bounding_box(a).overlaps(bounding_box(b), 1e-12)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_touch(a.v[i], a.v[(i + 1) % a.size()], b.v[j], b.v[(j + 1) % b.size()])) return true;
  return point_in_closed(a.v[0], b, 0.0) || point_in_closed(b.v[0], a, 0.0);
}

std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const Polygon& clip) {
  std::vector<Vec2> out = subject;
  for (std::size_t i = 0, n = clip.size(); i < n && !out.empty(); ++i)
    out = clip_halfplane(out, clip.v[i], clip.v[(i + 1) % n], 0.0);
  out = remove_collinear(out);
  if (out.size() < 3 || std::abs(signed_area(out)) < 1e-14) return {};
  return out;
}

std::vector<Vec2> offset_convex(const Polygon& poly, double eps) {
  // Intersection of the edge half-planes, each pushed outward by eps (mitred corners).
  const Box b = bounding_box(poly);
  const double pad = std::abs(eps) * 4.0 + 1.0;
  std::vector<Vec2> out = {{b.lo.x - pad, b.lo.y - pad}, {b.hi.x + pad, b.lo.y - pad},
                           {b.hi.x + pad, b.hi.y + pad}, {b.lo.x - pad, b.hi.y + pad}};
  for (std::size_t i = 0, n = poly.size(); i < n && !out.empty(); ++i)
    out = clip_halfplane(out, poly.v[i], poly.v[(i + 1) % n], eps);
  out = remove_collinear(out);
  if (out.size() < 3 || std::abs(signed_area(out)) < 1e-14) return {};
  return out;
}

std::vector<Vec2> remove_collinear(const std::vector<Vec2>& pts, double eps) {
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    if (!out.empty() && dist(out.back(), p) <= eps) continue;
    out.push_back(p);
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= eps) out.pop_back();
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t i = 0, n = out.size(); i < n; ++i) {
      const Vec2 a = out[(i + n - 1) % n], b = out[i], c = out[(i + 1) % n];
      if (std::abs(cross(b - a, c - b)) <= eps * std::max(1.0, norm(c - a)) && dot(b - a, c - b) >= 0.0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

bool line_intersection(Vec2 p, Vec2 r, Vec2 q, Vec2 w, double& s, double& u) {
  const double den = cross(r, w);
  if (std::abs(den) < 1e-15 * std::max(1.0, norm(r) * norm(w))) return false;
  s = cross(q - p, w) / den;
  u = cross(q - p, r) / den;
  return true;
}

double ray_exit_distance(Vec2 origin, Vec2 dir, const Polygon& poly) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Vec2 a = poly.v[i], b = poly.v[(i + 1) % n];
    // Only edges the ray moves towards (outward normal has positive component along dir).
    const Vec2 outward = perp_cw(b - a);
    const double rate = dot(outward, dir);
    if (rate <= 0.0) continue;
    const double slack = dot(outward, a - origin);  // >= 0 when origin is inside
    best = std::min(best, std::max(0.0, slack / rate));
  }
  return best;
}

}  // namespace mocg
