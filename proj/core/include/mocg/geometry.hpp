// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace mocg {

inline constexpr double kEpsGeom = 1e-9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
// (x, y) -> (y, -x)
inline Vec2 perp_cw(Vec2 a) { return {a.y, -a.x}; }
inline Vec2 unit_from_angle(double th) { return {std::cos(th), std::sin(th)}; }

// Throws DegenerateInput on a (near) zero vector.
Vec2 normalized(Vec2 a);

double normalize_angle(double th);  // into [0, 2pi)
// Bearing of b - a in [0, 2pi). Throws DegenerateInput when a == b.
double bearing(Vec2 a, Vec2 b);
// Counter-clockwise rotation needed to go from angle a to angle b, in [0, 2pi).
double ccw_span(double a, double b);
double angular_distance(double a, double b);  // in [0, pi]

// Counter-clockwise range of directions [start, start + span].
struct AngleRange {
  double start = 0.0;
  double span = 0.0;
  bool full = false;

  static AngleRange ccw(double from, double to);
  static AngleRange full_circle() { return {0.0, kTwoPi, true}; }
  double end() const { return normalize_angle(start + span); }
  double mid() const { return normalize_angle(start + 0.5 * span); }
  bool contains(double th, double tol = kEpsGeom) const;
  // Closest direction inside the range (th itself when contained).
  double clamp(double th) const;
};

// Simple polygon, vertices stored counter-clockwise.
struct Polygon {
  std::vector<Vec2> v;

  std::size_t size() const { return v.size(); }
  const Vec2& operator[](std::size_t i) const { return v[i]; }
  const Vec2& at_wrap(std::ptrdiff_t i) const;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

using Obstacles = std::vector<Polygon>;

struct Box {
  Vec2 lo, hi;
  bool overlaps(const Box& o, double pad = 0.0) const {
    return lo.x <= o.hi.x + pad && o.lo.x <= hi.x + pad && lo.y <= o.hi.y + pad && o.lo.y <= hi.y + pad;
  }
};

struct Disk {
  Vec2 c;
  double r = 0.0;
};

// Closed circular sector; callers keep span <= pi so the sector is convex.
struct Sector {
  Vec2 apex;
  double radius = 0.0;
  AngleRange arc;
};

double signed_area(const std::vector<Vec2>& pts);
// Validates (>= 3 vertices, non-zero area, simple) and orients counter-clockwise.
// Throws InvalidInput.
Polygon make_polygon(std::vector<Vec2> pts);
bool is_simple(const std::vector<Vec2>& pts);
bool is_convex(const Polygon& p, double eps = kEpsGeom);
Box bounding_box(const Polygon& p);
Vec2 vertex_centroid(const Polygon& p);
double diameter(const Polygon& p);

Vec2 closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b);
double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);
double distance_to_boundary(Vec2 p, const Polygon& poly);
bool point_on_boundary(Vec2 p, const Polygon& poly, double eps = kEpsGeom);
bool point_in_closed(Vec2 p, const Polygon& poly, double eps = kEpsGeom);
bool point_strictly_inside(Vec2 p, const Polygon& poly, double eps = kEpsGeom);
// A point well inside the polygon.
Vec2 interior_point(const Polygon& poly);

// Closed segment [a, b] misses every open obstacle interior.
bool segment_obstacle_free(Vec2 a, Vec2 b, const Obstacles& obstacles);
bool segment_obstacle_free(Vec2 a, Vec2 b, const Polygon& obstacle);
// Closed segment stays inside the closed region.
bool segment_in_region(Vec2 a, Vec2 b, const Polygon& region);
// Parameter t in [0, 1] of the first point where a->b enters an obstacle interior, 1 if never.
double first_blocked_parameter(Vec2 a, Vec2 b, const Obstacles& obstacles);

bool region_obstacle_free(const Polygon& region, const Obstacles& obstacles);
bool region_obstacle_free(const Disk& region, const Obstacles& obstacles);
bool region_obstacle_free(const Sector& region, const Obstacles& obstacles);
bool region_in_arena(const Polygon& region, const Polygon& arena);
bool region_in_arena(const Disk& region, const Polygon& arena);

bool point_in_sector(Vec2 p, const Sector& s, double eps = kEpsGeom);
Vec2 project_to_sector(Vec2 p, const Sector& s);

// Exact Euclidean projection; throws InvalidInput when the polygon is not convex.
Vec2 project_to_convex_polygon(Vec2 p, const Polygon& poly);
double distance_to_convex_polygon(Vec2 p, const Polygon& poly);
double convex_polygon_distance(const Polygon& a, const Polygon& b);
// Closed polygons share at least one point.
bool polygons_touch(const Polygon& a, const Polygon& b);

// Intersection of two convex polygons (empty vector when they do not overlap).
std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const Polygon& clip);
// Convex polygon offset outward (eps > 0) or inward (eps < 0).
std::vector<Vec2> offset_convex(const Polygon& poly, double eps);
std::vector<Vec2> remove_collinear(const std::vector<Vec2>& pts, double eps = 1e-12);

// Intersection of lines p + s*r and q + u*w; false if parallel.
bool line_intersection(Vec2 p, Vec2 r, Vec2 q, Vec2 w, double& s, double& u);
// Distance from origin along direction dir until the ray leaves the convex polygon (origin inside).
double ray_exit_distance(Vec2 origin, Vec2 dir, const Polygon& convex_poly);

}  // namespace mocg
