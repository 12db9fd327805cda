// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <vector>

#include "mocg/geometry.hpp"

namespace mocg {

inline constexpr double kEpsFeas = 1e-7;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// f(x) = |x - P| - alpha |x - E| - r; the set {f >= 0} is where the evader wins the race.
struct FConstraint {
  Vec2 P;
  Vec2 E;
  double alpha = 2.0;
  double r = 0.0;

  double eval(Vec2 x) const { return dist(x, P) - alpha * dist(x, E) - r; }
  // Distance from E to the boundary of {f >= 0} along direction phi.
  double radial(double phi) const;
};

// Intersection of f-constraints sharing one evader: convex and star-shaped about E.
class EvasionRegion {
 public:
  // Throws InvalidInput when constraints disagree on E, alpha <= 1, or E is within r of P.
  explicit EvasionRegion(std::vector<FConstraint> cs);

  Vec2 evader() const { return E_; }
  const std::vector<FConstraint>& constraints() const { return cs_; }
  double radial(double phi) const;
  Vec2 boundary(double phi) const { return E_ + radial(phi) * unit_from_angle(phi); }
  bool contains(Vec2 x, double tol = 1e-12) const;
  Vec2 project(Vec2 p) const;
  double min_value(Vec2 x) const;  // min_i f_i(x)

 private:
  std::vector<FConstraint> cs_;
  Vec2 E_;
};

Vec2 project_f_constraint(Vec2 p, const FConstraint& c);

struct SetDistance {
  double dist = 0.0;  // -infinity when the sets overlap with interior
  Vec2 x_I;           // point of the evasion region
  Vec2 x_G;           // point of the goal
  bool converged = true;
  int iterations = 0;
};

// Signed distance between the evasion region and a convex goal.
SetDistance convex_set_distance(const std::vector<FConstraint>& cs, const Polygon& goal);

// x-feasible set of one wavefront sector: (S + disk(rho1)) intersected with disk(s, rho2).
class SectorReach {
 public:
  SectorReach(const Sector& sector, Vec2 s, double rho1, double rho2);

  bool empty() const { return empty_; }
  bool contains(Vec2 p, double tol = 1e-12) const;
  Vec2 project(Vec2 p) const;  // requires !empty()

 private:
  Vec2 project_c1(Vec2 p) const;
  bool in_c1(Vec2 p, double tol) const;
  bool in_c2(Vec2 p, double tol) const;

  Sector sector_;
  Vec2 s_;
  double rho1_, rho2_;
  bool empty_ = false;
  std::vector<Vec2> corners_;  // boundary intersection points of the two pieces
};

Vec2 project_sector_dilation(Vec2 p, const Sector& sector, double rho);

// Signed distance between the sector's x-feasible set and the goal:
// +infinity when the set is empty, -infinity when it overlaps the goal with interior.
double solve_wavelet_program(const Sector& sector, Vec2 s, double alpha, double r, double d_k, const Polygon& goal,
                             Vec2* witness = nullptr);

}  // namespace mocg
