// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "mocg/convexopt.hpp"
#include "mocg/esp.hpp"

namespace mocg {

// Obstacle vertices (graph node indices) from which the whole goal is visible.
std::vector<std::size_t> goal_visible_obstacle_vertices(const EspGraph& g);

// Farthest point of the sector from s.
double max_sector_distance(const Sector& sector, Vec2 s);

// Convex sectors whose union contains every point within ESP distance ell of source:
// the wavefront sectors plus sectors covering shadowed directions of each wavelet center.
std::vector<Sector> reach_cover(const EspGraph& g, Vec2 source, double ell);

struct NonvisCertificate {
  std::size_t anchor_node = 0;
  Vec2 anchor;
  double anchor_distance = 0.0;  // d_ESP(P, anchor)
  double evader_budget = 0.0;    // anchor_distance / alpha
  EspPath path;                  // P -> anchor
  std::vector<Sector> sectors;
  std::vector<double> d_k;
  std::vector<double> J;
  double min_J = kPosInf;
};

// First anchor (by ESP distance from P) that certifies the two-stage strategy; nullopt when none does.
// Does not test whether P itself is goal-visible.
std::optional<NonvisCertificate> check_nonvis_winning(const EspGraph& g, const std::vector<std::size_t>& gv_vertices,
                                                      Vec2 P, Vec2 E, double alpha, double r);

// Certificate for a fixed anchor (nullopt when its conditions fail).
std::optional<NonvisCertificate> check_anchor(const EspGraph& g, std::size_t anchor_node, Vec2 P, Vec2 E, double alpha,
                                              double r);

}  // namespace mocg
