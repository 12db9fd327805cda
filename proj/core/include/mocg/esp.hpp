// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mocg/geometry.hpp"

namespace mocg {

// Static environment: arena, open obstacles, convex goal.
struct World {
  Polygon arena;
  Obstacles obstacles;
  Polygon goal;

  bool in_free_space(Vec2 p) const;
  bool in_goal(Vec2 p) const { return point_in_closed(p, goal); }
  // Closed segment lies in the arena and misses every obstacle interior.
  bool visible(Vec2 a, Vec2 b) const;
};

struct EspPath {
  double length = 0.0;
  std::vector<Vec2> points;  // includes both endpoints
};

// Visibility graph over obstacle, arena and goal vertices with an all-pairs table.
class EspGraph {
 public:
  enum class NodeKind : std::uint8_t { Obstacle, Arena, Goal };

  explicit EspGraph(World world);

  const World& world() const { return world_; }
  std::size_t node_count() const { return nodes_.size(); }
  Vec2 node(std::size_t i) const { return nodes_[i]; }
  NodeKind kind(std::size_t i) const { return kinds_[i]; }
  const std::vector<Vec2>& nodes() const { return nodes_; }
  // Node indices of obstacle vertices.
  const std::vector<std::size_t>& obstacle_nodes() const { return obstacle_nodes_; }
  double node_distance(std::size_t i, std::size_t j) const { return dist_[i * nodes_.size() + j]; }

  // Nodes visible from p, in index order.
  std::vector<std::size_t> visible_nodes(Vec2 p) const;
  // d_ESP(p, node) for every node (infinity when unreachable); p must be free.
  std::vector<double> distances_from(Vec2 p) const;

  // Throws InvalidInput for endpoints outside free space, Unreachable when no path exists.
  EspPath path(Vec2 a, Vec2 b) const;
  double distance(Vec2 a, Vec2 b) const;

 private:
  void check_free(Vec2 p, const char* what) const;

  World world_;
  std::vector<Vec2> nodes_;
  std::vector<NodeKind> kinds_;
  std::vector<std::size_t> obstacle_nodes_;
  std::vector<double> dist_;     // n*n
  std::vector<int> hops_;        // n*n
  std::vector<int> next_;        // n*n, -1 when unreachable
};

inline EspPath esp(const EspGraph& g, Vec2 a, Vec2 b) { return g.path(a, b); }
bool esp_reachable(const EspGraph& g, Vec2 a, Vec2 b, double ell);

// Circular arc of the ESP wavefront; center_node is -1 for the source.
struct Wavelet {
  Vec2 center;
  double radius = 0.0;
  AngleRange arc;
  int center_node = -1;
  double center_distance = 0.0;  // d_ESP(source, center)
};

inline constexpr double kWavefrontOwnTol = 1e-6;
inline constexpr int kWavefrontSamples = 720;

// Set of points at ESP distance exactly ell from source, as arcs of span <= pi.
std::vector<Wavelet> wavefront(const EspGraph& g, Vec2 source, double ell);
// Throws InvalidInput when the arc spans more than pi.
Sector sector_of_wavelet(const Wavelet& w);

}  // namespace mocg
