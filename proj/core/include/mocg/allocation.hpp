// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mocg/convexopt.hpp"
#include "mocg/esp.hpp"
#include "mocg/nonvis.hpp"
#include "mocg/onsite.hpp"

namespace mocg {

struct PursuerState {
  Vec2 position;
  double speed = 1.0;
  double capture_radius = 0.0;
};

struct EvaderState {
  Vec2 position;
  double speed = 1.0;
};

// Read-only inputs shared by every winning check in one step.
struct CheckContext {
  const EspGraph& graph;
  const std::vector<std::size_t>& goal_visible_vertices;
  double delta = 0.0;
  const World& world() const { return graph.world(); }
};

enum class Certificate : int { None = 0, Onsite = 1, GoalVisible = 2, NonVisible = 3 };

struct PursuitCheck {
  Certificate T = Certificate::None;
  std::vector<OnsiteSnapshot> snapshots;  // onsite: one per member
  SetDistance safe;                       // goal-visible: safe distance at check time
  std::optional<NonvisCertificate> nonvis;
};

std::vector<FConstraint> evasion_constraints(const std::vector<PursuerState>& members, const EvaderState& e);

// All members goal-visible and the safe distance non-negative.
bool check_goalvis_winning(const CheckContext& ctx, const std::vector<PursuerState>& members, const EvaderState& e,
                           SetDistance* safe = nullptr);

// Onsite first, then goal-visible, then non-goal-visible (single pursuer only).
PursuitCheck check_pursuit_winning(const CheckContext& ctx, const std::vector<PursuerState>& members,
                                   const EvaderState& e);

struct WinEdge {
  std::size_t id = 0;
  std::vector<std::size_t> pursuers;  // sorted, size 1 or 2
  std::size_t evader = 0;
  PursuitCheck check;
};

struct WinningGraph {
  std::vector<WinEdge> edges;          // ordered by id
  std::vector<std::string> warnings;   // checks dropped after solver failures
};

// Singleton edges for every (pursuer, live evader); pair edges through the goal-visible check only when
// neither member already has an edge to that evader.
WinningGraph build_winning_graph(const CheckContext& ctx, const std::vector<PursuerState>& pursuers,
                                 const std::vector<EvaderState>& evaders, const std::vector<std::size_t>& live);

inline constexpr double kBipTimeCapMs = 100.0;

struct BipSolution {
  std::vector<std::size_t> chosen;  // indices into the edge list, ascending
  std::size_t onsite_count = 0;
  bool optimal = true;
  long nodes = 0;
};

// Maximum number of edges with no shared evader or pursuer. Ties prefer more onsite edges, then the
// lexicographically smallest id list.
BipSolution solve_bip(const std::vector<WinEdge>& edges, double time_cap_ms = kBipTimeCapMs);

struct Attachment {
  std::size_t pursuer = 0;
  std::size_t evader = 0;
  OnsiteSnapshot snapshot;
};

// Each listed pursuer with an onsite certificate against a live evader joins the nearest such evader.
std::vector<Attachment> enhanced_matching(const CheckContext& ctx, const std::vector<std::size_t>& free_pursuers,
                                          const std::vector<PursuerState>& pursuers,
                                          const std::vector<EvaderState>& evaders,
                                          const std::vector<std::size_t>& live);

struct Pairing {
  std::size_t pursuer = 0;
  std::size_t evader = 0;
};

// Augmenting-path maximum matching; adj[left] lists right vertices.
std::vector<Pairing> maximum_matching(std::size_t n_left, std::size_t n_right,
                                      const std::vector<std::vector<std::size_t>>& adj);

// Maximum matching over pairs where the evader holds no evasion certificate against the pursuer.
std::vector<Pairing> non_dominated_matching(const EspGraph& g, const std::vector<std::size_t>& free_pursuers,
                                            const std::vector<std::size_t>& free_evaders,
                                            const std::vector<PursuerState>& pursuers,
                                            const std::vector<EvaderState>& evaders);

// Nearest (shortest-path) unmatched evader, else nearest live evader.
std::vector<Pairing> closest_matching(const EspGraph& g, const std::vector<std::size_t>& free_pursuers,
                                      const std::vector<std::size_t>& unmatched_evaders,
                                      const std::vector<std::size_t>& live,
                                      const std::vector<PursuerState>& pursuers,
                                      const std::vector<EvaderState>& evaders);

}  // namespace mocg
