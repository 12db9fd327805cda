// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mocg/esp.hpp"
#include "mocg/evaders.hpp"

namespace mocg {

struct PursuerSpec {
  Vec2 position;
  double speed = 1.0;
  double capture_radius = 0.0;
  friend bool operator==(const PursuerSpec&, const PursuerSpec&) = default;
};

struct EvaderSpec {
  Vec2 position;
  double speed = 1.0;
  EvaderPolicySpec policy;
  friend bool operator==(const EvaderSpec&, const EvaderSpec&) = default;
};

struct RenderOptions {
  int every = 0;  // 0 disables SVG frames
  bool apollonius = true;
  bool gcp = true;
  bool wavefront = false;
  friend bool operator==(const RenderOptions&, const RenderOptions&) = default;
};

inline constexpr int kScenarioVersion = 1;

struct Scenario {
  int version = kScenarioVersion;
  std::string name;
  Polygon arena;
  std::vector<Polygon> obstacles;
  Polygon goal;
  std::vector<PursuerSpec> pursuers;
  std::vector<EvaderSpec> evaders;
  std::optional<double> delta;  // default 0.05 * goal diameter
  std::optional<double> dt;     // default 0.01 * arena diameter / max speed
  int max_steps = 2000;
  std::uint64_t seed = 0;
  int allocation_stride = 1;
  RenderOptions render;

  World world() const { return World{arena, obstacles, goal}; }
  double effective_delta() const;
  double effective_dt() const;
  double max_speed() const;
  double alpha(std::size_t pursuer, std::size_t evader) const {
    return pursuers[pursuer].speed / evaders[evader].speed;
  }
  // Seed used by evader j's random policy.
  std::uint64_t evader_seed(std::size_t j) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Maps a field path such as "goal" or "pursuers[2].position" to a 1-based source line (0 when unknown).
using FieldLocator = std::function<int(const std::string&)>;

// Throws ScenarioError naming the offending field.
void validate_scenario(const Scenario& s, const FieldLocator& locate = {});

}  // namespace mocg
