// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mocg/allocation.hpp"
#include "mocg/evaders.hpp"

namespace mocg {

// One coalition against one evader under a fixed pursuit strategy.
enum class SubgameStrategy { Onsite, GoalVisible, NonVisible, EspPure };

struct SubgameSetup {
  World world;
  std::vector<PursuerState> pursuers;
  EvaderState evader;
  EvaderPolicySpec policy;
  std::uint64_t seed = 0;
  double dt = 0.01;
  double delta = 0.05;
  long max_steps = 10000;
  SubgameStrategy strategy = SubgameStrategy::Onsite;
};

struct SubgameFrame {
  std::vector<Vec2> pursuers;
  Vec2 evader;
  double safe = kNegInf;  // safe distance at the start of the step, when the strategy computes one
  Vec2 x_I;
  bool stage2 = false;    // non-visible strategy: anchor reached
  bool clipped = false;   // some pursuer motion was clipped
};

struct SubgameResult {
  bool captured = false;
  bool arrived = false;
  long steps = 0;
  long captor = -1;
  std::vector<SubgameFrame> frames;  // frames[k] holds positions at step k; one extra for the final state
  std::vector<OnsiteSnapshot> snapshots;
  std::optional<NonvisCertificate> certificate;
  long stage1_steps = -1;
  double stage1_length = 0.0;  // distance travelled before reaching the anchor
};

// Throws InvalidInput when the strategy has no certificate at the initial state.
SubgameResult run_subgame(const SubgameSetup& setup);

}  // namespace mocg
