// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mocg/esp.hpp"

namespace mocg {

// Unit (or zero) heading plus an optional cap on the distance covered this step.
struct Control {
  Vec2 u;
  double max_travel = std::numeric_limits<double>::infinity();
};

// Index of the first goal vertex x with d(P, x) - r > alpha d(E, x), if any.
std::optional<std::size_t> check_evasion_winning(const EspGraph& g, Vec2 P, Vec2 E, double alpha, double r);

// Head along the first leg of the shortest path to the evader; zero when coincident.
Control esp_pure_control(const EspGraph& g, Vec2 P, Vec2 E);

enum class EvaderPolicyKind { RandomWalk, EspGreedy, Scripted, Stationary };

const char* policy_name(EvaderPolicyKind k);
// Throws InvalidInput on an unknown name.
EvaderPolicyKind policy_from_name(const std::string& name);

struct EvaderPolicySpec {
  EvaderPolicyKind kind = EvaderPolicyKind::RandomWalk;
  std::optional<std::uint64_t> seed;  // random-walk only; derived from the scenario seed when absent
  int resample_every = 10;            // random-walk heading hold, in steps
  std::vector<double> script;         // scripted headings in radians, one per step

  friend bool operator==(const EvaderPolicySpec&, const EvaderPolicySpec&) = default;
};

struct PursuerView {
  Vec2 position;
  double speed = 1.0;
  double capture_radius = 0.0;
};

class EvaderBrain {
 public:
  EvaderBrain(EvaderPolicySpec spec, std::uint64_t seed);

  Control control(const EspGraph& g, Vec2 self, double speed, const std::vector<PursuerView>& pursuers);
  std::optional<std::size_t> target() const { return target_; }

 private:
  EvaderPolicySpec spec_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> angle_{0.0, kTwoPi};
  double heading_ = 0.0;
  long step_ = 0;
  std::optional<std::size_t> target_;
};

}  // namespace mocg
