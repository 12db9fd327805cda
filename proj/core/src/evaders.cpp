// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/evaders.hpp"

#include "mocg/errors.hpp"

namespace mocg {

std::optional<std::size_t> check_evasion_winning(const EspGraph& g, Vec2 P, Vec2 E, double alpha, double r) {
  const Polygon& goal = g.world().goal;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    double dp = 0.0, de = 0.0;
    try {
      de = g.distance(E, goal.v[i]);
    } catch (const Unreachable&) {
      continue;
    }
    try {
      dp = g.distance(P, goal.v[i]);
    } catch (const Unreachable&) {
      return i;  // pursuer can never get there
    }
    if (dp - r > alpha * de) return i;
  }
  return std::nullopt;
}

Control esp_pure_control(const EspGraph& g, Vec2 P, Vec2 E) {
  if (dist(P, E) < 1e-12) return {{0.0, 0.0}, 0.0};
  EspPath path;
  try {
    path = g.path(P, E);
  } catch (const Unreachable&) {
    return {{0.0, 0.0}, 0.0};
  }
  const Vec2 next = path.points[1];
  Control c{normalized(next - P), dist(P, next)};
  return c;
}

const char* policy_name(EvaderPolicyKind k) {
  switch (k) {
    case EvaderPolicyKind::RandomWalk: return "random-walk";
    case EvaderPolicyKind::EspGreedy: return "esp-greedy";
    case EvaderPolicyKind::Scripted: return "scripted";
    case EvaderPolicyKind::Stationary: return "stationary";
  }
  return "?";
}

EvaderPolicyKind policy_from_name(const std::string& name) {
  for (auto k : {EvaderPolicyKind::RandomWalk, EvaderPolicyKind::EspGreedy, EvaderPolicyKind::Scripted,
                 EvaderPolicyKind::Stationary})
    if (name == policy_name(k)) return k;
  throw InvalidInput("unknown evader policy '" + name + "'");
}

EvaderBrain::EvaderBrain(EvaderPolicySpec spec, std::uint64_t seed) : spec_(std::move(spec)), rng_(seed) {
  if (spec_.resample_every < 1) throw InvalidInput("resample_every must be at least 1");
}

Control EvaderBrain::control(const EspGraph& g, Vec2 self, double speed, const std::vector<PursuerView>& pursuers) {
  const long k = step_++;
  switch (spec_.kind) {
    case EvaderPolicyKind::Stationary:
      return {{0.0, 0.0}, 0.0};
    case EvaderPolicyKind::Scripted: {
      if (static_cast<std::size_t>(k) >= spec_.script.size()) return {{0.0, 0.0}, 0.0};
      return {unit_from_angle(spec_.script[static_cast<std::size_t>(k)])};
    }
    case EvaderPolicyKind::RandomWalk: {
      if (k % spec_.resample_every == 0) heading_ = angle_(rng_);
      return {unit_from_angle(heading_)};
    }
    case EvaderPolicyKind::EspGreedy: {
      const Polygon& goal = g.world().goal;
      auto winning = [&](std::size_t vi) {
        for (const PursuerView& p : pursuers) {
          const double alpha = p.speed / speed;
          double dp = 0.0, de = 0.0;
          try {
            de = g.distance(self, goal.v[vi]);
          } catch (const Unreachable&) {
            return false;
          }
          try {
            dp = g.distance(p.position, goal.v[vi]);
          } catch (const Unreachable&) {
            continue;
          }
          if (!(dp - p.capture_radius > alpha * de)) return false;
        }
        return true;
      };
      if (!target_ || !winning(*target_)) {
        std::optional<std::size_t> best_win, best_any;
        double dw = std::numeric_limits<double>::infinity(), da = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < goal.size(); ++i) {
          double d = 0.0;
          try {
            d = g.distance(self, goal.v[i]);
          } catch (const Unreachable&) {
            continue;
          }
          if (d < da) {
            da = d;
            best_any = i;
          }
          if (d < dw && winning(i)) {
            dw = d;
            best_win = i;
          }
        }
        target_ = best_win ? best_win : best_any;
      }
      if (!target_) return {{0.0, 0.0}, 0.0};
      return esp_pure_control(g, self, goal.v[*target_]);
    }
  }
  return {{0.0, 0.0}, 0.0};
}

}  // namespace mocg
