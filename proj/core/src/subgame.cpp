// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/subgame.hpp"

#include <cmath>

#include "mocg/errors.hpp"
#include "mocg/goalvis.hpp"
#include "mocg/motion.hpp"

namespace mocg {

SubgameResult run_subgame(const SubgameSetup& s) {
  const EspGraph g(s.world);
  const World& w = g.world();
  const auto gv = goal_visible_obstacle_vertices(g);
  const CheckContext ctx{g, gv, s.delta};
  SubgameResult res;
  std::vector<PursuerState> ps = s.pursuers;
  EvaderState e = s.evader;

  switch (s.strategy) {
    case SubgameStrategy::Onsite:
      for (const auto& p : ps) {
        const double a = p.speed / e.speed;
        if (!check_onsite(w, p.position, e.position, a, s.delta)) throw InvalidInput("no onsite certificate");
        res.snapshots.push_back(onsite_snapshot(p.position, e.position, a, s.delta));
      }
      break;
    case SubgameStrategy::GoalVisible:
      if (!check_goalvis_winning(ctx, ps, e)) throw InvalidInput("no goal-visible certificate");
      break;
    case SubgameStrategy::NonVisible:
      if (ps.size() != 1) throw InvalidInput("non-visible strategy takes one pursuer");
      res.certificate = check_nonvis_winning(g, gv, ps[0].position, e.position, ps[0].speed / e.speed,
                                             ps[0].capture_radius);
      if (!res.certificate) throw InvalidInput("no non-visible certificate");
      break;
    case SubgameStrategy::EspPure:
      break;
  }

  EvaderBrain brain(s.policy, s.seed);
  std::size_t next_wp = 1;
  bool stage2 = false;

  auto snapshot_frame = [&](SubgameFrame f) {
    for (const auto& p : ps) f.pursuers.push_back(p.position);
    f.evader = e.position;
    f.stage2 = stage2;
    return f;
  };

  for (long k = 0; k < s.max_steps; ++k) {
    SubgameFrame f;
    std::vector<Vec2> targets(ps.size());
    const bool use_goalvis =
        s.strategy == SubgameStrategy::GoalVisible || (s.strategy == SubgameStrategy::NonVisible && stage2);
    if (use_goalvis) {
      try {
        const SetDistance sd = convex_set_distance(evasion_constraints(ps, e), w.goal);
        f.safe = sd.dist;
        f.x_I = sd.x_I;
      } catch (const Error&) {
        f.safe = kNegInf;
      }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const PursuerState& p = ps[i];
      const double step_len = p.speed * s.dt;
      const double a = p.speed / e.speed;
      switch (s.strategy) {
        case SubgameStrategy::Onsite:
          targets[i] = p.position + step_len * onsite_control(res.snapshots[i], p.position, e.position, a);
          break;
        case SubgameStrategy::NonVisible:
          if (!stage2) {
            targets[i] = follow_path(res.certificate->path.points, next_wp, p.position, step_len);
            break;
          }
          [[fallthrough]];
        case SubgameStrategy::GoalVisible:
          if (std::isfinite(f.safe)) {
            try {
              targets[i] = apply_control(p.position, goalvis_member_control(w, p.position, f.x_I), step_len);
              break;
            } catch (const InvalidInput&) {
            }
          }
          targets[i] = apply_control(p.position, esp_pure_control(g, p.position, e.position), step_len);
          break;
        case SubgameStrategy::EspPure:
          targets[i] = apply_control(p.position, esp_pure_control(g, p.position, e.position), step_len);
          break;
      }
    }
    std::vector<PursuerView> views;
    for (const auto& p : ps) views.push_back({p.position, p.speed, p.capture_radius});
    const Control ec = brain.control(g, e.position, e.speed, views);
    res.frames.push_back(snapshot_frame(f));

    for (std::size_t i = 0; i < ps.size(); ++i) {
      bool clipped = false;
      const Vec2 before = ps[i].position;
      ps[i].position = clip_motion(w, before, targets[i], &clipped);
      if (s.strategy == SubgameStrategy::NonVisible && !stage2) res.stage1_length += dist(before, ps[i].position);
      res.frames.back().clipped |= clipped;
    }
    e.position = clip_motion(w, e.position, apply_control(e.position, ec, e.speed * s.dt));
    res.steps = k + 1;

    if (s.strategy == SubgameStrategy::NonVisible && !stage2 && next_wp >= res.certificate->path.points.size()) {
      stage2 = true;
      res.stage1_steps = k + 1;
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (dist(ps[i].position, e.position) <= ps[i].capture_radius && w.visible(ps[i].position, e.position)) {
        res.captured = true;
        res.captor = static_cast<long>(i);
        break;
      }
    }
    if (!res.captured && w.in_goal(e.position)) res.arrived = true;
    if (res.captured || res.arrived) break;
  }
  res.frames.push_back(snapshot_frame({}));
  return res;
}

}  // namespace mocg
