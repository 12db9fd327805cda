// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mocg/errors.hpp"
#include "mocg/goalvis.hpp"
#include "mocg/motion.hpp"

namespace mocg {

std::vector<std::size_t> GameState::live() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < status.size(); ++j)
    if (status[j] == EvaderStatus::Alive) out.push_back(j);
  return out;
}

int GameState::captured() const {
  return static_cast<int>(std::count(status.begin(), status.end(), EvaderStatus::Captured));
}

Engine::Engine(Scenario scenario, EngineOptions opts) : sc_(std::move(scenario)), opts_(opts) {
  validate_scenario(sc_);
  sc_.arena = make_polygon(sc_.arena.v);
  sc_.goal = make_polygon(sc_.goal.v);
  for (Polygon& o : sc_.obstacles) o = make_polygon(o.v);
  graph_ = std::make_unique<EspGraph>(sc_.world());
  gv_vertices_ = goal_visible_obstacle_vertices(*graph_);
  dt_ = sc_.effective_dt();
  delta_ = sc_.effective_delta();
  for (const auto& p : sc_.pursuers) st_.pursuers.push_back({p.position, p.speed, p.capture_radius});
  for (std::size_t j = 0; j < sc_.evaders.size(); ++j) {
    st_.evaders.push_back({sc_.evaders[j].position, sc_.evaders[j].speed});
    brains_.emplace_back(sc_.evaders[j].policy, sc_.evader_seed(j));
  }
  st_.status.assign(sc_.evaders.size(), EvaderStatus::Alive);
  st_.tasks.assign(sc_.pursuers.size(), PursuerTask{});
  log_.scenario = sc_.name;
  log_.seed = sc_.seed;
  log_.dt = dt_;
  log_.delta = delta_;
}

bool Engine::finished() const { return st_.live().empty() || st_.step >= sc_.max_steps; }

void Engine::event(std::string kind, std::vector<std::size_t> pursuers, long evader, std::string msg) {
  log_.events.push_back(Event{st_.step, std::move(kind), std::move(pursuers), evader, std::move(msg)});
}

Frame Engine::snapshot() const {
  Frame f;
  f.step = st_.step;
  f.time = st_.time;
  for (const auto& p : st_.pursuers) f.pursuers.push_back(p.position);
  for (const auto& e : st_.evaders) f.evaders.push_back(e.position);
  f.status = st_.status;
  return f;
}

void Engine::assign_defeat_tasks(std::vector<PursuerTask>& next) const {
  for (const DefeatEntry& d : st_.defeat) {
    for (std::size_t k = 0; k < d.pursuers.size(); ++k) {
      const std::size_t i = d.pursuers[k];
      PursuerTask t;
      t.stage = Stage::Defeat;
      t.evader = static_cast<long>(d.evader);
      switch (d.check.T) {
        case Certificate::Onsite:
          t.mode = PursuerMode::Onsite;
          t.snapshot = d.check.snapshots[k];
          break;
        case Certificate::GoalVisible:
          t.mode = PursuerMode::GoalVisible;
          t.coalition = d.pursuers;
          break;
        case Certificate::NonVisible:
          t.mode = PursuerMode::NonVisible;
          t.cert = std::make_shared<const NonvisCertificate>(*d.check.nonvis);
          break;
        case Certificate::None:
          break;
      }
      const PursuerTask& old = st_.tasks[i];
      const bool keep = old.stage == Stage::Defeat && old.evader == t.evader &&
                        ((old.mode == t.mode && old.coalition == t.coalition) || old.mode == PursuerMode::Onsite);
      next[i] = keep ? old : t;
    }
  }
}

void Engine::allocate(Frame& f) {
  const std::vector<std::size_t> live = st_.live();
  const std::size_t n = st_.pursuers.size();
  const CheckContext ctx{*graph_, gv_vertices_, delta_};

  if (st_.step % sc_.allocation_stride == 0) {
    const WinningGraph wg = build_winning_graph(ctx, st_.pursuers, st_.evaders, live);
    for (const auto& w : wg.warnings) event("warning", {}, -1, w);
    const BipSolution bip = solve_bip(wg.edges);
    f.bip_optimal = bip.optimal;
    if (!bip.optimal) event("warning", {}, -1, "assignment search hit its time cap; using best found");
    if (bip.chosen.size() > st_.defeat.size()) {
      std::vector<DefeatEntry> next;
      for (std::size_t k : bip.chosen) {
        const WinEdge& e = wg.edges[k];
        next.push_back(DefeatEntry{e.pursuers, e.evader, e.check});
      }
      std::ostringstream msg;
      msg << "defeat set grows from " << st_.defeat.size() << " to " << next.size();
      st_.defeat = std::move(next);
      event("defeat_update", {}, -1, msg.str());
    }
  }

  std::vector<PursuerTask> next(n);
  assign_defeat_tasks(next);
  std::vector<char> busy(n, 0);
  std::vector<char> matched(st_.evaders.size(), 0);
  for (const DefeatEntry& d : st_.defeat) {
    matched[d.evader] = 1;
    for (std::size_t i : d.pursuers) busy[i] = 1;
  }

  // Members already holding a weaker certificate switch to onsite pursuit once it becomes available.
  for (std::size_t i = 0; i < n; ++i) {
    PursuerTask& t = next[i];
    if (!busy[i] || t.mode == PursuerMode::Onsite) continue;
    const PursuerState& p = st_.pursuers[i];
    const EvaderState& e = st_.evaders[static_cast<std::size_t>(t.evader)];
    const double a = p.speed / e.speed;
    if (p.position != e.position && check_onsite(graph_->world(), p.position, e.position, a, delta_)) {
      PursuerTask u;
      u.mode = PursuerMode::Onsite;
      u.stage = Stage::Defeat;
      u.evader = t.evader;
      u.snapshot = onsite_snapshot(p.position, e.position, a, delta_);
      t = u;
      event("upgrade", {i}, t.evader, "onsite certificate now available");
    }
  }

  std::vector<std::size_t> free_pursuers;
  for (std::size_t i = 0; i < n; ++i) {
    if (busy[i]) continue;
    const PursuerTask& old = st_.tasks[i];
    if (old.stage == Stage::Enhanced && old.evader >= 0 &&
        st_.status[static_cast<std::size_t>(old.evader)] == EvaderStatus::Alive) {
      next[i] = old;
      busy[i] = 1;
      matched[static_cast<std::size_t>(old.evader)] = 1;
    } else {
      free_pursuers.push_back(i);
    }
  }
  for (const Attachment& a : enhanced_matching(ctx, free_pursuers, st_.pursuers, st_.evaders, live)) {
    PursuerTask t;
    t.mode = PursuerMode::Onsite;
    t.stage = Stage::Enhanced;
    t.evader = static_cast<long>(a.evader);
    t.snapshot = a.snapshot;
    next[a.pursuer] = t;
    busy[a.pursuer] = 1;
    matched[a.evader] = 1;
  }

  auto remaining = [&] {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (!busy[i]) out.push_back(i);
    return out;
  };
  auto unmatched = [&] {
    std::vector<std::size_t> out;
    for (std::size_t j : live)
      if (!matched[j]) out.push_back(j);
    return out;
  };
  auto chase = [&](const Pairing& m, Stage stage) {
    PursuerTask t;
    t.mode = PursuerMode::EspPure;
    t.stage = stage;
    t.evader = static_cast<long>(m.evader);
    next[m.pursuer] = t;
    busy[m.pursuer] = 1;
    matched[m.evader] = 1;
  };
  for (const Pairing& m : non_dominated_matching(*graph_, remaining(), unmatched(), st_.pursuers, st_.evaders))
    chase(m, Stage::NonDominated);
  const auto left = remaining();
  for (const Pairing& m : closest_matching(*graph_, left, unmatched(), live, st_.pursuers, st_.evaders))
    chase(m, Stage::Closest);

  st_.tasks = std::move(next);

  for (const PursuerTask& t : st_.tasks) {
    AssignmentRecord r{t.evader, t.stage, t.mode, 0};
    f.assignments.push_back(r);
  }
  for (const DefeatEntry& d : st_.defeat) {
    f.defeat.push_back(DefeatRecord{d.pursuers, d.evader, static_cast<int>(d.check.T), std::nullopt});
    for (std::size_t i : d.pursuers) f.assignments[i].T = static_cast<int>(d.check.T);
  }
  const int lb = st_.lower_bound();
  if (last_lb_ && lb < *last_lb_) {
    event("lower_bound_decrease", {}, -1,
          "lower bound fell from " + std::to_string(*last_lb_) + " to " + std::to_string(lb));
    ++log_.summary.violations;
  }
  last_lb_ = lb;
  f.lower_bound = lb;
}

void Engine::step() {
  if (finished()) return;
  Frame f = snapshot();
  allocate(f);
  const World& w = graph_->world();
  const std::size_t n = st_.pursuers.size();

  // Safe distance once per goal-visible coalition.
  std::map<std::pair<std::vector<std::size_t>, long>, std::optional<SetDistance>> safe;
  for (std::size_t i = 0; i < n; ++i) {
    const PursuerTask& t = st_.tasks[i];
    const bool gv = t.mode == PursuerMode::GoalVisible || (t.mode == PursuerMode::NonVisible && t.stage2);
    if (!gv) continue;
    const std::vector<std::size_t> members = t.mode == PursuerMode::GoalVisible ? t.coalition : std::vector{i};
    const auto key = std::make_pair(members, t.evader);
    if (safe.count(key)) continue;
    std::vector<PursuerState> ms;
    for (std::size_t m : members) ms.push_back(st_.pursuers[m]);
    try {
      const SetDistance sd =
          convex_set_distance(evasion_constraints(ms, st_.evaders[static_cast<std::size_t>(t.evader)]), w.goal);
      safe[key] = sd;
    } catch (const Error&) {
      safe[key] = std::nullopt;
    }
  }
  for (DefeatRecord& r : f.defeat) {
    const auto it = safe.find({r.pursuers, static_cast<long>(r.evader)});
    if (it != safe.end() && it->second) r.safe = it->second->dist;
  }

  std::vector<Vec2> targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    PursuerTask& t = st_.tasks[i];
    const PursuerState& p = st_.pursuers[i];
    const double step_len = p.speed * dt_;
    if (t.evader < 0) {
      targets[i] = p.position;
      continue;
    }
    const EvaderState& e = st_.evaders[static_cast<std::size_t>(t.evader)];
    const double a = p.speed / e.speed;
    auto esp_pure = [&] { return apply_control(p.position, esp_pure_control(*graph_, p.position, e.position), step_len); };
    switch (t.mode) {
      case PursuerMode::Idle:
        targets[i] = p.position;
        break;
      case PursuerMode::Onsite:
        targets[i] = p.position + step_len * onsite_control(t.snapshot, p.position, e.position, a);
        if (opts_.overlays) f.overlay.disks.push_back(Disk{t.snapshot.center, t.snapshot.radius});
        break;
      case PursuerMode::EspPure:
        targets[i] = esp_pure();
        break;
      case PursuerMode::NonVisible:
        if (!t.stage2) {
          targets[i] = follow_path(t.cert->path.points, t.next_waypoint, p.position, step_len);
          if (opts_.overlays)
            f.overlay.sectors.insert(f.overlay.sectors.end(), t.cert->sectors.begin(), t.cert->sectors.end());
          break;
        }
        [[fallthrough]];
      case PursuerMode::GoalVisible: {
        const std::vector<std::size_t> members = t.mode == PursuerMode::GoalVisible ? t.coalition : std::vector{i};
        const auto& sd = safe[{members, t.evader}];
        bool done = false;
        if (sd && std::isfinite(sd->dist)) {
          try {
            const Gcp gcp = build_gcp(w, p.position);
            const GoalvisCommand cmd = goalvis_command(p.position, sd->x_I, gcp);
            targets[i] = apply_control(p.position, Control{cmd.u, cmd.max_travel}, step_len);
            if (opts_.overlays) f.overlay.gcps.push_back(gcp.polygon);
            done = true;
          } catch (const InvalidInput& ex) {
            event("warning", {i}, t.evader, std::string("goal-visible control unavailable: ") + ex.what());
          }
        }
        if (!done) targets[i] = esp_pure();
        break;
      }
    }
  }

  std::vector<PursuerView> views;
  for (const auto& p : st_.pursuers) views.push_back({p.position, p.speed, p.capture_radius});
  const std::vector<std::size_t> live = st_.live();
  std::vector<Vec2> evader_targets(st_.evaders.size());
  for (std::size_t j : live) {
    const EvaderState& e = st_.evaders[j];
    const Control c = brains_[j].control(*graph_, e.position, e.speed, views);
    evader_targets[j] = apply_control(e.position, c, e.speed * dt_);
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool clipped = false;
    st_.pursuers[i].position = clip_motion(w, st_.pursuers[i].position, targets[i], &clipped);
    if (clipped) event("clip", {i}, st_.tasks[i].evader, "pursuer motion clipped at a boundary");
    PursuerTask& t = st_.tasks[i];
    if (t.mode == PursuerMode::NonVisible && !t.stage2 && t.next_waypoint >= t.cert->path.points.size()) {
      t.stage2 = true;
      event("anchor_reached", {i}, t.evader, "switching to goal-visible pursuit");
    }
  }
  for (std::size_t j : live) st_.evaders[j].position = clip_motion(w, st_.evaders[j].position, evader_targets[j]);

  auto fault = [&](const std::string& who, Vec2 p) {
    std::ostringstream os;
    os.precision(17);
    os << who << " left free space at step " << st_.step << ": (" << p.x << ", " << p.y << ")";
    throw SimulationFault(os.str());
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!w.in_free_space(st_.pursuers[i].position)) fault("P" + std::to_string(i + 1), st_.pursuers[i].position);
  for (std::size_t j : live)
    if (!w.in_free_space(st_.evaders[j].position)) fault("E" + std::to_string(j + 1), st_.evaders[j].position);

  for (std::size_t j : live) {
    const Vec2 e = st_.evaders[j].position;
    for (std::size_t i = 0; i < n; ++i) {
      const PursuerState& p = st_.pursuers[i];
      if (st_.tasks[i].evader != static_cast<long>(j)) continue;
      if (dist(p.position, e) <= p.capture_radius && w.visible(p.position, e)) {
        st_.status[j] = EvaderStatus::Captured;
        event("capture", {i}, static_cast<long>(j), "captured");
        break;
      }
    }
    if (st_.status[j] == EvaderStatus::Alive && w.in_goal(e)) {
      st_.status[j] = EvaderStatus::Arrived;
      event("arrival", {}, static_cast<long>(j), "reached the goal");
      for (const DefeatEntry& d : st_.defeat)
        if (d.evader == j) {
          event("certificate_violation", d.pursuers, static_cast<long>(j), "defeated evader reached the goal");
          ++log_.summary.violations;
        }
    }
  }
  std::erase_if(st_.defeat, [&](const DefeatEntry& d) { return st_.status[d.evader] != EvaderStatus::Alive; });
  for (PursuerTask& t : st_.tasks)
    if (t.evader >= 0 && st_.status[static_cast<std::size_t>(t.evader)] != EvaderStatus::Alive) t = PursuerTask{};

  log_.frames.push_back(std::move(f));
  ++st_.step;
  st_.time = static_cast<double>(st_.step) * dt_;
}

void Engine::close_log() {
  if (closed_) return;
  closed_ = true;
  log_.frames.push_back(snapshot());
  Summary& s = log_.summary;
  s.steps = st_.step;
  s.captured = st_.captured();
  s.arrived = static_cast<int>(std::count(st_.status.begin(), st_.status.end(), EvaderStatus::Arrived));
  s.alive = static_cast<int>(st_.live().size());
  const auto lb = log_.lower_bound_series();
  s.initial_lower_bound = lb.empty() ? 0 : lb.front();
  s.final_lower_bound = st_.lower_bound();
}

const TrajectoryLog& Engine::run() {
  while (!finished()) step();
  close_log();
  return log_;
}

}  // namespace mocg
