// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mocg/allocation.hpp"
#include "mocg/scenario.hpp"
#include "mocg/trajectory.hpp"

namespace mocg {

struct DefeatEntry {
  std::vector<std::size_t> pursuers;
  std::size_t evader = 0;
  PursuitCheck check;
};

struct PursuerTask {
  PursuerMode mode = PursuerMode::Idle;
  Stage stage = Stage::None;
  long evader = -1;
  OnsiteSnapshot snapshot;                        // onsite
  std::vector<std::size_t> coalition;             // goal-visible
  std::shared_ptr<const NonvisCertificate> cert;  // non-visible
  std::size_t next_waypoint = 1;
  bool stage2 = false;

  bool same_assignment(const PursuerTask& o) const { return mode == o.mode && evader == o.evader; }
};

struct GameState {
  long step = 0;
  double time = 0.0;
  std::vector<PursuerState> pursuers;
  std::vector<EvaderState> evaders;
  std::vector<EvaderStatus> status;
  std::vector<DefeatEntry> defeat;
  std::vector<PursuerTask> tasks;

  std::vector<std::size_t> live() const;
  int captured() const;
  int lower_bound() const { return captured() + static_cast<int>(defeat.size()); }
};

struct EngineOptions {
  bool overlays = false;  // record disks, polygons and sectors for rendering
};

class Engine {
 public:
  explicit Engine(Scenario scenario, EngineOptions opts = {});

  const Scenario& scenario() const { return sc_; }
  const EspGraph& graph() const { return *graph_; }
  const GameState& state() const { return st_; }
  const TrajectoryLog& log() const { return log_; }
  bool finished() const;

  // One allocation-and-motion iteration. Throws SimulationFault on an invariant breach.
  void step();
  // Steps until no evader is alive or max_steps is reached, then closes the log.
  const TrajectoryLog& run();

 private:
  void allocate(Frame& f);
  void assign_defeat_tasks(std::vector<PursuerTask>& next) const;
  void event(std::string kind, std::vector<std::size_t> pursuers, long evader, std::string msg);
  Frame snapshot() const;
  void close_log();

  Scenario sc_;
  EngineOptions opts_;
  std::unique_ptr<EspGraph> graph_;
  std::vector<std::size_t> gv_vertices_;
  std::vector<EvaderBrain> brains_;
  GameState st_;
  TrajectoryLog log_;
  double dt_ = 0.0;
  double delta_ = 0.0;
  std::optional<int> last_lb_;
  bool closed_ = false;
};

}  // namespace mocg
