// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mocg/geometry.hpp"

namespace mocg {

enum class EvaderStatus { Alive, Captured, Arrived };
const char* status_name(EvaderStatus s);

// Which matching stage produced a pursuer's assignment.
enum class Stage { None, Defeat, Enhanced, NonDominated, Closest };
const char* stage_name(Stage s);

enum class PursuerMode { Idle, Onsite, GoalVisible, NonVisible, EspPure };
const char* mode_name(PursuerMode m);

struct AssignmentRecord {
  long evader = -1;
  Stage stage = Stage::None;
  PursuerMode mode = PursuerMode::Idle;
  int T = 0;  // certificate type of the defeat entry, 0 otherwise
};

struct DefeatRecord {
  std::vector<std::size_t> pursuers;
  std::size_t evader = 0;
  int T = 0;
  std::optional<double> safe;  // safe distance this step for goal-visible entries
};

struct Overlay {
  std::vector<Disk> disks;      // onsite snapshots
  std::vector<Polygon> gcps;    // goal-covering polygons
  std::vector<Sector> sectors;  // non-visible certificate reach sectors
};

struct Frame {
  long step = 0;
  double time = 0.0;
  std::vector<Vec2> pursuers;
  std::vector<Vec2> evaders;
  std::vector<EvaderStatus> status;
  std::vector<AssignmentRecord> assignments;  // empty in the final frame
  std::vector<DefeatRecord> defeat;
  std::optional<int> lower_bound;  // captured + |defeat| for allocation iterations
  bool bip_optimal = true;
  Overlay overlay;
};

struct Event {
  long step = 0;
  std::string kind;  // capture, arrival, defeat_update, clip, warning, certificate_violation
  std::vector<std::size_t> pursuers;
  long evader = -1;
  std::string message;
};

struct Summary {
  long steps = 0;
  int captured = 0;
  int arrived = 0;
  int alive = 0;
  int initial_lower_bound = 0;
  int final_lower_bound = 0;
  int violations = 0;
};

struct TrajectoryLog {
  std::string scenario;
  std::uint64_t seed = 0;
  double dt = 0.0;
  double delta = 0.0;
  std::vector<Frame> frames;
  std::vector<Event> events;
  Summary summary;

  std::vector<int> lower_bound_series() const;
};

void write_jsonl(std::ostream& os, const TrajectoryLog& log);

}  // namespace mocg
