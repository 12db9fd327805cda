// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "mocg/trajectory.hpp"

namespace mocg {

using nlohmann::json;

const char* status_name(EvaderStatus s) {
  switch (s) {
    case EvaderStatus::Alive: return "alive";
    case EvaderStatus::Captured: return "captured";
    case EvaderStatus::Arrived: return "arrived";
  }
  return "?";
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::None: return "none";
    case Stage::Defeat: return "defeat";
    case Stage::Enhanced: return "enhanced";
    case Stage::NonDominated: return "non-dominated";
    case Stage::Closest: return "closest";
  }
  return "?";
}

const char* mode_name(PursuerMode m) {
  switch (m) {
    case PursuerMode::Idle: return "idle";
    case PursuerMode::Onsite: return "onsite";
    case PursuerMode::GoalVisible: return "goal-visible";
    case PursuerMode::NonVisible: return "non-visible";
    case PursuerMode::EspPure: return "esp-pure";
  }
  return "?";
}

std::vector<int> TrajectoryLog::lower_bound_series() const {
  std::vector<int> out;
  for (const Frame& f : frames)
    if (f.lower_bound) out.push_back(*f.lower_bound);
  return out;
}

namespace {

json point(Vec2 p) { return json::array({p.x, p.y}); }

json points(const std::vector<Vec2>& ps) {
  json a = json::array();
  for (Vec2 p : ps) a.push_back(point(p));
  return a;
}

json ids(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (std::size_t i : v) a.push_back(i + 1);
  return a;
}

json frame_json(const Frame& f) {
  json j{{"type", "frame"}, {"step", f.step}, {"time", f.time}};
  j["pursuers"] = points(f.pursuers);
  j["evaders"] = points(f.evaders);
  json st = json::array();
  for (EvaderStatus s : f.status) st.push_back(status_name(s));
  j["status"] = st;
  if (!f.assignments.empty()) {
    json as = json::array();
    for (const AssignmentRecord& a : f.assignments) {
      json r{{"stage", stage_name(a.stage)}, {"mode", mode_name(a.mode)}};
      r["evader"] = a.evader >= 0 ? json(a.evader + 1) : json(nullptr);
      if (a.T) r["T"] = a.T;
      as.push_back(r);
    }
    j["assignments"] = as;
    json ds = json::array();
    for (const DefeatRecord& d : f.defeat) {
      json r{{"pursuers", ids(d.pursuers)}, {"evader", d.evader + 1}, {"T", d.T}};
      if (d.safe) r["safe_distance"] = std::isfinite(*d.safe) ? json(*d.safe) : json(*d.safe < 0 ? "-inf" : "inf");
      ds.push_back(r);
    }
    j["defeat"] = ds;
  }
  if (f.lower_bound) j["lower_bound"] = *f.lower_bound;
  if (!f.bip_optimal) j["assignment_optimal"] = false;
  return j;
}

json event_json(const Event& e) {
  json j{{"type", "event"}, {"step", e.step}, {"kind", e.kind}, {"message", e.message}};
  if (!e.pursuers.empty()) j["pursuers"] = ids(e.pursuers);
  if (e.evader >= 0) j["evader"] = e.evader + 1;
  return j;
}

}  // namespace

void write_jsonl(std::ostream& os, const TrajectoryLog& log) {
  os << json{{"type", "header"}, {"scenario", log.scenario}, {"seed", log.seed}, {"dt", log.dt}, {"delta", log.delta}}
            .dump()
     << '\n';
  std::size_t ev = 0;
  for (const Frame& f : log.frames) {
    os << frame_json(f).dump() << '\n';
    for (; ev < log.events.size() && log.events[ev].step <= f.step; ++ev) os << event_json(log.events[ev]).dump() << '\n';
  }
  for (; ev < log.events.size(); ++ev) os << event_json(log.events[ev]).dump() << '\n';
  const Summary& s = log.summary;
  json lb = log.lower_bound_series();
  os << json{{"type", "summary"},
             {"steps", s.steps},
             {"captured", s.captured},
             {"arrived", s.arrived},
             {"alive", s.alive},
             {"initial_lower_bound", s.initial_lower_bound},
             {"final_lower_bound", s.final_lower_bound},
             {"violations", s.violations},
             {"lower_bound_series", lb}}
            .dump()
     << '\n';
}

}  // namespace mocg
