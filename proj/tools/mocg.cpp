// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mocg/engine.hpp"
#include "mocg/errors.hpp"
#include "mocg/goalvis.hpp"
#include "mocg/scenario_io.hpp"
#include "mocg/svg.hpp"

namespace fs = std::filesystem;
using namespace mocg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFault = 2;

std::optional<Scenario> load(const std::string& path) {
  try {
    return load_scenario_file(path);
  } catch (const ScenarioError& e) {
    std::cerr << path << ':' << e.line() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

struct RunArgs {
  std::string scenario;
  std::string out_dir;
  std::optional<int> steps;
  std::optional<std::uint64_t> seed;
  std::optional<int> render_every;
  bool no_render = false;
  bool check_only = false;
};

int cmd_run(const RunArgs& a) {
  auto sc = load(a.scenario);
  if (!sc) return kExitInput;
  if (a.steps) sc->max_steps = *a.steps;
  if (a.seed) sc->seed = *a.seed;
  if (a.render_every) sc->render.every = *a.render_every;
  if (a.no_render) sc->render.every = 0;
  try {
    validate_scenario(*sc);
  } catch (const ScenarioError& e) {
    std::cerr << a.scenario << ':' << e.line() << ": " << e.what() << '\n';
    return kExitInput;
  }
  if (a.check_only) {
    std::cout << a.scenario << ": ok\n";
    return kExitOk;
  }
  if (a.out_dir.empty()) {
    std::cerr << "run: an output directory is required\n";
    return kExitInput;
  }
  const bool render = sc->render.every > 0;
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) {
    std::cerr << a.out_dir << ": " << ec.message() << '\n';
    return kExitInput;
  }
  int status = kExitOk;
  std::optional<Engine> engine;
  try {
    engine.emplace(*sc, EngineOptions{render});
    engine->run();
  } catch (const SimulationFault& e) {
    std::cerr << "simulation fault: " << e.what() << '\n';
    status = kExitFault;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    status = kExitFault;
  }
  if (!engine) return status;
  const TrajectoryLog& log = engine->log();
  {
    std::ofstream out(fs::path(a.out_dir) / "trajectory.jsonl");
    write_jsonl(out, log);
  }
  {
    std::ofstream out(fs::path(a.out_dir) / "lower_bound.txt");
    for (int v : log.lower_bound_series()) out << v << '\n';
  }
  if (render) {
    const fs::path frames = fs::path(a.out_dir) / "frames";
    fs::create_directories(frames);
    for (std::size_t k = 0; k < log.frames.size(); ++k) {
      const bool last = k + 1 == log.frames.size();
      if (k % static_cast<std::size_t>(sc->render.every) != 0 && !last) continue;
      char name[32];
      std::snprintf(name, sizeof name, "frame_%06zu.svg", k);
      std::ofstream(frames / name) << render_svg(engine->scenario(), log, k);
    }
  }
  const Summary& s = log.summary;
  std::cout << "steps " << s.steps << ", captured " << s.captured << ", arrived " << s.arrived << ", alive " << s.alive
            << ", lower bound " << s.initial_lower_bound << " -> " << s.final_lower_bound;
  if (s.violations) std::cout << ", violations " << s.violations;
  std::cout << '\n';
  return status;
}

int cmd_check(const std::string& path, const std::vector<int>& pursuer_ids, int evader_id) {
  auto sc = load(path);
  if (!sc) return kExitInput;
  std::vector<std::size_t> members;
  for (int id : pursuer_ids) {
    if (id < 1 || id > static_cast<int>(sc->pursuers.size())) {
      std::cerr << "unknown pursuer id " << id << '\n';
      return kExitInput;
    }
    members.push_back(static_cast<std::size_t>(id - 1));
  }
  if (members.empty() || members.size() > 2) {
    std::cerr << "give one or two pursuer ids\n";
    return kExitInput;
  }
  if (evader_id < 1 || evader_id > static_cast<int>(sc->evaders.size())) {
    std::cerr << "unknown evader id " << evader_id << '\n';
    return kExitInput;
  }
  const EspGraph g(sc->world());
  const auto gv = goal_visible_obstacle_vertices(g);
  const CheckContext ctx{g, gv, sc->effective_delta()};
  std::vector<PursuerState> ps;
  for (std::size_t i : members) ps.push_back({sc->pursuers[i].position, sc->pursuers[i].speed, sc->pursuers[i].capture_radius});
  const EvaderState e{sc->evaders[static_cast<std::size_t>(evader_id - 1)].position,
                      sc->evaders[static_cast<std::size_t>(evader_id - 1)].speed};
  PursuitCheck c;
  try {
    if (ps.size() == 1) {
      c = check_pursuit_winning(ctx, ps, e);
    } else if (check_goalvis_winning(ctx, ps, e, &c.safe)) {
      c.T = Certificate::GoalVisible;
    }
  } catch (const Error& ex) {
    std::cerr << "check failed: " << ex.what() << '\n';
    return kExitFault;
  }
  std::cout << "T=" << static_cast<int>(c.T) << '\n';
  std::cout.precision(10);
  switch (c.T) {
    case Certificate::Onsite:
      for (std::size_t k = 0; k < c.snapshots.size(); ++k)
        std::cout << "P" << members[k] + 1 << " disk center (" << c.snapshots[k].center.x << ", "
                  << c.snapshots[k].center.y << ") radius " << c.snapshots[k].radius << '\n';
      break;
    case Certificate::GoalVisible:
      std::cout << "safe distance " << c.safe.dist << " at (" << c.safe.x_I.x << ", " << c.safe.x_I.y << ")\n";
      break;
    case Certificate::NonVisible:
      std::cout << "anchor (" << c.nonvis->anchor.x << ", " << c.nonvis->anchor.y << ") path length "
                << c.nonvis->anchor_distance << " min J " << c.nonvis->min_J << '\n';
      break;
    case Certificate::None:
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-pursuer reach-avoid game simulator"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run = app.add_subcommand("run", "Simulate a scenario and write the trajectory log");
  run->add_option("scenario", ra.scenario, "Scenario YAML file")->required();
  run->add_option("out_dir", ra.out_dir, "Output directory");
  run->add_option("--steps", ra.steps, "Override max_steps");
  run->add_option("--seed", ra.seed, "Override the scenario seed");
  run->add_option("--render-every", ra.render_every, "Write an SVG frame every N steps");
  run->add_flag("--no-render", ra.no_render, "Disable SVG frames");
  run->add_flag("--check-only", ra.check_only, "Validate the scenario and exit");

  std::string check_path;
  std::vector<int> pursuer_ids;
  int evader_id = 0;
  auto* check = app.add_subcommand("check", "Report the winning certificate of a subgame at t=0");
  check->add_option("scenario", check_path, "Scenario YAML file")->required();
  check->add_option("--pursuers", pursuer_ids, "One or two 1-based pursuer ids")->delimiter(',')->required();
  check->add_option("--evader", evader_id, "1-based evader id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (*run) return cmd_run(ra);
  return cmd_check(check_path, pursuer_ids, evader_id);
}
