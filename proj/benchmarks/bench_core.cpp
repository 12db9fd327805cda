// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "mocg/allocation.hpp"
#include "mocg/engine.hpp"
#include "mocg/goalvis.hpp"
#include "mocg/nonvis.hpp"

using namespace mocg;

namespace {

Polygon rect(double x0, double y0, double x1, double y1) {
  return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

World walled() {
  return World{rect(0, 0, 10, 10), {rect(3.5, 6.6, 6.5, 7.6), rect(3.5, 2.4, 6.5, 3.4), rect(1, 1, 2, 2)},
               rect(4, 4, 6, 6)};
}

void BM_EspGraphBuild(benchmark::State& state) {
  const World w = walled();
  for (auto _ : state) benchmark::DoNotOptimize(EspGraph(w));
}
BENCHMARK(BM_EspGraphBuild);

void BM_EspQuery(benchmark::State& state) {
  const EspGraph g(walled());
  for (auto _ : state) benchmark::DoNotOptimize(g.distance({5, 8.5}, {5, 1.5}));
}
BENCHMARK(BM_EspQuery);

void BM_Wavefront(benchmark::State& state) {
  const EspGraph g(walled());
  for (auto _ : state) benchmark::DoNotOptimize(wavefront(g, {5, 8.5}, 3.0));
}
BENCHMARK(BM_Wavefront);

void BM_SafeDistance(benchmark::State& state) {
  const std::vector<PursuerState> ps{{{2.5, 5.5}, 1.5, 0.1}, {{7.5, 5.5}, 1.5, 0.1}};
  const auto cs = evasion_constraints(ps, {{5, 7}, 1.0});
  const Polygon goal = rect(4, 3, 6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(convex_set_distance(cs, goal));
}
BENCHMARK(BM_SafeDistance);

void BM_BuildGcp(benchmark::State& state) {
  const World w = walled();
  for (auto _ : state) benchmark::DoNotOptimize(build_gcp(w, {8.5, 5.2}));
}
BENCHMARK(BM_BuildGcp);

void BM_NonvisCheck(benchmark::State& state) {
  const EspGraph g(walled());
  const auto gv = goal_visible_obstacle_vertices(g);
  for (auto _ : state) benchmark::DoNotOptimize(check_nonvis_winning(g, gv, {5, 8.4}, {9.3, 9.3}, 3.0, 0.1));
}
BENCHMARK(BM_NonvisCheck);

void BM_SolveBip(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<WinEdge> edges;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t e = 0; e < n; ++e)
      if (u(rng) < 0.4) {
        WinEdge we;
        we.id = edges.size();
        we.pursuers = {p};
        we.evader = e;
        we.check.T = u(rng) < 0.5 ? Certificate::Onsite : Certificate::GoalVisible;
        edges.push_back(we);
      }
  for (auto _ : state) benchmark::DoNotOptimize(solve_bip(edges));
}
BENCHMARK(BM_SolveBip)->Arg(4)->Arg(8)->Arg(12);

void BM_EngineStep(benchmark::State& state) {
  Scenario sc;
  sc.name = "bench";
  const World w = walled();
  sc.arena = w.arena;
  sc.obstacles = w.obstacles;
  sc.goal = w.goal;
  sc.dt = 0.01;
  sc.max_steps = 1 << 30;
  sc.pursuers = {{{5, 8.4}, 3, 0.1}, {{5, 1.6}, 3, 0.1}, {{8.5, 5}, 2, 0.1}, {{0.8, 5}, 2, 0.1}};
  EvaderPolicySpec greedy;
  greedy.kind = EvaderPolicyKind::EspGreedy;
  sc.evaders = {{{9.3, 9.3}, 1, greedy}, {{0.7, 0.7}, 1, greedy}, {{9.3, 0.7}, 1, greedy}};
  Engine engine(sc);
  for (auto _ : state) {
    if (engine.finished()) {
      state.PauseTiming();
      engine = Engine(sc);
      state.ResumeTiming();
    }
    engine.step();
  }
}
BENCHMARK(BM_EngineStep);

}  // namespace

BENCHMARK_MAIN();
