// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mocg/engine.hpp"
#include "mocg/errors.hpp"
#include "mocg/goalvis.hpp"
#include "mocg/scenario_io.hpp"
#include "mocg/subgame.hpp"
#include "oracles.hpp"

using namespace mocg;
using namespace mocg::testing;
namespace fs = std::filesystem;

namespace {

// Tolerances.
constexpr double kContainTol = 1e-6;
constexpr double kSafeTol = 1e-6;
constexpr double kAnchoredTol = 1e-3;
constexpr double kGridRel = 0.015;
constexpr double kWaveTol = 1e-6;
constexpr double kSetDistTol = 1e-4;

constexpr double kDt = 0.01;
constexpr double kRadius = 0.1;

struct Result {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Polygon rect(double x0, double y0, double x1, double y1) {
  return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// Scattered obstacles around a central goal.
World scattered_world() {
  return World{rect(0, 0, 10, 10), {rect(2, 2, 3, 3), rect(4, 6.5, 6, 7.5), rect(7, 1.5, 8.5, 2.5)}, rect(4, 4, 6, 6)};
}

// Walls above and below the goal: points behind them do not see the goal.
World walled_world() {
  return World{rect(0, 0, 10, 10), {rect(3.5, 6.6, 6.5, 7.6), rect(3.5, 2.4, 6.5, 3.4)}, rect(4, 4, 6, 6)};
}

Vec2 sample_free(const World& w, std::mt19937_64& rng) {
  const Box b = bounding_box(w.arena);
  std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x), uy(b.lo.y, b.hi.y);
  for (;;) {
    const Vec2 p{ux(rng), uy(rng)};
    if (w.in_free_space(p) && !w.in_goal(p) && distance_to_boundary(p, w.arena) > 0.05) return p;
  }
}

EvaderPolicySpec policy_of(int k, std::mt19937_64& rng) {
  EvaderPolicySpec spec;
  switch (k % 3) {
    case 0:
      spec.kind = EvaderPolicyKind::RandomWalk;
      spec.resample_every = 7;
      break;
    case 1:
      spec.kind = EvaderPolicyKind::EspGreedy;
      break;
    default: {
      spec.kind = EvaderPolicyKind::Scripted;
      std::uniform_real_distribution<double> ang(0.0, kTwoPi);
      double h = ang(rng);
      for (int i = 0; i < 4000; ++i) {
        if (i % 25 == 0) h = ang(rng);
        spec.script.push_back(h);
      }
    }
  }
  return spec;
}

// Criterion 1: onsite coalitions capture inside their initial expanded disks.
Result onsite_suite() {
  Result res;
  const World w = scattered_world();
  const EspGraph g(w);
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> ang(0, kTwoPi), rho(0.4, 1.2), spd(1.5, 3.0);
  std::uniform_int_distribution<int> size(1, 3);
  int fixtures = 0, runs = 0, captured = 0;
  double worst_slack = kPosInf;
  while (fixtures < 50) {
    SubgameSetup s;
    s.world = w;
    s.dt = kDt;
    s.delta = 0.05;
    s.max_steps = 6000;
    s.strategy = SubgameStrategy::Onsite;
    s.evader = {sample_free(w, rng), 1.0};
    const int k = size(rng);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const Vec2 p = s.evader.position + rho(rng) * unit_from_angle(ang(rng));
      const PursuerState ps{p, spd(rng), kRadius};
      ok = w.in_free_space(p) && check_onsite(w, p, s.evader.position, ps.speed, s.delta);
      s.pursuers.push_back(ps);
    }
    if (!ok) continue;
    ++fixtures;
    std::vector<OnsiteRegion> regions;
    for (const auto& p : s.pursuers) regions.push_back(onsite_region(p.position, s.evader.position, p.speed, s.delta));
    for (int pol = 0; pol < 3; ++pol) {
      s.policy = policy_of(pol, rng);
      s.seed = rng();
      const SubgameResult r = run_subgame(s);
      ++runs;
      captured += r.captured;
      if (!r.captured) res.fail(fmt("fixture %g policy %g: no capture", fixtures, pol));
      if (r.arrived) res.fail(fmt("fixture %g policy %g: evader reached the goal", fixtures, pol));
      for (const SubgameFrame& f : r.frames) {
        for (std::size_t i = 0; i < s.pursuers.size(); ++i) {
          const double a = s.pursuers[i].speed;
          if (dist(f.pursuers[i], f.evader) > 1e-9) {
            const double slack = onsite_containment_slack(r.snapshots[i], f.pursuers[i], f.evader, a);
            worst_slack = std::min(worst_slack, slack);
            if (slack < -kContainTol) res.fail(fmt("fixture %g: disk left its initial expansion by %g", fixtures, -slack));
          }
          if (!point_in_onsite_region(f.pursuers[i], regions[i], kContainTol))
            res.fail(fmt("fixture %g: pursuer %g left its onsite region", fixtures, static_cast<double>(i)));
        }
      }
      if (r.captured) {
        const Vec2 x = r.frames.back().evader;
        for (const OnsiteSnapshot& snap : r.snapshots)
          if (dist(x, snap.center) > snap.radius + kContainTol)
            res.fail(fmt("fixture %g: capture outside the disk intersection", fixtures));
      }
    }
  }
  res.detail = fmt("%g/%g captures, worst containment slack %.3g", captured, runs, worst_slack);
  return res;
}

struct GoalvisStats {
  double min_safe = kPosInf;
  long frames = 0;
};

// Shared goal-visible checks over a run: no breach, safe distance, visibility.
void check_goalvis_frames(const World& w, const SubgameResult& r, std::size_t from, const std::string& tag, Result& res,
                          GoalvisStats& st) {
  if (r.arrived) res.fail(tag + ": evader reached the goal");
  for (std::size_t k = from; k + 1 < r.frames.size(); ++k) {
    const SubgameFrame& f = r.frames[k];
    ++st.frames;
    if (!std::isinf(f.safe) || f.safe < 0) {
      st.min_safe = std::min(st.min_safe, f.safe);
      if (f.safe < -kSafeTol) res.fail(tag + fmt(": safe distance %g at step %g", f.safe, static_cast<double>(k)));
    }
    for (const Vec2& p : f.pursuers)
      if (!is_goal_visible(w, p)) res.fail(tag + fmt(": pursuer lost goal visibility at step %g", static_cast<double>(k)));
  }
}

// Criterion 2: goal-visible pursuit keeps the evader out and stays goal-visible.
Result goalvis_suite() {
  Result res;
  const World w = scattered_world();
  const EspGraph g(w);
  const auto gv = goal_visible_obstacle_vertices(g);
  const CheckContext ctx{g, gv, 0.05};
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> spd(1.5, 2.5);
  std::uniform_int_distribution<int> size(1, 2);
  int fixtures = 0, pairs = 0;
  long monotone_breaks = 0, straight_steps = 0;
  GoalvisStats st;
  while (fixtures < 50) {
    SubgameSetup s;
    s.world = w;
    s.dt = kDt;
    s.max_steps = 1200;
    s.strategy = SubgameStrategy::GoalVisible;
    s.evader = {sample_free(w, rng), 1.0};
    const int k = size(rng);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const Vec2 p = sample_free(w, rng);
      ok = is_goal_visible(w, p) && dist(p, s.evader.position) > 2 * kRadius;
      s.pursuers.push_back({p, spd(rng), kRadius});
    }
    if (!ok) continue;
    try {
      if (!check_goalvis_winning(ctx, s.pursuers, s.evader)) continue;
    } catch (const Error&) {
      continue;
    }
    ++fixtures;
    pairs += k == 2;
    const std::string tag = "fixture " + std::to_string(fixtures);
    s.policy = policy_of(fixtures % 2, rng);
    s.seed = rng();
    check_goalvis_frames(w, run_subgame(s), 0, tag, res, st);

    s.policy = EvaderPolicySpec{};
    s.policy.kind = EvaderPolicyKind::Stationary;
    s.max_steps = 300;
    const SubgameResult still = run_subgame(s);
    check_goalvis_frames(w, still, 0, tag + " stationary", res, st);
    for (std::size_t j = 1; j + 1 < still.frames.size(); ++j) {
      const SubgameFrame& prev = still.frames[j - 1];
      const double a = prev.safe, b = still.frames[j].safe;
      if (!std::isfinite(a) || !std::isfinite(b)) continue;
      // Only steps where every member heads straight at the witness point.
      bool straight = true;
      for (const Vec2& p : prev.pursuers) {
        if (dist(p, prev.x_I) < 1e-9) continue;
        try {
          straight &= build_gcp(w, p).range.contains(bearing(p, prev.x_I), 1e-12);
        } catch (const Error&) {
          straight = false;
        }
      }
      if (!straight) continue;
      ++straight_steps;
      if (b < a - 1e-9) {
        ++monotone_breaks;
        res.fail(tag + fmt(": safe distance fell from %g to %g against a stationary evader", a, b));
      }
    }
  }
  res.detail = fmt("%g fixtures (%g pairs), %g frames, min safe distance %.3g", fixtures, pairs,
                   static_cast<double>(st.frames), st.min_safe);
  res.detail += fmt(", %g stationary steps checked for non-decrease", static_cast<double>(straight_steps));
  if (monotone_breaks) res.detail += fmt(", %g decreases", static_cast<double>(monotone_breaks));
  return res;
}

// Criterion 3: hidden pursuers reach their anchor on the shortest path and then hold.
Result nonvis_suite() {
  Result res;
  const World w = walled_world();
  const EspGraph g(w);
  const auto gv = goal_visible_obstacle_vertices(g);
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> spd(2.0, 3.5);
  int fixtures = 0, attempts = 0;
  double worst_len = 0.0, worst_anchored = kPosInf;
  GoalvisStats st;
  while (fixtures < 20 && attempts < 20000) {
    ++attempts;
    const Vec2 P = sample_free(w, rng);
    if (is_goal_visible(w, P)) continue;
    const Vec2 E = sample_free(w, rng);
    const double v = spd(rng);
    const auto cert = check_nonvis_winning(g, gv, P, E, v, kRadius);
    if (!cert) continue;
    ++fixtures;
    const std::string tag = "fixture " + std::to_string(fixtures);

    SubgameSetup s;
    s.world = w;
    s.dt = kDt;
    s.max_steps = 2500;
    s.strategy = SubgameStrategy::NonVisible;
    s.pursuers = {{P, v, kRadius}};
    s.evader = {E, 1.0};
    s.policy = policy_of(fixtures % 2, rng);
    s.seed = rng();
    const SubgameResult r = run_subgame(s);
    if (r.stage1_steps < 0) {
      if (!r.captured) res.fail(tag + ": anchor never reached");
    } else {
      const double err = std::abs(r.stage1_length - cert->anchor_distance);
      worst_len = std::max(worst_len, err);
      if (err > v * kDt + 1e-9) res.fail(tag + fmt(": stage-1 length off by %g", err));
      check_goalvis_frames(w, r, static_cast<std::size_t>(r.stage1_steps), tag, res, st);
    }
    if (r.arrived) res.fail(tag + ": evader reached the goal");

    // Anchored safe distance estimate: the evader anywhere in its budget, the pursuer at the anchor.
    const auto pts = sample_reach_region(g, E, cert->evader_budget, 2000, rng);
    for (const Vec2& z : pts) {
      try {
        const SetDistance d = convex_set_distance(evasion_constraints({{cert->anchor, v, kRadius}}, {z, 1.0}), w.goal);
        worst_anchored = std::min(worst_anchored, d.dist);
        if (d.dist < -kAnchoredTol) res.fail(tag + fmt(": anchored safe distance %g", d.dist));
      } catch (const InvalidInput&) {
        // z within capture range of the anchor
      }
    }
  }
  if (fixtures < 20) res.fail(fmt("only %g certified fixtures found", fixtures));
  res.detail = fmt("%g fixtures, worst stage-1 length error %.3g, min anchored estimate %.3g, min safe %.3g", fixtures,
                   worst_len, worst_anchored, st.min_safe);
  return res;
}

// Criterion 4: evasion certificate means the greedy evader wins against pure pursuit.
Result evasion_suite() {
  Result res;
  const World w = scattered_world();
  const EspGraph g(w);
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> spd(1.2, 2.5);
  int fixtures = 0, wins = 0;
  while (fixtures < 20) {
    const Vec2 P = sample_free(w, rng), E = sample_free(w, rng);
    const double v = spd(rng);
    if (!check_evasion_winning(g, P, E, v, kRadius)) continue;
    ++fixtures;
    SubgameSetup s;
    s.world = w;
    s.dt = kDt;
    s.max_steps = 5000;
    s.strategy = SubgameStrategy::EspPure;
    s.pursuers = {{P, v, kRadius}};
    s.evader = {E, 1.0};
    s.policy.kind = EvaderPolicyKind::EspGreedy;
    const SubgameResult r = run_subgame(s);
    if (r.arrived && !r.captured) {
      ++wins;
    } else {
      res.fail(fmt("fixture %g: evader did not reach the goal uncaptured", fixtures));
    }
  }
  res.detail = fmt("%g/%g evader wins", wins, fixtures);
  return res;
}

// Criterion 5: branch-and-bound assignment equals exhaustive enumeration.
Result allocation_suite() {
  Result res;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> n(1, 4), t(1, 3);
  std::uniform_real_distribution<double> u(0, 1);
  int instances = 0, nonempty = 0;
  for (; instances < 200; ++instances) {
    const std::size_t np = static_cast<std::size_t>(n(rng)), ne = static_cast<std::size_t>(n(rng));
    std::vector<WinEdge> edges;
    std::vector<std::vector<char>> single(np, std::vector<char>(ne, 0));
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t e = 0; e < ne; ++e) {
        if (u(rng) >= 0.45) continue;
        WinEdge we;
        we.id = edges.size();
        we.pursuers = {p};
        we.evader = e;
        we.check.T = static_cast<Certificate>(t(rng));
        edges.push_back(we);
        single[p][e] = 1;
      }
    }
    for (std::size_t e = 0; e < ne; ++e)
      for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = a + 1; b < np; ++b) {
          if (single[a][e] || single[b][e] || u(rng) >= 0.5) continue;
          WinEdge we;
          we.id = edges.size();
          we.pursuers = {a, b};
          we.evader = e;
          we.check.T = Certificate::GoalVisible;
          edges.push_back(we);
        }
    nonempty += !edges.empty();
    const BipKey want = exhaustive_bip(edges);
    const BipSolution got = solve_bip(edges);
    std::set<std::size_t> used_p, used_e;
    std::size_t onsite = 0;
    bool feasible = true;
    for (std::size_t i : got.chosen) {
      feasible &= used_e.insert(edges[i].evader).second;
      for (std::size_t p : edges[i].pursuers) feasible &= used_p.insert(p).second;
      onsite += edges[i].check.T == Certificate::Onsite;
    }
    if (!feasible) res.fail(fmt("instance %g: infeasible selection", instances));
    if (!got.optimal) res.fail(fmt("instance %g: search stopped early", instances));
    if (got.chosen.size() != want.count || onsite != want.onsite || got.onsite_count != want.onsite)
      res.fail(fmt("instance %g: objective %g vs exhaustive %g", instances, static_cast<double>(got.chosen.size()),
                   static_cast<double>(want.count)));
  }
  res.detail = fmt("%g instances (%g with edges) match exhaustive enumeration", instances, nonempty);
  return res;
}

// Criterion 6: the guaranteed count never drops and certified evaders stay out.
Result lower_bound_suite() {
  Result res;
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> np(2, 4), ne(1, 3), pol(0, 2);
  std::uniform_real_distribution<double> spd(1.5, 2.5);
  int runs = 0, monotone = 0, grew = 0;
  for (; runs < 100; ++runs) {
    const World w = runs % 2 ? walled_world() : scattered_world();
    Scenario sc;
    sc.name = "random-" + std::to_string(runs);
    sc.arena = w.arena;
    sc.obstacles = w.obstacles;
    sc.goal = w.goal;
    sc.dt = kDt;
    sc.delta = 0.05;
    sc.max_steps = 300;
    sc.seed = rng();
    const int kp = np(rng), ke = ne(rng);
    for (int i = 0; i < kp; ++i) sc.pursuers.push_back({sample_free(w, rng), spd(rng), kRadius});
    for (int j = 0; j < ke; ++j) {
      Vec2 e;
      do {
        e = sample_free(w, rng);
      } while (std::any_of(sc.pursuers.begin(), sc.pursuers.end(),
                           [&](const PursuerSpec& p) { return dist(p.position, e) <= 2 * kRadius; }));
      sc.evaders.push_back({e, 1.0, policy_of(pol(rng), rng)});
    }
    const std::string tag = "run " + std::to_string(runs);
    try {
      Engine engine(sc);
      const TrajectoryLog& log = engine.run();
      const auto lb = log.lower_bound_series();
      const bool mono = std::is_sorted(lb.begin(), lb.end());
      monotone += mono;
      if (!mono) res.fail(tag + ": lower bound decreased");
      if (!lb.empty() && lb.back() > lb.front()) ++grew;
      if (log.summary.violations) res.fail(tag + ": violations logged");
      std::set<std::size_t> certified;
      for (const Frame& f : log.frames)
        for (const DefeatRecord& d : f.defeat) certified.insert(d.evader);
      const Frame& last = log.frames.back();
      for (std::size_t j : certified)
        if (last.status[j] == EvaderStatus::Arrived) res.fail(tag + ": certified evader reached the goal");
      for (const Event& e : log.events)
        if (e.kind == "certificate_violation") res.fail(tag + ": " + e.message);
    } catch (const Error& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  res.detail = fmt("%g/%g runs non-decreasing, %g with growth", monotone, runs, grew);
  return res;
}

// Criterion 7: geometry against brute-force oracles.
Result oracle_suite() {
  Result res;
  std::mt19937_64 rng(707);
  double worst_grid = 0.0, worst_wave = 0.0, worst_set = kPosInf;
  int esp_cases = 0, wave_points = 0, set_cases = 0;
  for (int k = 0; k < 20; ++k) {
    const World w = k % 2 ? walled_world() : scattered_world();
    const EspGraph g(w);
    Vec2 a, b;
    do {
      a = sample_free(w, rng);
      b = sample_free(w, rng);
    } while (w.visible(a, b));  // bent paths only
    const double exact = g.distance(a, b), grid = grid_esp_length(w, a, b, 400, 4);
    const double rel = std::abs(exact - grid) / grid;
    worst_grid = std::max(worst_grid, rel);
    ++esp_cases;
    if (rel > kGridRel) res.fail(fmt("esp case %g: relative gap %g", k, rel));
  }
  std::uniform_real_distribution<double> u(0, 1), ell(0.5, 4.0);
  for (int k = 0; k < 10; ++k) {
    const World w = k % 2 ? walled_world() : scattered_world();
    const EspGraph g(w);
    const Vec2 src = sample_free(w, rng);
    const double L = ell(rng);
    for (const Wavelet& wl : wavefront(g, src, L)) {
      for (int i = 0; i < 40; ++i) {
        const Vec2 p = wl.center + wl.radius * unit_from_angle(wl.arc.start + u(rng) * wl.arc.span);
        if (!w.in_free_space(p)) continue;
        const double err = std::abs(g.distance(src, p) - L);
        worst_wave = std::max(worst_wave, err);
        ++wave_points;
        if (err > kWaveTol) res.fail(fmt("wavefront source %g: point off by %g", k, err));
      }
    }
  }
  const Polygon goal = rect(4, 4, 6, 6);
  std::uniform_real_distribution<double> coord(0, 10), spd(1.3, 3.0);
  std::uniform_int_distribution<int> size(1, 3);
  while (set_cases < 10) {
    const EvaderState e{{coord(rng), coord(rng)}, 1.0};
    if (point_in_closed(e.position, goal)) continue;
    std::vector<PursuerState> ps;
    for (int i = size(rng); i > 0; --i) ps.push_back({{coord(rng), coord(rng)}, spd(rng), kRadius});
    std::vector<FConstraint> cs;
    try {
      cs = evasion_constraints(ps, e);
      EvasionRegion region(cs);
      const SetDistance d = convex_set_distance(cs, goal);
      if (!(d.dist > 0.0) || !std::isfinite(d.dist)) continue;
      ++set_cases;
      std::vector<Vec2> xs, gs;
      for (int i = 0; i < 500; ++i) {
        const double phi = u(rng) * kTwoPi;
        xs.push_back(region.evader() + std::sqrt(u(rng)) * region.radial(phi) * unit_from_angle(phi));
        gs.push_back(sample_in_polygon(goal, rng));
      }
      double best = kPosInf;
      for (const Vec2& x : xs)
        for (const Vec2& y : gs) best = std::min(best, dist(x, y));
      worst_set = std::min(worst_set, best - d.dist);
      if (best < d.dist - kSetDistTol) res.fail(fmt("set distance case %g: sampled pair beats witness by %g", set_cases, d.dist - best));
      if (!region.contains(d.x_I, 1e-6) || !point_in_closed(d.x_G, goal, 1e-9) ||
          std::abs(dist(d.x_I, d.x_G) - d.dist) > 1e-9)
        res.fail(fmt("set distance case %g: witnesses inconsistent", set_cases));
    } catch (const InvalidInput&) {
      continue;
    }
  }
  res.detail = fmt("esp %g cases worst gap %.3g%%, wavefront %g points worst %.2g", esp_cases, 100 * worst_grid,
                   wave_points, worst_wave);
  res.detail += fmt(", set distance %g cases margin %.3g", set_cases, worst_set);
  return res;
}

std::vector<OnsiteSnapshot> initial_disks(const Scenario& sc) {
  std::vector<OnsiteSnapshot> out;
  for (std::size_t i = 0; i < sc.pursuers.size(); ++i)
    out.push_back(onsite_snapshot(sc.pursuers[i].position, sc.evaders[0].position, sc.alpha(i, 0), sc.effective_delta()));
  return out;
}

// Criterion 8: bundled cases reproduce their qualitative outcomes.
Result case_suite(const fs::path& dir) {
  Result res;
  std::vector<std::string> notes;
  auto load = [&](const char* name) { return load_scenario_file((dir / name).string()); };
  try {
    // Case 1: onsite coalition captures inside the intersection of its initial disks.
    {
      const Scenario sc = load("case1.yaml");
      const World w = sc.world();
      for (std::size_t i = 0; i < sc.pursuers.size(); ++i)
        if (!check_onsite(w, sc.pursuers[i].position, sc.evaders[0].position, sc.alpha(i, 0), sc.effective_delta()))
          res.fail("case1: pursuer " + std::to_string(i + 1) + " not onsite at t=0");
      Engine eng(sc);
      const TrajectoryLog& log = eng.run();
      if (log.summary.captured != 1) res.fail("case1: no capture");
      const Vec2 x = log.frames.back().evaders[0];
      for (const OnsiteSnapshot& d : initial_disks(sc))
        if (dist(x, d.center) > d.radius + kContainTol) res.fail("case1: capture outside the disk intersection");
      notes.push_back("case1 capture at step " + std::to_string(log.summary.steps));
    }
    // Case 2: goal-visible pair; the goal is never breached.
    {
      const Scenario sc = load("case2.yaml");
      Engine eng(sc);
      const TrajectoryLog& log = eng.run();
      if (log.summary.captured != static_cast<int>(sc.evaders.size())) res.fail("case2: evader not captured");
      for (const Frame& f : log.frames)
        for (std::size_t j = 0; j < f.evaders.size(); ++j)
          if (f.status[j] == EvaderStatus::Alive && sc.world().in_goal(f.evaders[j])) res.fail("case2: goal breached");
      notes.push_back("case2 capture at step " + std::to_string(log.summary.steps));
    }
    // Case 3: both pursuers pass their anchors, then every evader is captured.
    {
      const Scenario sc = load("case3.yaml");
      Engine eng(sc);
      const TrajectoryLog& log = eng.run();
      std::set<std::size_t> anchored;
      for (const Event& e : log.events)
        if (e.kind == "anchor_reached")
          for (std::size_t p : e.pursuers) anchored.insert(p);
      if (anchored.size() != sc.pursuers.size()) res.fail("case3: not every pursuer reached an anchor");
      if (log.summary.captured != static_cast<int>(sc.evaders.size()) || log.summary.arrived != 0)
        res.fail("case3: pursuers did not win");
      notes.push_back("case3 " + std::to_string(anchored.size()) + " anchors, captures by step " +
                      std::to_string(log.summary.steps));
    }
    // Case 4: initial guarantee of four, honoured to the end.
    {
      const Scenario sc = load("case4.yaml");
      Engine eng(sc);
      const TrajectoryLog& log = eng.run();
      const Summary& s = log.summary;
      if (s.initial_lower_bound < 4) res.fail("case4: initial lower bound " + std::to_string(s.initial_lower_bound));
      if (s.final_lower_bound < s.initial_lower_bound) res.fail("case4: final defeated count below initial bound");
      if (s.violations) res.fail("case4: violations logged");
      notes.push_back("case4 lower bound " + std::to_string(s.initial_lower_bound) + " -> " +
                      std::to_string(s.final_lower_bound));
    }
  } catch (const std::exception& e) {
    res.fail(e.what());
  }
  for (std::size_t i = 0; i < notes.size(); ++i) res.detail += (i ? ", " : "") + notes[i];
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mocg acceptance suite"};
  std::string scenarios = "scenarios";
  std::vector<int> only;
  app.add_option("--scenarios", scenarios, "directory holding case1..case4.yaml");
  app.add_option("--only", only, "run the listed criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"onsite capture", onsite_suite},
      {"goal-visible defence", goalvis_suite},
      {"hidden pursuer via anchor", nonvis_suite},
      {"evasion certificate", evasion_suite},
      {"assignment optimality", allocation_suite},
      {"lower bound monotone", lower_bound_suite},
      {"geometry oracles", oracle_suite},
      {"case reproduction", [&] { return case_suite(scenarios); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all &= r.pass;
    std::printf("criterion %d %s: %s (%s; %.1fs)\n", id, criteria[i].first, r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                secs);
    if (!r.pass) std::printf("  first problem: %s\n", r.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
