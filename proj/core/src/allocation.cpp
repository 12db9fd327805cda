// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/allocation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

#include "mocg/errors.hpp"
#include "mocg/evaders.hpp"
#include "mocg/goalvis.hpp"

namespace mocg {

std::vector<FConstraint> evasion_constraints(const std::vector<PursuerState>& members, const EvaderState& e) {
  std::vector<FConstraint> cs;
  cs.reserve(members.size());
  for (const auto& p : members) cs.push_back(FConstraint{p.position, e.position, p.speed / e.speed, p.capture_radius});
  return cs;
}

bool check_goalvis_winning(const CheckContext& ctx, const std::vector<PursuerState>& members, const EvaderState& e,
                           SetDistance* safe) {
  for (const auto& p : members)
    if (!is_goal_visible(ctx.world(), p.position)) return false;
  for (const auto& p : members)
    if (dist(p.position, e.position) <= p.capture_radius) return false;
  const SetDistance d = convex_set_distance(evasion_constraints(members, e), ctx.world().goal);
  if (safe) *safe = d;
  return d.dist >= 0.0;
}

PursuitCheck check_pursuit_winning(const CheckContext& ctx, const std::vector<PursuerState>& members,
                                   const EvaderState& e) {
  PursuitCheck out;
  if (members.empty()) throw InvalidInput("empty coalition");
  bool onsite = true;
  for (const auto& p : members) {
    if (p.position == e.position || !check_onsite(ctx.world(), p.position, e.position, p.speed / e.speed, ctx.delta)) {
      onsite = false;
      break;
    }
  }
  if (onsite) {
    out.T = Certificate::Onsite;
    for (const auto& p : members)
      out.snapshots.push_back(onsite_snapshot(p.position, e.position, p.speed / e.speed, ctx.delta));
    return out;
  }
  if (check_goalvis_winning(ctx, members, e, &out.safe)) {
    out.T = Certificate::GoalVisible;
    return out;
  }
  if (members.size() == 1 && !is_goal_visible(ctx.world(), members[0].position)) {
    const auto& p = members[0];
    out.nonvis = check_nonvis_winning(ctx.graph, ctx.goal_visible_vertices, p.position, e.position, p.speed / e.speed,
                                      p.capture_radius);
    if (out.nonvis) out.T = Certificate::NonVisible;
  }
  return out;
}

WinningGraph build_winning_graph(const CheckContext& ctx, const std::vector<PursuerState>& pursuers,
                                 const std::vector<EvaderState>& evaders, const std::vector<std::size_t>& live) {
  WinningGraph g;
  const std::size_t n = pursuers.size();
  std::vector<std::vector<bool>> single(n, std::vector<bool>(evaders.size(), false));
  auto try_edge = [&](std::vector<std::size_t> members, std::size_t j, bool pair) {
    std::vector<PursuerState> ms;
    for (std::size_t i : members) ms.push_back(pursuers[i]);
    PursuitCheck c;
    try {
      if (pair) {
        if (check_goalvis_winning(ctx, ms, evaders[j], &c.safe)) c.T = Certificate::GoalVisible;
      } else {
        c = check_pursuit_winning(ctx, ms, evaders[j]);
      }
    } catch (const Error& err) {
      std::string who = "P" + std::to_string(members[0] + 1);
      if (pair) who += "+P" + std::to_string(members[1] + 1);
      g.warnings.push_back("check " + who + " vs E" + std::to_string(j + 1) + " dropped: " + err.what());
      return false;
    }
    if (c.T == Certificate::None) return false;
    g.edges.push_back(WinEdge{g.edges.size(), std::move(members), j, std::move(c)});
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : live) single[i][j] = try_edge({i}, j, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t j : live)
        if (!single[a][j] && !single[b][j]) try_edge({a, b}, j, true);
  return g;
}

namespace {

class BipSearch {
 public:
  BipSearch(const std::vector<WinEdge>& edges, double cap_ms)
      : edges_(edges), deadline_(std::chrono::steady_clock::now() + std::chrono::microseconds(static_cast<long>(cap_ms * 1000.0))) {
    for (const auto& e : edges) {
      max_evader_ = std::max(max_evader_, e.evader + 1);
      for (std::size_t p : e.pursuers) max_pursuer_ = std::max(max_pursuer_, p + 1);
    }
    evader_used_.assign(max_evader_, false);
    pursuer_used_.assign(max_pursuer_, false);
  }

  BipSolution run() {
    dfs(0);
    best_.optimal = !timed_out_;
    best_.nodes = nodes_;
    return best_;
  }

 private:
  bool feasible(const WinEdge& e) const {
    if (evader_used_[e.evader]) return false;
    for (std::size_t p : e.pursuers)
      if (pursuer_used_[p]) return false;
    return true;
  }

  // Any completion has at most one more edge per evader that still has a feasible edge.
  std::pair<std::size_t, std::size_t> bound(std::size_t k) const {
    std::vector<char> any(max_evader_, 0), ons(max_evader_, 0);
    for (std::size_t i = k; i < edges_.size(); ++i) {
      const WinEdge& e = edges_[i];
      if (!feasible(e)) continue;
      any[e.evader] = 1;
      if (e.check.T == Certificate::Onsite) ons[e.evader] = 1;
    }
    std::size_t a = 0, o = 0;
    for (std::size_t j = 0; j < max_evader_; ++j) {
      a += any[j];
      o += ons[j];
    }
    return {cur_.size() + a, cur_onsite_ + o};
  }

  void set(const WinEdge& e, bool v) {
    evader_used_[e.evader] = v;
    for (std::size_t p : e.pursuers) pursuer_used_[p] = v;
  }

  void dfs(std::size_t k) {
    if (timed_out_) return;
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    const std::pair<std::size_t, std::size_t> key{cur_.size(), cur_onsite_};
    const std::pair<std::size_t, std::size_t> best{best_.chosen.size(), best_.onsite_count};
    if (key > best || !seeded_) {
      best_.chosen = cur_;
      best_.onsite_count = cur_onsite_;
      seeded_ = true;
    }
    if (k == edges_.size()) return;
    // Equal keys found later are lexicographically larger, so equality prunes too.
    const auto ub = bound(k);
    if (ub <= std::pair<std::size_t, std::size_t>{best_.chosen.size(), best_.onsite_count}) return;
    const WinEdge& e = edges_[k];
    if (feasible(e)) {
      set(e, true);
      cur_.push_back(k);
      const bool ons = e.check.T == Certificate::Onsite;
      cur_onsite_ += ons;
      dfs(k + 1);
      cur_onsite_ -= ons;
      cur_.pop_back();
      set(e, false);
    }
    dfs(k + 1);
  }

  const std::vector<WinEdge>& edges_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t max_evader_ = 0, max_pursuer_ = 0;
  std::vector<bool> evader_used_, pursuer_used_;
  std::vector<std::size_t> cur_;
  std::size_t cur_onsite_ = 0;
  BipSolution best_;
  bool seeded_ = false;
  bool timed_out_ = false;
  long nodes_ = 0;
};

}  // namespace

BipSolution solve_bip(const std::vector<WinEdge>& edges, double time_cap_ms) {
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id <= edges[i - 1].id) throw InvalidInput("edges must be sorted by id");
  return BipSearch(edges, time_cap_ms).run();
}

std::vector<Attachment> enhanced_matching(const CheckContext& ctx, const std::vector<std::size_t>& free_pursuers,
                                          const std::vector<PursuerState>& pursuers,
                                          const std::vector<EvaderState>& evaders,
                                          const std::vector<std::size_t>& live) {
  std::vector<Attachment> out;
  for (std::size_t i : free_pursuers) {
    const PursuerState& p = pursuers[i];
    std::optional<std::size_t> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j : live) {
      const EvaderState& e = evaders[j];
      if (p.position == e.position) continue;
      const double a = p.speed / e.speed;
      if (!check_onsite(ctx.world(), p.position, e.position, a, ctx.delta)) continue;
      const double d = dist(p.position, e.position);
      if (d < best_d || (d == best_d && j < *best)) {
        best_d = d;
        best = j;
      }
    }
    if (best) {
      const EvaderState& e = evaders[*best];
      out.push_back({i, *best, onsite_snapshot(p.position, e.position, p.speed / e.speed, ctx.delta)});
    }
  }
  return out;
}

std::vector<Pairing> maximum_matching(std::size_t n_left, std::size_t n_right,
                                      const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<long> match_right(n_right, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n_left; ++u) {
    seen.assign(n_right, 0);
    augment(u);
  }
  std::vector<Pairing> out;
  for (std::size_t v = 0; v < n_right; ++v)
    if (match_right[v] >= 0) out.push_back({static_cast<std::size_t>(match_right[v]), v});
  std::sort(out.begin(), out.end(), [](const Pairing& a, const Pairing& b) { return a.pursuer < b.pursuer; });
  return out;
}

std::vector<Pairing> non_dominated_matching(const EspGraph& g, const std::vector<std::size_t>& free_pursuers,
                                            const std::vector<std::size_t>& free_evaders,
                                            const std::vector<PursuerState>& pursuers,
                                            const std::vector<EvaderState>& evaders) {
  std::vector<std::vector<std::size_t>> adj(free_pursuers.size());
  for (std::size_t a = 0; a < free_pursuers.size(); ++a) {
    const PursuerState& p = pursuers[free_pursuers[a]];
    for (std::size_t b = 0; b < free_evaders.size(); ++b) {
      const EvaderState& e = evaders[free_evaders[b]];
      if (!check_evasion_winning(g, p.position, e.position, p.speed / e.speed, p.capture_radius)) adj[a].push_back(b);
    }
  }
  std::vector<Pairing> out = maximum_matching(free_pursuers.size(), free_evaders.size(), adj);
  for (Pairing& m : out) m = {free_pursuers[m.pursuer], free_evaders[m.evader]};
  return out;
}

std::vector<Pairing> closest_matching(const EspGraph& g, const std::vector<std::size_t>& free_pursuers,
                                      const std::vector<std::size_t>& unmatched_evaders,
                                      const std::vector<std::size_t>& live,
                                      const std::vector<PursuerState>& pursuers,
                                      const std::vector<EvaderState>& evaders) {
  std::vector<Pairing> out;
  const std::vector<std::size_t>& pool = unmatched_evaders.empty() ? live : unmatched_evaders;
  if (pool.empty()) return out;
  for (std::size_t i : free_pursuers) {
    std::optional<std::size_t> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j : pool) {
      double d;
      try {
        d = g.distance(pursuers[i].position, evaders[j].position);
      } catch (const Unreachable&) {
        d = std::numeric_limits<double>::infinity();
      }
      if (!best || d < best_d || (d == best_d && j < *best)) {
        best_d = d;
        best = j;
      }
    }
    out.push_back({i, *best});
  }
  return out;
}

}  // namespace mocg
