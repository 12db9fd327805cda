// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/nonvis.hpp"

#include <algorithm>
#include <numeric>

#include "mocg/errors.hpp"
#include "mocg/goalvis.hpp"

namespace mocg {

std::vector<std::size_t> goal_visible_obstacle_vertices(const EspGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i : g.obstacle_nodes())
    if (is_goal_visible(g.world(), g.node(i))) out.push_back(i);
  return out;
}

double max_sector_distance(const Sector& sector, Vec2 s) {
  double d = dist(sector.apex, s);
  for (double th : {sector.arc.start, sector.arc.end()})
    d = std::max(d, dist(sector.apex + sector.radius * unit_from_angle(th), s));
  if (dist(sector.apex, s) < 1e-15) return std::max(d, sector.radius);
  if (sector.arc.contains(bearing(s, sector.apex), 0.0)) d = std::max(d, dist(sector.apex, s) + sector.radius);
  return d;
}

namespace {

// Free length of the ray from u along th, capped at cap.
double free_length(const World& w, Vec2 u, double th, double cap) {
  const Vec2 dir = unit_from_angle(th);
  double len = cap * first_blocked_parameter(u, u + cap * dir, w.obstacles);
  // Arena exit; the arena is convex.
  const Polygon& a = w.arena;
  for (std::size_t i = 0, n = a.size(); i < n; ++i) {
    const Vec2 p = a.v[i], q = a.v[(i + 1) % n];
    const Vec2 out = perp_cw(q - p);
    const double rate = dot(out, dir);
    if (rate <= 0.0) continue;
    len = std::min(len, std::max(0.0, dot(out, p - u) / rate));
  }
  return len;
}

}  // namespace

std::vector<Sector> reach_cover(const EspGraph& g, Vec2 source, double ell) {
  const World& w = g.world();
  const auto waves = wavefront(g, source, ell);
  std::vector<Sector> out;
  for (const Wavelet& wl : waves)
    if (wl.radius > 0.0) out.push_back(sector_of_wavelet(wl));
  if (ell <= 0.0) return out;

  struct C { Vec2 pos; double rho; int node; };
  std::vector<C> centers{{source, ell, -1}};
  const auto ds = g.distances_from(source);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (dist(g.node(i), source) < 1e-12) continue;
    if (ds[i] < ell - 1e-9) centers.push_back({g.node(i), ell - ds[i], static_cast<int>(i)});
  }
  constexpr int kN = kWavefrontSamples;
  const double step = kTwoPi / kN;
  constexpr int kBin = kN / 4;  // at most a quarter turn per cover sector
  for (const C& c : centers) {
    std::vector<char> covered(kN, 0);
    for (const Wavelet& wl : waves) {
      if (wl.center_node != c.node || dist(wl.center, c.pos) > 1e-12) continue;
      for (int k = 0; k < kN; ++k)
        if (wl.arc.contains(k * step, 1e-9)) covered[k] = 1;
    }
    if (std::all_of(covered.begin(), covered.end(), [](char v) { return v; })) continue;
    std::vector<double> len(kN);
    for (int k = 0; k < kN; ++k) len[k] = covered[k] ? c.rho : free_length(w, c.pos, k * step, c.rho);
    // Vertices visible from the center inside its disk: ray lengths peak at or beside them.
    std::vector<std::pair<double, double>> peaks;  // (angle, distance)
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const Vec2 v = g.node(i);
      const double dv = dist(v, c.pos);
      if (dv < 1e-12 || dv > c.rho || !w.visible(c.pos, v)) continue;
      const double th = bearing(c.pos, v);
      peaks.push_back({th, dv});
      for (double off : {-1e-7, 1e-7}) peaks.push_back({normalize_angle(th + off), free_length(w, c.pos, th + off, c.rho)});
    }
    // Group uncovered samples into runs, then runs into bins.
    int k0 = 0;
    while (k0 < kN && !covered[k0]) ++k0;
    if (k0 == kN) k0 = 0;  // nothing covered: start anywhere
    int k = k0;
    int visited = 0;
    while (visited < kN) {
      if (covered[k]) {
        k = (k + 1) % kN;
        ++visited;
        continue;
      }
      // Bin from the previous sample (a covered or earlier boundary ray) through up to kBin samples.
      const int start = (k + kN - 1) % kN;
      int count = 0;
      double rmax = len[start];
      int e = k;
      while (count < kBin && !covered[e] && visited < kN) {
        rmax = std::max(rmax, len[e]);
        e = (e + 1) % kN;
        ++count;
        ++visited;
      }
      rmax = std::max(rmax, len[e]);  // closing boundary ray
      const AngleRange arc = AngleRange::ccw(start * step, e * step);
      for (const auto& [th, d] : peaks)
        if (arc.contains(th, 0.0)) rmax = std::max(rmax, d);
      if (rmax > 1e-12) out.push_back(Sector{c.pos, std::min(rmax, c.rho), arc});
      k = e;
    }
  }
  return out;
}

std::optional<NonvisCertificate> check_anchor(const EspGraph& g, std::size_t anchor_node, Vec2 P, Vec2 E, double alpha,
                                              double r) {
  const World& w = g.world();
  const Vec2 s = g.node(anchor_node);
  EspPath path;
  try {
    path = g.path(P, s);
  } catch (const Unreachable&) {
    return std::nullopt;
  }
  const double dps = path.length;
  for (const Vec2& gv : w.goal.v) {
    double de = 0.0;
    try {
      de = g.distance(E, gv);
    } catch (const Unreachable&) {
      continue;
    }
    if (alpha * de < dps) return std::nullopt;
  }
  NonvisCertificate cert;
  cert.anchor_node = anchor_node;
  cert.anchor = s;
  cert.anchor_distance = dps;
  cert.evader_budget = dps / alpha;
  cert.path = std::move(path);
  auto sectors = reach_cover(g, E, cert.evader_budget);
  // Sectors nearest the goal first: failures show up early.
  std::vector<double> gap(sectors.size());
  for (std::size_t i = 0; i < sectors.size(); ++i) gap[i] = distance_to_convex_polygon(sectors[i].apex, w.goal) - sectors[i].radius;
  std::vector<std::size_t> order(sectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gap[a] < gap[b]; });
  for (std::size_t i : order) {
    const Sector& sec = sectors[i];
    const double dk = max_sector_distance(sec, s);
    const double J = solve_wavelet_program(sec, s, alpha, r, dk, w.goal);
    if (!(J >= 0.0)) return std::nullopt;
    cert.sectors.push_back(sec);
    cert.d_k.push_back(dk);
    cert.J.push_back(J);
    cert.min_J = std::min(cert.min_J, J);
  }
  return cert;
}

std::optional<NonvisCertificate> check_nonvis_winning(const EspGraph& g, const std::vector<std::size_t>& gv_vertices,
                                                      Vec2 P, Vec2 E, double alpha, double r) {
  if (!(alpha > 1.0)) throw InvalidInput("speed ratio must exceed 1");
  const auto dp = g.distances_from(P);
  std::vector<std::size_t> anchors = gv_vertices;
  std::stable_sort(anchors.begin(), anchors.end(), [&](std::size_t a, std::size_t b) { return dp[a] < dp[b]; });
  double min_goal = kPosInf;
  for (const Vec2& gv : g.world().goal.v) {
    try {
      min_goal = std::min(min_goal, g.distance(E, gv));
    } catch (const Unreachable&) {
    }
  }
  for (std::size_t a : anchors) {
    if (!std::isfinite(dp[a])) continue;
    // Farther anchors only make the evader's head start larger.
    if (alpha * min_goal < dp[a]) break;
    if (auto cert = check_anchor(g, a, P, E, alpha, r)) return cert;
  }
  return std::nullopt;
}

}  // namespace mocg
