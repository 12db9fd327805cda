// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/esp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mocg/errors.hpp"

namespace mocg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLenTol = 1e-12;

// (length, hops) ordering with a small tolerance on length.
bool better(double l1, int h1, double l2, int h2) {
  if (l2 == kInf) return l1 < kInf;
  if (l1 < l2 - kLenTol * std::max(1.0, l2)) return true;
  if (l1 > l2 + kLenTol * std::max(1.0, l2)) return false;
  return h1 < h2;
}
}  // namespace

bool World::in_free_space(Vec2 p) const {
  if (!point_in_closed(p, arena)) return false;
  for (const Polygon& o : obstacles)
    if (point_strictly_inside(p, o)) return false;
  return true;
}

bool World::visible(Vec2 a, Vec2 b) const {
  if (!segment_obstacle_free(a, b, obstacles)) return false;
  if (is_convex(arena, 0.0)) return point_in_closed(a, arena) && point_in_closed(b, arena);
  return segment_in_region(a, b, arena);
}

EspGraph::EspGraph(World world) : world_(std::move(world)) {
  for (const Polygon& o : world_.obstacles) {
    for (const Vec2& v : o.v) {
      obstacle_nodes_.push_back(nodes_.size());
      nodes_.push_back(v);
      kinds_.push_back(NodeKind::Obstacle);
    }
  }
  for (const Vec2& v : world_.arena.v) {
    nodes_.push_back(v);
    kinds_.push_back(NodeKind::Arena);
  }
  for (const Vec2& v : world_.goal.v) {
    nodes_.push_back(v);
    kinds_.push_back(NodeKind::Goal);
  }
  const std::size_t n = nodes_.size();
  dist_.assign(n * n, kInf);
  hops_.assign(n * n, 0);
  next_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    dist_[i * n + i] = 0.0;
    next_[i * n + i] = static_cast<int>(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!world_.visible(nodes_[i], nodes_[j])) continue;
      const double d = dist(nodes_[i], nodes_[j]);
      dist_[i * n + j] = dist_[j * n + i] = d;
      hops_[i * n + j] = hops_[j * n + i] = 1;
      next_[i * n + j] = static_cast<int>(j);
      next_[j * n + i] = static_cast<int>(i);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = dist_[i * n + k];
      if (dik == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double dkj = dist_[k * n + j];
        if (dkj == kInf || i == j) continue;
        const double cand = dik + dkj;
        const int h = hops_[i * n + k] + hops_[k * n + j];
        if (better(cand, h, dist_[i * n + j], hops_[i * n + j])) {
          dist_[i * n + j] = cand;
          hops_[i * n + j] = h;
          next_[i * n + j] = next_[i * n + k];
        }
      }
    }
  }
}

void EspGraph::check_free(Vec2 p, const char* what) const {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !world_.in_free_space(p))
    throw InvalidInput(std::string(what) + " is not in free space");
}

std::vector<std::size_t> EspGraph::visible_nodes(Vec2 p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (world_.visible(p, nodes_[i])) out.push_back(i);
  return out;
}

std::vector<double> EspGraph::distances_from(Vec2 p) const {
  const std::size_t n = nodes_.size();
  std::vector<double> out(n, kInf);
  for (std::size_t u : visible_nodes(p)) {
    const double du = dist(p, nodes_[u]);
    for (std::size_t j = 0; j < n; ++j) out[j] = std::min(out[j], du + dist_[u * n + j]);
  }
  return out;
}

EspPath EspGraph::path(Vec2 a, Vec2 b) const {
  check_free(a, "path start");
  check_free(b, "path end");
  if (world_.visible(a, b)) return {dist(a, b), {a, b}};
  const std::size_t n = nodes_.size();
  const auto va = visible_nodes(a), vb = visible_nodes(b);
  double best = kInf;
  int best_h = 0;
  std::size_t bu = 0, bv = 0;
  for (std::size_t u : va) {
    const double du = dist(a, nodes_[u]);
    for (std::size_t v : vb) {
      const double d = dist_[u * n + v];
      if (d == kInf) continue;
      const double total = du + d + dist(nodes_[v], b);
      const int h = hops_[u * n + v] + 2;
      // Index order of (u, v) settles remaining ties.
      if (better(total, h, best, best_h)) {
        best = total;
        best_h = h;
        bu = u;
        bv = v;
      }
    }
  }
  if (best == kInf) throw Unreachable("no obstacle-free path between the endpoints");
  EspPath out;
  out.length = best;
  out.points.push_back(a);
  for (std::size_t k = bu;; k = static_cast<std::size_t>(next_[k * n + bv])) {
    out.points.push_back(nodes_[k]);
    if (k == bv) break;
  }
  out.points.push_back(b);
  // Drop zero-length hops (endpoint sitting on a node).
  std::vector<Vec2> pts;
  for (const Vec2& p : out.points)
    if (pts.empty() || dist(pts.back(), p) > 1e-12) pts.push_back(p);
  if (pts.size() == 1) pts.push_back(b);
  out.points = std::move(pts);
  return out;
}

double EspGraph::distance(Vec2 a, Vec2 b) const { return path(a, b).length; }

bool esp_reachable(const EspGraph& g, Vec2 a, Vec2 b, double ell) {
  try {
    return g.distance(a, b) <= ell + kEpsGeom;
  } catch (const Unreachable&) {
    return false;
  }
}

namespace {

struct Center {
  Vec2 pos;
  double d = 0.0;
  double radius = 0.0;
  int node = -1;
};

class Ownership {
 public:
  Ownership(const World& w, std::vector<Center> centers, double ell)
      : world_(w), centers_(std::move(centers)), ell_(ell) {}

  const std::vector<Center>& centers() const { return centers_; }

  bool owns(std::size_t c, double th) const {
    const Center& me = centers_[c];
    const Vec2 p = me.pos + me.radius * unit_from_angle(th);
    if (!world_.in_free_space(p)) return false;
    if (!world_.visible(me.pos, p)) return false;
    for (std::size_t k = 0; k < centers_.size(); ++k) {
      if (k == c) continue;
      const double val = centers_[k].d + dist(p, centers_[k].pos);
      const bool shorter = val < ell_ - kWavefrontOwnTol;
      const bool tie_lower = k < c && val <= ell_ + kWavefrontOwnTol;
      if ((shorter || tie_lower) && world_.visible(centers_[k].pos, p)) return false;
    }
    return true;
  }

 private:
  const World& world_;
  std::vector<Center> centers_;
  double ell_;
};

// Boundary between a non-owned angle `out` and an owned angle `in` (ccw distance < step).
double refine(const Ownership& own, std::size_t c, double out, double in) {
  double lo = 0.0, hi = ccw_span(out, in);
  const bool forward = hi <= kPi;
  if (!forward) hi = -ccw_span(in, out);
  // Parametrize from out (t=0, not owned) to in (t=hi, owned).
  while (std::abs(hi - lo) > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (own.owns(c, out + mid)) hi = mid; else lo = mid;
  }
  return normalize_angle(out + hi);
}

}  // namespace

std::vector<Wavelet> wavefront(const EspGraph& g, Vec2 source, double ell) {
  if (!(ell >= 0.0) || !std::isfinite(ell)) throw InvalidInput("wavefront budget must be finite and non-negative");
  if (!g.world().in_free_space(source)) throw InvalidInput("wavefront source is not in free space");
  if (ell < 1e-12) return {Wavelet{source, 0.0, AngleRange{0.0, 0.0, false}, -1, 0.0}};

  std::vector<Center> centers{{source, 0.0, ell, -1}};
  const auto ds = g.distances_from(source);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (dist(g.node(i), source) < 1e-12) continue;
    if (ds[i] < ell - 1e-9) centers.push_back({g.node(i), ds[i], ell - ds[i], static_cast<int>(i)});
  }
  const Ownership own(g.world(), centers, ell);

  std::vector<Wavelet> raw;
  const double step = kTwoPi / kWavefrontSamples;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    std::vector<char> owned(kWavefrontSamples);
    int count = 0;
    for (int k = 0; k < kWavefrontSamples; ++k) {
      owned[k] = own.owns(c, k * step);
      count += owned[k];
    }
    const Center& ce = centers[c];
    if (count == 0) continue;
    if (count == kWavefrontSamples) {
      raw.push_back({ce.pos, ce.radius, AngleRange::full_circle(), ce.node, ce.d});
      continue;
    }
    // Walk runs of owned samples starting after a non-owned one.
    int k0 = 0;
    while (owned[k0]) ++k0;
    for (int i = 1; i <= kWavefrontSamples; ++i) {
      const int k = (k0 + i) % kWavefrontSamples;
      const int prev = (k + kWavefrontSamples - 1) % kWavefrontSamples;
      if (owned[k] && !owned[prev]) {
        int e = k;
        while (owned[(e + 1) % kWavefrontSamples]) e = (e + 1) % kWavefrontSamples;
        const double a = refine(own, c, prev * step, k * step);
        const double b = refine(own, c, ((e + 1) % kWavefrontSamples) * step, e * step);
        raw.push_back({ce.pos, ce.radius, AngleRange::ccw(a, b), ce.node, ce.d});
      }
    }
  }

  std::vector<Wavelet> out;
  for (const Wavelet& w : raw) {
    if (w.arc.span <= kPi) {
      out.push_back(w);
      continue;
    }
    const double half = 0.5 * w.arc.span;
    Wavelet a = w, b = w;
    a.arc = AngleRange{w.arc.start, half, false};
    b.arc = AngleRange{normalize_angle(w.arc.start + half), half, false};
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

Sector sector_of_wavelet(const Wavelet& w) {
  if (w.arc.span > kPi + 1e-12) throw InvalidInput("wavelet arc spans more than pi");
  return Sector{w.center, w.radius, w.arc};
}

}  // namespace mocg
