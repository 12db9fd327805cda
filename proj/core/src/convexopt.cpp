// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/convexopt.hpp"

#include <algorithm>
#include <functional>

#include "mocg/errors.hpp"

namespace mocg {

namespace {

constexpr int kScan = 256;
constexpr double kGolden = 0.6180339887498949;

// Golden-section minimum of a unimodal function on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b, int iters, double* fmin = nullptr) {
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && b - a > 1e-15; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  const double x = fc <= fd ? c : d;
  double best = std::min(fc, fd);
  // Endpoints matter for monotone pieces.
  double xa = x;
  for (double e : {a, b}) {
    const double fe = f(e);
    if (fe < best) {
      best = fe;
      xa = e;
    }
  }
  if (fmin) *fmin = best;
  return xa;
}

// Global minimum over a circle parameter: dense scan, then refine the best few brackets.
double circle_min(const std::function<double(double)>& f, double* fmin, int* evals) {
  std::vector<double> vals(kScan);
  const double h = kTwoPi / kScan;
  for (int k = 0; k < kScan; ++k) vals[k] = f(k * h);
  std::vector<int> locals;
  for (int k = 0; k < kScan; ++k) {
    const double l = vals[(k + kScan - 1) % kScan], r = vals[(k + 1) % kScan];
    if (vals[k] <= l && vals[k] <= r) locals.push_back(k);
  }
  std::sort(locals.begin(), locals.end(), [&](int a, int b) { return vals[a] < vals[b] || (vals[a] == vals[b] && a < b); });
  if (locals.size() > 3) locals.resize(3);
  double best_phi = 0.0, best = kPosInf;
  for (int k : locals) {
    double fm = 0.0;
    const double phi = golden_min(f, (k - 1) * h, (k + 1) * h, 80, &fm);
    const double np = normalize_angle(phi);
    // Smallest polar angle wins ties.
    if (fm < best - 1e-15 || (fm <= best + 1e-15 && np < best_phi)) {
      best = fm;
      best_phi = np;
    }
  }
  if (evals) *evals = kScan + static_cast<int>(locals.size()) * 84;
  if (fmin) *fmin = best;
  return best_phi;
}

}  // namespace

double FConstraint::radial(double phi) const {
  const Vec2 w = E - P;
  const Vec2 u = unit_from_angle(phi);
  const double a = alpha * alpha - 1.0;
  const double b = alpha * r - dot(w, u);
  const double c = norm2(w) - r * r;
  return (-b + std::sqrt(b * b + a * c)) / a;
}

EvasionRegion::EvasionRegion(std::vector<FConstraint> cs) : cs_(std::move(cs)) {
  if (cs_.empty()) throw InvalidInput("evasion region needs at least one constraint");
  E_ = cs_.front().E;
  for (const FConstraint& c : cs_) {
    if (dist(c.E, E_) > 1e-12) throw InvalidInput("constraints must share the evader position");
    if (!(c.alpha > 1.0)) throw InvalidInput("speed ratio must exceed 1");
    if (c.r < 0.0) throw InvalidInput("capture radius must be non-negative");
    if (dist(c.P, c.E) <= c.r) throw InvalidInput("evader is already within capture radius");
  }
}

double EvasionRegion::radial(double phi) const {
  double rho = kPosInf;
  for (const FConstraint& c : cs_) rho = std::min(rho, c.radial(phi));
  return rho;
}

bool EvasionRegion::contains(Vec2 x, double tol) const {
  for (const FConstraint& c : cs_)
    if (c.eval(x) < -tol) return false;
  return true;
}

double EvasionRegion::min_value(Vec2 x) const {
  double m = kPosInf;
  for (const FConstraint& c : cs_) m = std::min(m, c.eval(x));
  return m;
}

Vec2 EvasionRegion::project(Vec2 p) const {
  if (contains(p, 0.0)) return p;
  if (cs_.size() == 1 && cs_[0].r == 0.0) {
    const FConstraint& c = cs_[0];
    const double a2 = c.alpha * c.alpha;
    const Vec2 center = (a2 * c.E - c.P) / (a2 - 1.0);
    const double R = c.alpha * dist(c.P, c.E) / (a2 - 1.0);
    return center + R * normalized(p - center);
  }
  const double phi = circle_min([&](double t) { return norm2(boundary(t) - p); }, nullptr, nullptr);
  return boundary(phi);
}

Vec2 project_f_constraint(Vec2 p, const FConstraint& c) { return EvasionRegion({c}).project(p); }

namespace {

struct Overlap {
  bool hit = false;
  Vec2 at;
  double gap = kPosInf;
  Vec2 x_I, x_G;
  int evals = 0;
};

Overlap region_vs_polygon(const EvasionRegion& A, const Polygon& G) {
  Overlap o;
  for (const Vec2& g : G.v) {
    if (A.contains(g, 0.0)) {
      o.hit = true;
      o.at = g;
      o.gap = 0.0;
      o.x_I = o.x_G = g;
      return o;
    }
  }
  if (point_in_closed(A.evader(), G, 0.0)) {
    o.hit = true;
    o.at = o.x_I = o.x_G = A.evader();
    o.gap = 0.0;
    return o;
  }
  double fm = 0.0;
  const double phi = circle_min([&](double t) { return distance_to_convex_polygon(A.boundary(t), G); }, &fm, &o.evals);
  o.x_I = A.boundary(phi);
  o.x_G = project_to_convex_polygon(o.x_I, G);
  o.gap = dist(o.x_I, o.x_G);
  if (o.gap <= 1e-12) {
    o.hit = true;
    o.at = o.x_I;
  }
  return o;
}

}  // namespace

SetDistance convex_set_distance(const std::vector<FConstraint>& cs, const Polygon& goal) {
  if (!is_convex(goal)) throw InvalidInput("goal polygon is not convex");
  const EvasionRegion A(cs);
  const Overlap o = region_vs_polygon(A, goal);
  if (!std::isfinite(o.gap)) throw SolverFailure("set distance did not produce a finite value");
  SetDistance out;
  out.iterations = o.evals;
  if (!o.hit) {
    out.dist = o.gap;
    out.x_I = o.x_I;
    out.x_G = o.x_G;
    return out;
  }
  // Touching or overlapping: overlapping means some common point is strictly inside one of the sets.
  std::vector<FConstraint> shrunk = cs;
  bool shrinkable = true;
  for (FConstraint& c : shrunk) {
    c.r += kEpsFeas;
    if (dist(c.P, c.E) <= c.r) shrinkable = false;
  }
  if (shrinkable) {
    const Overlap s = region_vs_polygon(EvasionRegion(shrunk), goal);
    if (s.hit) {
      out.dist = kNegInf;
      out.x_I = out.x_G = s.at;
      return out;
    }
  }
  const auto inner = offset_convex(goal, -kEpsFeas);
  if (!inner.empty()) {
    const Overlap s = region_vs_polygon(A, Polygon{inner});
    if (s.hit) {
      out.dist = kNegInf;
      out.x_I = out.x_G = s.at;
      return out;
    }
  }
  out.dist = 0.0;
  out.x_I = out.x_G = o.at;
  return out;
}

Vec2 project_sector_dilation(Vec2 p, const Sector& sector, double rho) {
  const Vec2 q = project_to_sector(p, sector);
  const double d = dist(p, q);
  if (d <= rho) return p;
  return q + rho * (p - q) / d;
}

SectorReach::SectorReach(const Sector& sector, Vec2 s, double rho1, double rho2)
    : sector_(sector), s_(s), rho1_(rho1), rho2_(rho2) {
  if (rho1 < 0.0 || rho2 < 0.0) {
    empty_ = true;
    return;
  }
  const double ds = dist(s, project_to_sector(s, sector));
  if (std::max(0.0, ds - rho1) > rho2) {
    empty_ = true;
    return;
  }
  if (rho2 == 0.0) return;
  // Points of the circle |x - s| = rho2 that are exactly rho1 away from the sector.
  constexpr int kN = 720;
  auto h = [&](double psi) { return dist(s + rho2 * unit_from_angle(psi), project_to_sector(s + rho2 * unit_from_angle(psi), sector)) - rho1; };
  double prev = h(0.0);
  for (int k = 1; k <= kN; ++k) {
    const double b = kTwoPi * k / kN;
    const double cur = h(b);
    if ((prev <= 0.0) != (cur <= 0.0)) {
      double lo = kTwoPi * (k - 1) / kN, hi = b;
      const bool lo_neg = prev <= 0.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((h(mid) <= 0.0) == lo_neg) lo = mid; else hi = mid;
      }
      corners_.push_back(s + rho2 * unit_from_angle(0.5 * (lo + hi)));
    }
    prev = cur;
  }
}

bool SectorReach::in_c1(Vec2 p, double tol) const { return dist(p, project_to_sector(p, sector_)) <= rho1_ + tol; }
bool SectorReach::in_c2(Vec2 p, double tol) const { return dist(p, s_) <= rho2_ + tol; }
Vec2 SectorReach::project_c1(Vec2 p) const { return project_sector_dilation(p, sector_, rho1_); }

bool SectorReach::contains(Vec2 p, double tol) const { return !empty_ && in_c1(p, tol) && in_c2(p, tol); }

Vec2 SectorReach::project(Vec2 p) const {
  if (empty_) throw InvalidInput("projection onto an empty set");
  if (contains(p, 0.0)) return p;
  const Vec2 q1 = project_c1(p);
  if (in_c2(q1, 1e-12)) return q1;
  const Vec2 q2 = dist(p, s_) > 0.0 ? s_ + rho2_ * normalized(p - s_) : s_;
  if (in_c1(q2, 1e-12)) return q2;
  // Otherwise the projection sits on both boundaries.
  Vec2 best = q1;
  double bd = kPosInf;
  for (const Vec2& c : corners_) {
    const double d = dist(p, c);
    if (d < bd) {
      bd = d;
      best = c;
    }
  }
  if (corners_.empty()) {
    // Tangential contact: the set is (numerically) the single point nearest both pieces.
    best = 0.5 * (q1 + q2);
  }
  return best;
}

namespace {

// Signed separation between a SectorReach and a convex polygon: distance, or 0 if they meet.
double reach_gap(const SectorReach& X, const Polygon& G, Vec2* witness, bool* meets) {
  *meets = false;
  for (const Vec2& g : G.v) {
    if (X.contains(g)) {
      *meets = true;
      if (witness) *witness = g;
      return 0.0;
    }
  }
  const Vec2 x0 = X.project(vertex_centroid(G));
  if (point_in_closed(x0, G, 0.0)) {
    *meets = true;
    if (witness) *witness = x0;
    return 0.0;
  }
  double best = kPosInf;
  Vec2 bw;
  for (std::size_t i = 0, n = G.size(); i < n; ++i) {
    const Vec2 a = G.v[i], b = G.v[(i + 1) % n];
    double fm = 0.0;
    const double t = golden_min([&](double u) { const Vec2 y = a + u * (b - a); return dist(y, X.project(y)); }, 0.0, 1.0, 90, &fm);
    if (fm < best) {
      best = fm;
      bw = X.project(a + t * (b - a));
    }
  }
  if (best <= 1e-12) *meets = true;
  if (witness) *witness = bw;
  return best;
}

}  // namespace

double solve_wavelet_program(const Sector& sector, Vec2 s, double alpha, double r, double d_k, const Polygon& goal,
                             Vec2* witness) {
  if (!(alpha > 1.0)) throw InvalidInput("speed ratio must exceed 1");
  if (!is_convex(goal)) throw InvalidInput("goal polygon is not convex");
  const double rho1 = (d_k - r) / (alpha - 1.0);
  const double rho2 = (alpha * d_k - r) / (alpha - 1.0);
  const SectorReach X(sector, s, rho1, rho2);
  if (X.empty()) return kPosInf;
  bool meets = false;
  const double gap = reach_gap(X, goal, witness, &meets);
  if (!meets) return gap;
  const SectorReach Xs(sector, s, rho1 - kEpsFeas, rho2 - kEpsFeas);
  if (!Xs.empty()) {
    bool m2 = false;
    reach_gap(Xs, goal, nullptr, &m2);
    if (m2) return kNegInf;
  }
  const auto inner = offset_convex(goal, -kEpsFeas);
  if (!inner.empty()) {
    bool m3 = false;
    reach_gap(X, Polygon{inner}, nullptr, &m3);
    if (m3) return kNegInf;
  }
  return 0.0;
}

}  // namespace mocg
