// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/svg.hpp"

#include <cstdio>
#include <sstream>

namespace mocg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Box& box, double width) : box_(box) {
    scale_ = width / std::max(box.hi.x - box.lo.x, 1e-9);
    w_ = width;
    h_ = (box.hi.y - box.lo.y) * scale_;
  }
  double X(double x) const { return (x - box_.lo.x) * scale_; }
  double Y(double y) const { return (box_.hi.y - y) * scale_; }
  double L(double d) const { return d * scale_; }

  void open(std::ostream& os) const {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w_) << "\" height=\"" << num(h_)
       << "\" viewBox=\"0 0 " << num(w_) << ' ' << num(h_) << "\">\n";
  }
  void polygon(std::ostream& os, const Polygon& p, const char* style) const {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << num(X(p.v[i].x)) << ',' << num(Y(p.v[i].y));
    os << "\" " << style << "/>\n";
  }
  void circle(std::ostream& os, Vec2 c, double r, const char* style) const {
    os << "<circle cx=\"" << num(X(c.x)) << "\" cy=\"" << num(Y(c.y)) << "\" r=\"" << num(L(r)) << "\" " << style
       << "/>\n";
  }
  void polyline(std::ostream& os, const std::vector<Vec2>& pts, const char* style) const {
    if (pts.size() < 2) return;
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(X(pts[i].x)) << ',' << num(Y(pts[i].y));
    os << "\" " << style << "/>\n";
  }
  void sector(std::ostream& os, const Sector& s, const char* style) const {
    if (s.radius <= 0.0) return;
    if (s.arc.full) {
      circle(os, s.apex, s.radius, style);
      return;
    }
    const Vec2 a = s.apex + s.radius * unit_from_angle(s.arc.start);
    const Vec2 b = s.apex + s.radius * unit_from_angle(s.arc.end());
    // y is flipped, so counter-clockwise in the plane is sweep-flag 0.
    os << "<path d=\"M " << num(X(s.apex.x)) << ' ' << num(Y(s.apex.y)) << " L " << num(X(a.x)) << ' ' << num(Y(a.y))
       << " A " << num(L(s.radius)) << ' ' << num(L(s.radius)) << " 0 " << (s.arc.span > kPi ? 1 : 0) << " 0 "
       << num(X(b.x)) << ' ' << num(Y(b.y)) << " Z\" " << style << "/>\n";
  }

 private:
  Box box_;
  double scale_ = 1.0, w_ = 0.0, h_ = 0.0;
};

}  // namespace

std::string render_svg(const Scenario& s, const TrajectoryLog& log, std::size_t frame_index) {
  const Frame& f = log.frames.at(frame_index);
  const Canvas cv(bounding_box(s.arena), 600.0);
  std::ostringstream os;
  cv.open(os);
  cv.polygon(os, s.arena, "fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"");
  cv.polygon(os, s.goal, "fill=\"#b7e4c7\" stroke=\"#2d6a4f\"");
  for (const Polygon& o : s.obstacles) cv.polygon(os, o, "fill=\"#6c757d\" stroke=\"#343a40\"");
  if (s.render.wavefront)
    for (const Sector& sec : f.overlay.sectors) cv.sector(os, sec, "fill=\"#ffd16640\" stroke=\"#e09f3e\"");
  if (s.render.gcp)
    for (const Polygon& g : f.overlay.gcps) cv.polygon(os, g, "fill=\"none\" stroke=\"#1d3557\" stroke-dasharray=\"4 3\"");
  if (s.render.apollonius)
    for (const Disk& d : f.overlay.disks) cv.circle(os, d.c, d.r, "fill=\"none\" stroke=\"#e63946\" stroke-dasharray=\"3 2\"");

  for (std::size_t i = 0; i < f.pursuers.size(); ++i) {
    std::vector<Vec2> trail;
    for (std::size_t k = 0; k <= frame_index; ++k) trail.push_back(log.frames[k].pursuers[i]);
    cv.polyline(os, trail, "fill=\"none\" stroke=\"#457b9d\" stroke-width=\"1\"");
  }
  for (std::size_t j = 0; j < f.evaders.size(); ++j) {
    std::vector<Vec2> trail;
    for (std::size_t k = 0; k <= frame_index; ++k) {
      if (log.frames[k].status[j] != EvaderStatus::Alive && k != frame_index) break;
      trail.push_back(log.frames[k].evaders[j]);
    }
    cv.polyline(os, trail, "fill=\"none\" stroke=\"#e76f51\" stroke-width=\"1\"");
  }
  const double radius = 0.006 * diameter(s.arena);
  for (const Vec2& p : f.pursuers) cv.circle(os, p, radius, "fill=\"#1d3557\"");
  for (std::size_t j = 0; j < f.evaders.size(); ++j)
    if (f.status[j] == EvaderStatus::Alive) cv.circle(os, f.evaders[j], radius, "fill=\"#e63946\"");
  os << "<text x=\"6\" y=\"16\" font-family=\"monospace\" font-size=\"12\">step " << f.step << "  t=" << num(f.time)
     << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace mocg
