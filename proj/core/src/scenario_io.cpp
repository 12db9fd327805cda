// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#include "mocg/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "mocg/errors.hpp"

namespace mocg {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : 0; }

class Reader {
 public:
  std::map<std::string, int> lines;

  [[noreturn]] void fail(const YAML::Node& n, const std::string& msg) const { throw ScenarioError(msg, line_of(n)); }

  void note(const std::string& path, const YAML::Node& n) { lines[path] = line_of(n); }

  void only(const YAML::Node& map, const std::string& path, std::initializer_list<const char*> keys) const {
    if (!map.IsMap()) fail(map, path + " must be a mapping");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& kv : map) {
      const std::string k = kv.first.as<std::string>();
      if (!allowed.count(k)) fail(kv.first, "unknown field '" + (path.empty() ? k : path + "." + k) + "'");
    }
  }

  YAML::Node need(const YAML::Node& map, const char* key, const std::string& path) const {
    const YAML::Node n = map[key];
    if (!n) fail(map, "missing field '" + path + "'");
    return n;
  }

  template <class T>
  T scalar(const YAML::Node& n, const std::string& path) const {
    if (!n.IsScalar()) fail(n, path + " must be a scalar");
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      fail(n, path + " has the wrong type");
    }
  }

  Vec2 point(const YAML::Node& n, const std::string& path) const {
    if (!n.IsSequence() || n.size() != 2) fail(n, path + " must be a pair [x, y]");
    return {scalar<double>(n[0], path), scalar<double>(n[1], path)};
  }

  Polygon polygon(const YAML::Node& n, const std::string& path) {
    note(path, n);
    if (!n.IsSequence()) fail(n, path + " must be a list of points");
    Polygon p;
    for (std::size_t i = 0; i < n.size(); ++i) p.v.push_back(point(n[i], path));
    return p;
  }
};

Scenario read(const YAML::Node& root) {
  Reader r;
  Scenario s;
  r.only(root, "",
         {"version", "name", "seed", "max_steps", "delta", "dt", "allocation_stride", "arena", "goal", "obstacles",
          "pursuers", "evaders", "render"});
  auto note = [&](const std::string& path, const char* key, const YAML::Node& map) {
    if (map[key]) r.note(path, map[key]);
  };
  for (const char* k : {"version", "name", "seed", "max_steps", "delta", "dt", "allocation_stride", "render"})
    note(k, k, root);
  s.version = r.scalar<int>(r.need(root, "version", "version"), "version");
  if (root["name"]) s.name = r.scalar<std::string>(root["name"], "name");
  if (root["seed"]) s.seed = r.scalar<std::uint64_t>(root["seed"], "seed");
  if (root["max_steps"]) s.max_steps = r.scalar<int>(root["max_steps"], "max_steps");
  if (root["delta"]) s.delta = r.scalar<double>(root["delta"], "delta");
  if (root["dt"]) s.dt = r.scalar<double>(root["dt"], "dt");
  if (root["allocation_stride"]) s.allocation_stride = r.scalar<int>(root["allocation_stride"], "allocation_stride");
  s.arena = r.polygon(r.need(root, "arena", "arena"), "arena");
  s.goal = r.polygon(r.need(root, "goal", "goal"), "goal");
  if (const YAML::Node obs = root["obstacles"]) {
    r.note("obstacles", obs);
    if (!obs.IsSequence()) r.fail(obs, "obstacles must be a list of polygons");
    for (std::size_t i = 0; i < obs.size(); ++i)
      s.obstacles.push_back(r.polygon(obs[i], "obstacles[" + std::to_string(i) + "]"));
  }

  const YAML::Node ps = r.need(root, "pursuers", "pursuers");
  r.note("pursuers", ps);
  if (!ps.IsSequence()) r.fail(ps, "pursuers must be a list");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string path = "pursuers[" + std::to_string(i) + "]";
    const YAML::Node n = ps[i];
    r.only(n, path, {"position", "speed", "capture_radius"});
    PursuerSpec p;
    r.note(path, n);
    for (const char* k : {"position", "speed", "capture_radius"}) note(path + "." + k, k, n);
    p.position = r.point(r.need(n, "position", path + ".position"), path + ".position");
    p.speed = r.scalar<double>(r.need(n, "speed", path + ".speed"), path + ".speed");
    p.capture_radius = r.scalar<double>(r.need(n, "capture_radius", path + ".capture_radius"), path + ".capture_radius");
    s.pursuers.push_back(p);
  }

  const YAML::Node es = r.need(root, "evaders", "evaders");
  r.note("evaders", es);
  if (!es.IsSequence()) r.fail(es, "evaders must be a list");
  for (std::size_t j = 0; j < es.size(); ++j) {
    const std::string path = "evaders[" + std::to_string(j) + "]";
    const YAML::Node n = es[j];
    r.only(n, path, {"position", "speed", "policy"});
    EvaderSpec e;
    r.note(path, n);
    for (const char* k : {"position", "speed", "policy"}) note(path + "." + k, k, n);
    e.position = r.point(r.need(n, "position", path + ".position"), path + ".position");
    e.speed = r.scalar<double>(r.need(n, "speed", path + ".speed"), path + ".speed");
    if (const YAML::Node pol = n["policy"]) {
      const std::string pp = path + ".policy";
      r.only(pol, pp, {"kind", "seed", "resample_every", "script"});
      const YAML::Node kind = r.need(pol, "kind", pp + ".kind");
      try {
        e.policy.kind = policy_from_name(r.scalar<std::string>(kind, pp + ".kind"));
      } catch (const InvalidInput& ex) {
        r.fail(kind, ex.what());
      }
      if (pol["seed"]) e.policy.seed = r.scalar<std::uint64_t>(pol["seed"], pp + ".seed");
      if (pol["resample_every"]) e.policy.resample_every = r.scalar<int>(pol["resample_every"], pp + ".resample_every");
      if (const YAML::Node sc = pol["script"]) {
        if (!sc.IsSequence()) r.fail(sc, pp + ".script must be a list of headings");
        for (std::size_t k = 0; k < sc.size(); ++k) e.policy.script.push_back(r.scalar<double>(sc[k], pp + ".script"));
      }
    }
    s.evaders.push_back(e);
  }

  if (const YAML::Node rn = root["render"]) {
    r.only(rn, "render", {"every", "apollonius", "gcp", "wavefront"});
    if (rn["every"]) s.render.every = r.scalar<int>(rn["every"], "render.every");
    if (rn["apollonius"]) s.render.apollonius = r.scalar<bool>(rn["apollonius"], "render.apollonius");
    if (rn["gcp"]) s.render.gcp = r.scalar<bool>(rn["gcp"], "render.gcp");
    if (rn["wavefront"]) s.render.wavefront = r.scalar<bool>(rn["wavefront"], "render.wavefront");
  }

  const auto& lines = r.lines;
  auto orient_ccw = [](Polygon& p) {
    if (p.v.size() >= 3 && signed_area(p.v) < 0.0) std::reverse(p.v.begin(), p.v.end());
  };
  orient_ccw(s.arena);
  orient_ccw(s.goal);
  for (Polygon& o : s.obstacles) orient_ccw(o);
  validate_scenario(s, [&lines](const std::string& path) {
    // Fall back to the nearest enclosing field that was seen.
    std::string p = path;
    while (!p.empty()) {
      const auto it = lines.find(p);
      if (it != lines.end()) return it->second;
      const auto cut = p.find_last_of(".[");
      if (cut == std::string::npos) break;
      p.resize(cut);
    }
    return 0;
  });
  return s;
}

void emit_point(YAML::Emitter& out, Vec2 p) { out << YAML::Flow << YAML::BeginSeq << p.x << p.y << YAML::EndSeq; }

void emit_polygon(YAML::Emitter& out, const Polygon& poly) {
  out << YAML::Flow << YAML::BeginSeq;
  for (Vec2 p : poly.v) emit_point(out, p);
  out << YAML::EndSeq;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ScenarioError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : 0);
  }
  if (!root || root.IsNull()) throw ScenarioError("empty scenario document", 1);
  return read(root);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open file", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string dump_scenario(const Scenario& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "version" << YAML::Value << s.version;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "seed" << YAML::Value << s.seed;
  out << YAML::Key << "max_steps" << YAML::Value << s.max_steps;
  if (s.delta) out << YAML::Key << "delta" << YAML::Value << *s.delta;
  if (s.dt) out << YAML::Key << "dt" << YAML::Value << *s.dt;
  out << YAML::Key << "allocation_stride" << YAML::Value << s.allocation_stride;
  out << YAML::Key << "arena" << YAML::Value;
  emit_polygon(out, s.arena);
  out << YAML::Key << "goal" << YAML::Value;
  emit_polygon(out, s.goal);
  out << YAML::Key << "obstacles" << YAML::Value << YAML::BeginSeq;
  for (const Polygon& o : s.obstacles) emit_polygon(out, o);
  out << YAML::EndSeq;
  out << YAML::Key << "pursuers" << YAML::Value << YAML::BeginSeq;
  for (const PursuerSpec& p : s.pursuers) {
    out << YAML::BeginMap << YAML::Key << "position" << YAML::Value;
    emit_point(out, p.position);
    out << YAML::Key << "speed" << YAML::Value << p.speed;
    out << YAML::Key << "capture_radius" << YAML::Value << p.capture_radius << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "evaders" << YAML::Value << YAML::BeginSeq;
  for (const EvaderSpec& e : s.evaders) {
    out << YAML::BeginMap << YAML::Key << "position" << YAML::Value;
    emit_point(out, e.position);
    out << YAML::Key << "speed" << YAML::Value << e.speed;
    out << YAML::Key << "policy" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << policy_name(e.policy.kind);
    if (e.policy.seed) out << YAML::Key << "seed" << YAML::Value << *e.policy.seed;
    out << YAML::Key << "resample_every" << YAML::Value << e.policy.resample_every;
    if (!e.policy.script.empty()) {
      out << YAML::Key << "script" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (double h : e.policy.script) out << h;
      out << YAML::EndSeq;
    }
    out << YAML::EndMap << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "render" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "every" << YAML::Value << s.render.every;
  out << YAML::Key << "apollonius" << YAML::Value << s.render.apollonius;
  out << YAML::Key << "gcp" << YAML::Value << s.render.gcp;
  out << YAML::Key << "wavefront" << YAML::Value << s.render.wavefront;
  out << YAML::EndMap;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace mocg
