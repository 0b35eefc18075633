#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "fordspine/dual.hpp"

namespace fordspine {

using Json = nlohmann::json;

inline constexpr int kSceneSchemaVersion = 1;

struct CircleRecord {
  Complex center{};
  double radius = 0.0;
  std::string word;
  bool visible = true;
  int face_class = -1;  // -1 for drawn spheres that ended up covered
  int color = 0;        // one color per face pair
  LatticeOffset offset;
  bool operator==(const CircleRecord&) const = default;
};

struct ChordRecord {
  Complex from{}, to{};
  int edge_class = -1;
  std::string key;
  LatticeOffset offset;
  bool operator==(const ChordRecord&) const = default;
};

struct TangencyMarker {
  Complex point{};
  std::string first, second;
  bool operator==(const TangencyMarker&) const = default;
};

struct SceneDiagnostics {
  std::string status = "Terminated";
  std::string reason;
  bool poincare_passed = false;
  std::string tunnel = "HomotopicOnly";
  std::string min_parabolic = "Inconclusive";
  int face_classes = 0;
  int edge_classes = 0;
  int vertex_classes = 0;
  int dual_edges = 0, dual_faces = 0, dual_cells = 0;
  std::vector<std::string> notes;
  bool operator==(const SceneDiagnostics&) const = default;
};

struct ParameterEcho {
  Complex a{}, b{}, c{};
  LatticeOffset gamma_shift;
  bool operator==(const ParameterEcho&) const = default;
};

struct Scene {
  int schema_version = kSceneSchemaVersion;
  std::array<Complex, 4> parallelogram{};
  Rectangle window;
  std::vector<CircleRecord> circles;
  std::vector<ChordRecord> chords;
  std::vector<TangencyMarker> tangencies;
  SceneDiagnostics diagnostics;
  ParameterEcho parameters;

  bool operator==(const Scene& o) const {
    return schema_version == o.schema_version && parallelogram == o.parallelogram && window.x0 == o.window.x0 &&
           window.y0 == o.window.y0 && window.x1 == o.window.x1 && window.y1 == o.window.y1 && circles == o.circles &&
           chords == o.chords && tangencies == o.tangencies && diagnostics == o.diagnostics && parameters == o.parameters;
  }
};

namespace detail {

/// Lattice offsets o for which the segment [p, q] shifted by o meets the window.
inline std::vector<LatticeOffset> segment_translates(const CuspLattice& lat, Complex p, Complex q, const Rectangle& w) {
  std::vector<LatticeOffset> out;
  const Complex mid = 0.5 * (p + q);
  const Complex wmid{(w.x0 + w.x1) / 2.0, (w.y0 + w.y1) / 2.0};
  const double reach = std::hypot(w.x1 - w.x0, w.y1 - w.y0) / 2.0 + std::abs(q - p) / 2.0 + 1e-9;
  for (const LatticeOffset& o : offsets_within(lat, mid - wmid, reach)) {
    const Complex v = lat.vec(o);
    const Complex a = p + v, b = q + v;
    const bool hit = std::max(a.real(), b.real()) >= w.x0 && std::min(a.real(), b.real()) <= w.x1 &&
                     std::max(a.imag(), b.imag()) >= w.y0 && std::min(a.imag(), b.imag()) <= w.y1;
    if (hit) out.push_back(o);
  }
  return out;
}

}  // namespace detail

inline Scene to_scene(const FordDomain& fd, const DualComplex& dual, const Rectangle& window) {
  Scene sc;
  sc.window = window;
  const CuspLattice& lat = fd.rep.lattice;
  if (lat.reduced) sc.parallelogram = {Complex{}, lat.a, lat.a + lat.b, lat.b};

  std::vector<int> color(fd.faces.size(), 0);
  for (std::size_t e = 0; e < dual.dual_edges.size(); ++e) {
    if (dual.dual_edges[e].face >= 0) color[static_cast<std::size_t>(dual.dual_edges[e].face)] = static_cast<int>(e);
    if (dual.dual_edges[e].inverse_face >= 0) color[static_cast<std::size_t>(dual.dual_edges[e].inverse_face)] = static_cast<int>(e);
  }
  auto add_circles = [&](const FaceClass& f, int cls, bool visible, int col) {
    std::vector<CircleRecord> recs;
    for (const IsoSphere& t : translates_in_window(lat, f.sphere, window)) {
      recs.push_back({t.center, t.radius, t.word.str(), visible, cls, col, t.offset - f.sphere.offset});
    }
    std::sort(recs.begin(), recs.end(), [](const CircleRecord& x, const CircleRecord& y) { return x.offset < y.offset; });
    sc.circles.insert(sc.circles.end(), recs.begin(), recs.end());
  };
  for (std::size_t i = 0; i < fd.faces.size(); ++i) add_circles(fd.faces[i], static_cast<int>(i), true, color[i]);
  for (const FaceClass& h : fd.hidden) add_circles(h, -1, false, -1);

  for (const LatticeEdge& e : fd.lattice_edges) {
    const auto& sub = e.arc.visible_subarcs.front();
    const Complex p = e.arc.point(sub.from);
    const Complex q = e.arc.point(sub.to);
    for (const LatticeOffset& o : detail::segment_translates(lat, p, q, window)) {
      sc.chords.push_back({p + lat.vec(o), q + lat.vec(o), e.edge_class, e.key.str(), o});
    }
  }
  for (const Tangency& t : visible_tangencies(fd)) {
    for (const LatticeOffset& o : offsets_within(lat, t.point - Complex{(window.x0 + window.x1) / 2.0, (window.y0 + window.y1) / 2.0},
                                                 std::hypot(window.x1 - window.x0, window.y1 - window.y0))) {
      const Complex z = t.point + lat.vec(o);
      if (window.contains(z)) sc.tangencies.push_back({z, t.first.str(), t.second.str()});
    }
  }

  SceneDiagnostics& d = sc.diagnostics;
  d.status = to_string(fd.status);
  d.reason = fd.reason;
  d.poincare_passed = fd.poincare.passed;
  d.tunnel = to_string(core_tunnel_status(fd).certification);
  d.min_parabolic = to_string(fd.min_parabolic);
  d.face_classes = static_cast<int>(fd.faces.size());
  d.edge_classes = static_cast<int>(fd.edges.size());
  d.vertex_classes = static_cast<int>(fd.vertices.size());
  d.dual_edges = static_cast<int>(dual.dual_edges.size());
  d.dual_faces = static_cast<int>(dual.dual_faces.size());
  d.dual_cells = static_cast<int>(dual.dual_cells.size());
  d.notes = fd.poincare.notes;
  d.notes.insert(d.notes.end(), fd.diagnostics.begin(), fd.diagnostics.end());

  sc.parameters = {fd.rep.a(), fd.rep.b(), fd.rep.c(), fd.rep.gamma_shift};
  return sc;
}

inline Scene to_scene(const FordDomain& fd, const Rectangle& window) { return to_scene(fd, build_dual(fd), window); }

// ---- JSON ----

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex json_complex(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) throw SchemaError(field);
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Writes JSON with every floating-point number at 17 significant digits.
inline void write_json(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write_json(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ',';
        write_json(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      // Keep floats recognizable as floats after a round trip.
      if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump17(const Json& j) {
  std::string out;
  write_json(out, j);
  return out;
}

inline Json scene_to_json(const Scene& sc) {
  Json j;
  j["schema_version"] = sc.schema_version;
  Json par = Json::array();
  for (Complex z : sc.parallelogram) par.push_back(complex_json(z));
  j["parallelogram"] = par;
  j["window"] = Json::array({sc.window.x0, sc.window.y0, sc.window.x1, sc.window.y1});
  Json circles = Json::array();
  for (const auto& c : sc.circles) {
    circles.push_back({{"center", complex_json(c.center)},
                       {"radius", c.radius},
                       {"word", c.word},
                       {"visible", c.visible},
                       {"face_class", c.face_class},
                       {"color", c.color},
                       {"offset", Json::array({c.offset.p, c.offset.q})}});
  }
  j["circles"] = circles;
  Json chords = Json::array();
  for (const auto& c : sc.chords) {
    chords.push_back({{"from", complex_json(c.from)},
                      {"to", complex_json(c.to)},
                      {"edge_class", c.edge_class},
                      {"key", c.key},
                      {"offset", Json::array({c.offset.p, c.offset.q})}});
  }
  j["chords"] = chords;
  Json tang = Json::array();
  for (const auto& t : sc.tangencies) tang.push_back({{"point", complex_json(t.point)}, {"first", t.first}, {"second", t.second}});
  j["tangencies"] = tang;
  const SceneDiagnostics& d = sc.diagnostics;
  j["diagnostics"] = {{"status", d.status},
                      {"reason", d.reason},
                      {"poincare_passed", d.poincare_passed},
                      {"tunnel", d.tunnel},
                      {"min_parabolic", d.min_parabolic},
                      {"face_classes", d.face_classes},
                      {"edge_classes", d.edge_classes},
                      {"vertex_classes", d.vertex_classes},
                      {"dual", {{"edges", d.dual_edges}, {"faces", d.dual_faces}, {"cells", d.dual_cells}}},
                      {"notes", d.notes}};
  j["parameters"] = {{"a", complex_json(sc.parameters.a)},
                     {"b", complex_json(sc.parameters.b)},
                     {"c", complex_json(sc.parameters.c)},
                     {"gamma_shift", Json::array({sc.parameters.gamma_shift.p, sc.parameters.gamma_shift.q})}};
  return j;
}

inline std::string serialize_scene(const Scene& sc) { return dump17(scene_to_json(sc)); }

namespace detail {

inline const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(path.empty() ? name : path + "." + name);
  return j.at(name);
}

inline LatticeOffset json_offset(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) throw SchemaError(path);
  return {j[0].get<int>(), j[1].get<int>()};
}

template <class T>
T get_as(const Json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw SchemaError(path);
  }
}

}  // namespace detail

inline Scene parse_scene(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw SchemaError("$");
  }
  using detail::field;
  using detail::get_as;
  Scene sc;
  sc.schema_version = get_as<int>(field(j, "schema_version", ""), "schema_version");
  if (sc.schema_version != kSceneSchemaVersion) throw SchemaError("schema_version");
  const Json& par = field(j, "parallelogram", "");
  if (!par.is_array() || par.size() != 4) throw SchemaError("parallelogram");
  for (std::size_t i = 0; i < 4; ++i) sc.parallelogram[i] = json_complex(par[i], "parallelogram");
  const Json& w = field(j, "window", "");
  if (!w.is_array() || w.size() != 4) throw SchemaError("window");
  sc.window = {get_as<double>(w[0], "window"), get_as<double>(w[1], "window"), get_as<double>(w[2], "window"), get_as<double>(w[3], "window")};
  for (const Json& c : field(j, "circles", "")) {
    sc.circles.push_back({json_complex(field(c, "center", "circles"), "circles.center"),
                          get_as<double>(field(c, "radius", "circles"), "circles.radius"),
                          get_as<std::string>(field(c, "word", "circles"), "circles.word"),
                          get_as<bool>(field(c, "visible", "circles"), "circles.visible"),
                          get_as<int>(field(c, "face_class", "circles"), "circles.face_class"),
                          get_as<int>(field(c, "color", "circles"), "circles.color"),
                          detail::json_offset(field(c, "offset", "circles"), "circles.offset")});
  }
  for (const Json& c : field(j, "chords", "")) {
    sc.chords.push_back({json_complex(field(c, "from", "chords"), "chords.from"), json_complex(field(c, "to", "chords"), "chords.to"),
                         get_as<int>(field(c, "edge_class", "chords"), "chords.edge_class"),
                         get_as<std::string>(field(c, "key", "chords"), "chords.key"),
                         detail::json_offset(field(c, "offset", "chords"), "chords.offset")});
  }
  for (const Json& t : field(j, "tangencies", "")) {
    sc.tangencies.push_back({json_complex(field(t, "point", "tangencies"), "tangencies.point"),
                             get_as<std::string>(field(t, "first", "tangencies"), "tangencies.first"),
                             get_as<std::string>(field(t, "second", "tangencies"), "tangencies.second")});
  }
  const Json& d = field(j, "diagnostics", "");
  SceneDiagnostics& sd = sc.diagnostics;
  sd.status = get_as<std::string>(field(d, "status", "diagnostics"), "diagnostics.status");
  sd.reason = get_as<std::string>(field(d, "reason", "diagnostics"), "diagnostics.reason");
  sd.poincare_passed = get_as<bool>(field(d, "poincare_passed", "diagnostics"), "diagnostics.poincare_passed");
  sd.tunnel = get_as<std::string>(field(d, "tunnel", "diagnostics"), "diagnostics.tunnel");
  sd.min_parabolic = get_as<std::string>(field(d, "min_parabolic", "diagnostics"), "diagnostics.min_parabolic");
  sd.face_classes = get_as<int>(field(d, "face_classes", "diagnostics"), "diagnostics.face_classes");
  sd.edge_classes = get_as<int>(field(d, "edge_classes", "diagnostics"), "diagnostics.edge_classes");
  sd.vertex_classes = get_as<int>(field(d, "vertex_classes", "diagnostics"), "diagnostics.vertex_classes");
  const Json& dual = field(d, "dual", "diagnostics");
  sd.dual_edges = get_as<int>(field(dual, "edges", "diagnostics.dual"), "diagnostics.dual.edges");
  sd.dual_faces = get_as<int>(field(dual, "faces", "diagnostics.dual"), "diagnostics.dual.faces");
  sd.dual_cells = get_as<int>(field(dual, "cells", "diagnostics.dual"), "diagnostics.dual.cells");
  sd.notes = get_as<std::vector<std::string>>(field(d, "notes", "diagnostics"), "diagnostics.notes");
  const Json& p = field(j, "parameters", "");
  sc.parameters = {json_complex(field(p, "a", "parameters"), "parameters.a"), json_complex(field(p, "b", "parameters"), "parameters.b"),
                   json_complex(field(p, "c", "parameters"), "parameters.c"),
                   detail::json_offset(field(p, "gamma_shift", "parameters"), "parameters.gamma_shift")};
  return sc;
}

}  // namespace fordspine
