#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "fordspine/config.hpp"
#include "fordspine/oracle.hpp"
#include "fordspine/presets.hpp"
#include "fordspine/svg.hpp"

namespace fordspine {

struct ServiceOptions {
  Rectangle window;
  Budget budget;
  Tolerances tol;
  double time_limit_seconds = 10.0;
};

struct HttpResult {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// 0 for a verified domain, 2 for an indiscreteness signal, 3 otherwise.
inline int exit_code(const FordDomain& fd) {
  if (fd.status == RunStatus::IndiscreteSignal) return 2;
  if (fd.status == RunStatus::Terminated && fd.poincare.passed) return 0;
  return 3;
}

inline Budget with_deadline(Budget b, double seconds) {
  if (seconds > 0.0) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
  return b;
}

/// The scene JSON shared by the CLI and the service.
inline std::string compute_scene_json(const FordDomain& fd, const Rectangle& window) { return serialize_scene(to_scene(fd, window)); }

inline Json summary_to_json(const DomainSummary& s) {
  return {{"t", s.t},
          {"valid", s.valid},
          {"status", s.valid ? to_string(s.status) : "Invalid"},
          {"reason", s.reason},
          {"faces", s.faces},
          {"edge_classes", s.edge_classes},
          {"vertex_classes", s.vertex_classes},
          {"crossings", static_cast<int>(s.crossings.size())},
          {"poincare_passed", s.passed},
          {"gamma_visible", s.gamma_visible}};
}

inline Json event_to_json(const PathEvent& e) {
  return {{"kind", to_string(e.kind)}, {"bracket", Json::array({e.t_lo, e.t_hi})}, {"witnesses", e.witnesses}};
}

inline Json timeline_to_json(const SweepResult& r) {
  Json j;
  j["schema_version"] = kSceneSchemaVersion;
  Json samples = Json::array();
  for (const auto& s : r.timeline) samples.push_back(summary_to_json(s));
  j["samples"] = samples;
  Json events = Json::array();
  for (const auto& e : r.events) events.push_back(event_to_json(e));
  j["events"] = events;
  j["violations"] = r.violations;
  Json tunnel;
  try {
    const TunnelPathResult t = certify_timeline(r.timeline);
    tunnel = {{"certification", t.certified ? "Certified" : "NotCertified"},
              {"start_simple", t.start_simple},
              {"witness_sample", t.witness_sample},
              {"samples", t.samples}};
  } catch (const PathBroken& e) {
    tunnel = {{"certification", "PathBroken"}, {"broken_sample", e.sample()}};
  }
  j["tunnel"] = tunnel;
  return j;
}

namespace detail {

inline HttpResult error_result(int status, const std::string& kind, const std::string& message, const std::string& field = {}) {
  Json j = {{"error", kind}, {"message", message}};
  if (!field.empty()) j["field"] = field;
  return {status, dump17(j)};
}

/// Request body, with {"preset": name} expanded.
inline Json request_json(const std::string& body) {
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) throw SchemaError("$");
  Json j = parse_text(body);
  if (!j.is_object()) throw SchemaError("$");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw SchemaError("preset");
    const Preset* p = find_preset(j["preset"].get<std::string>());
    if (p == nullptr) throw SchemaError("preset");
    Json expanded = parse_text(p->config);
    if (j.contains("window")) expanded["window"] = j["window"];
    return expanded;
  }
  return j;
}

inline Rectangle request_window(const Json& j, const Rectangle& fallback) {
  if (!j.contains("window")) return fallback;
  const Json& w = j["window"];
  if (!w.is_array() || w.size() != 4) throw SchemaError("window");
  for (const Json& v : w) {
    if (!v.is_number()) throw SchemaError("window");
  }
  const Rectangle r{w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
  if (r.empty()) throw SchemaError("window");
  return r;
}

template <class F>
HttpResult guarded(F&& f) {
  try {
    return f();
  } catch (const SchemaError& e) {
    return error_result(400, "schema", e.what(), e.field());
  } catch (const NotParabolic& e) {
    return error_result(422, "NotParabolic", e.what());
  } catch (const NotLoxodromic& e) {
    return error_result(422, "NotLoxodromic", e.what());
  } catch (const DegenerateLattice& e) {
    return error_result(422, "DegenerateLattice", e.what());
  } catch (const FordError& e) {
    return error_result(422, "FordError", e.what());
  }
}

}  // namespace detail

/// POST /api/compute: representation config (or preset) to scene JSON.
/// Indiscreteness signals are results and come back with 200.
inline HttpResult handle_compute(const std::string& body, const ServiceOptions& opts = {}) {
  return detail::guarded([&] {
    const Json j = detail::request_json(body);
    if (j.contains("t_range")) throw SchemaError("t_range");
    const Rectangle window = detail::request_window(j, opts.window);
    const Representation rep = representation_from_json(j, opts.tol);
    const FordDomain fd = run_procedure(rep, window, with_deadline(opts.budget, opts.time_limit_seconds), opts.tol);
    return HttpResult{200, compute_scene_json(fd, window)};
  });
}

/// POST /api/sweep: path config (or preset) to timeline JSON.
inline HttpResult handle_sweep(const std::string& body, const ServiceOptions& opts = {}) {
  return detail::guarded([&] {
    const Json j = detail::request_json(body);
    RepPath path = path_from_json(j);
    (void)path.at(path.t_start, opts.tol);
    const SweepResult r = sweep(path, with_deadline(opts.budget, opts.time_limit_seconds), opts.tol);
    return HttpResult{200, dump17(timeline_to_json(r))};
  });
}

inline HttpResult handle_presets() {
  Json list = Json::array();
  for (const Preset& p : presets()) {
    const Json cfg = Json::parse(p.config);
    list.push_back({{"name", p.name},
                    {"description", p.description},
                    {"kind", cfg.contains("t_range") ? "path" : "representation"},
                    {"config", cfg}});
  }
  return {200, dump17(Json{{"presets", list}})};
}

inline HttpResult handle_health() { return {200, dump17(Json{{"status", "ok"}, {"schema_version", kSceneSchemaVersion}})}; }

}  // namespace fordspine
