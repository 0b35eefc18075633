#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "fordspine/http.hpp"

using namespace fordspine;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string preset;
  std::string out_dir = ".";
  std::vector<double> window;
  int max_faces = Budget{}.max_faces;
  int max_iter = Budget{}.max_iterations;
  double eps_geom = Tolerances{}.geom;
  int samples = 0;
  int port = 8080;
  std::string host = "127.0.0.1";
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

std::string config_text(const Options& o) {
  if (!o.preset.empty()) {
    const Preset* p = find_preset(o.preset);
    if (p == nullptr) throw ConfigError("unknown preset " + o.preset);
    return p->config;
  }
  if (o.input.empty()) throw ConfigError("one of --input or --preset is required");
  return read_file(o.input);
}

Tolerances tolerances(const Options& o) {
  if (!(o.eps_geom > 0.0)) throw ConfigError("--eps-geom must be positive");
  Tolerances tol;
  tol.geom = o.eps_geom;
  return tol;
}

Budget budget(const Options& o) {
  if (o.max_faces <= 0 || o.max_iter <= 0) throw ConfigError("budgets must be positive");
  return Budget{o.max_faces, o.max_iter, std::nullopt};
}

Rectangle window(const Options& o) {
  if (o.window.empty()) return Rectangle{};
  if (o.window.size() != 4) throw ConfigError("--window takes x0,y0,x1,y1");
  const Rectangle r{o.window[0], o.window[1], o.window[2], o.window[3]};
  if (r.empty()) throw ConfigError("--window is empty");
  return r;
}

Representation load_representation(const Options& o, const Tolerances& tol) {
  RepConfig cfg = parse_rep_config(config_text(o), tol);
  if (!std::holds_alternative<Representation>(cfg)) throw ConfigError("expected a representation, got a path");
  return std::get<Representation>(cfg);
}

void print_domain(const FordDomain& fd) {
  std::printf("status: %s%s%s\n", to_string(fd.status), fd.reason.empty() ? "" : " (", fd.reason.empty() ? "" : (fd.reason + ")").c_str());
  std::printf("faces:");
  for (const FaceClass& f : fd.faces) std::printf(" %s", f.core.str().c_str());
  std::printf("\nedge classes: %zu, vertex classes: %zu\n", fd.edges.size(), fd.vertices.size());
  std::printf("poincare: %s\n", fd.poincare.passed ? "passed" : "failed");
}

int cmd_compute(const Options& o) {
  const Tolerances tol = tolerances(o);
  const Rectangle w = window(o);
  const FordDomain fd = run_procedure(load_representation(o, tol), w, budget(o), tol);
  const Scene sc = to_scene(fd, w);
  fs::create_directories(o.out_dir);
  write_file(fs::path(o.out_dir) / "scene.json", serialize_scene(sc));
  write_file(fs::path(o.out_dir) / "scene.svg", to_svg(sc));
  print_domain(fd);
  return exit_code(fd);
}

int cmd_verify(const Options& o) {
  const Tolerances tol = tolerances(o);
  const FordDomain fd = run_procedure(load_representation(o, tol), window(o), budget(o), tol);
  print_domain(fd);
  std::printf("pairings: %s\n", fd.poincare.pairings_ok ? "ok" : "mismatch");
  for (const EdgeReport& r : fd.poincare.edge_reports) {
    std::printf("edge cycle:");
    for (const auto& w : r.cycle_words) std::printf(" %s", w.c_str());
    std::printf("  monodromy %.3e  angle sum - 2pi %.3e%s\n", r.monodromy_deviation, r.angle_sum - 2.0 * std::numbers::pi,
                r.closed ? "" : "  (open)");
  }
  for (const std::string& n : fd.poincare.notes) std::printf("note: %s\n", n.c_str());
  return exit_code(fd);
}

int cmd_oracle_check(const Options& o) {
  const Tolerances tol = tolerances(o);
  const Representation rep = load_representation(o, tol);
  const FordDomain fd = run_procedure(rep, window(o), budget(o), tol);
  print_domain(fd);
  if (fd.status != RunStatus::Terminated) return exit_code(fd);
  const int bound = fd.max_weight() + 2;
  const OracleResult oracle = brute_force_oracle(rep, bound, tol);
  std::vector<std::string> engine, brute;
  for (const FaceClass& f : fd.faces) engine.push_back(f.core.str());
  for (const GroupWord& f : oracle.faces) brute.push_back(f.str());
  std::sort(engine.begin(), engine.end());
  std::sort(brute.begin(), brute.end());
  std::printf("oracle: weight bound %d, %zu words enumerated, %zu faces\n", bound, oracle.enumerated, brute.size());
  if (engine != brute) {
    std::printf("MISMATCH\n  engine:");
    for (const auto& s : engine) std::printf(" %s", s.c_str());
    std::printf("\n  oracle:");
    for (const auto& s : brute) std::printf(" %s", s.c_str());
    std::printf("\n");
    return 4;
  }
  std::printf("oracle agrees\n");
  return exit_code(fd);
}

int cmd_sweep(const Options& o) {
  const Tolerances tol = tolerances(o);
  RepConfig cfg = parse_rep_config(config_text(o), tol);
  if (!std::holds_alternative<RepPath>(cfg)) throw ConfigError("expected a path config with t_range");
  RepPath path = std::get<RepPath>(cfg);
  if (o.samples != 0) {
    if (o.samples < 2) throw ConfigError("--samples must be at least 2");
    path.samples = o.samples;
  }
  const Budget b = budget(o);
  const Rectangle w = window(o);
  const SweepResult r = sweep(path, b, tol);
  fs::create_directories(o.out_dir);
  write_file(fs::path(o.out_dir) / "timeline.json", dump17(timeline_to_json(r)));
  for (std::size_t k = 0; k < r.events.size(); ++k) {
    const PathEvent& e = r.events[k];
    std::printf("event %zu: %s in [%.9f, %.9f]\n", k, to_string(e.kind), e.t_lo, e.t_hi);
    const std::pair<const char*, double> sides[] = {{"before", e.t_before}, {"after", e.t_after}};
    for (const auto& [label, t] : sides) {
      const SweepSample s = run_sample(path, t, b, tol);
      if (!s.domain) continue;
      char name[64];
      std::snprintf(name, sizeof name, "event_%02zu_%s.svg", k, label);
      write_file(fs::path(o.out_dir) / name, to_svg(to_scene(*s.domain, w)));
    }
  }
  std::printf("samples: %zu, events: %zu\n", r.timeline.size(), r.events.size());
  bool indiscrete = false, all_ok = r.violations.empty();
  for (const DomainSummary& s : r.timeline) {
    if (s.valid && s.status == RunStatus::IndiscreteSignal) indiscrete = true;
    if (!s.valid || s.status != RunStatus::Terminated || !s.passed) all_ok = false;
  }
  for (const std::string& v : r.violations) std::printf("violation: %s\n", v.c_str());
  if (indiscrete) return 2;
  return all_ok ? 0 : 3;
}

int cmd_serve(const Options& o) {
  ServiceOptions so;
  so.tol = tolerances(o);
  so.budget = budget(o);
  so.window = window(o);
  httplib::Server server;
  register_routes(server, so);
  std::printf("listening on http://%s:%d\n", o.host.c_str(), o.port);
  std::fflush(stdout);
  if (!server.listen(o.host.c_str(), o.port)) {
    std::fprintf(stderr, "cannot bind %s:%d\n", o.host.c_str(), o.port);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ford domains for (1;2)-compression body representations"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "representation or path config (JSON)");
    sub->add_option("--preset", o.preset, "named configuration instead of --input");
    sub->add_option("--window", o.window, "x0,y0,x1,y1")->delimiter(',')->expected(4);
    sub->add_option("--max-faces", o.max_faces, "face class budget");
    sub->add_option("--max-iter", o.max_iter, "iteration budget");
    sub->add_option("--eps-geom", o.eps_geom, "geometric tolerance");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute a Ford domain, write scene.json and scene.svg");
  common(compute);
  compute->add_option("--out-dir", o.out_dir);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a path, write timeline.json and event snapshots");
  common(sweep_cmd);
  sweep_cmd->add_option("--out-dir", o.out_dir);
  sweep_cmd->add_option("--samples", o.samples, "number of samples (overrides the config)");
  CLI::App* oracle = app.add_subcommand("oracle-check", "compare against brute-force enumeration");
  common(oracle);
  CLI::App* verify = app.add_subcommand("verify", "print the Poincare verification report");
  common(verify);
  CLI::App* serve = app.add_subcommand("serve", "local HTTP service");
  common(serve);
  serve->add_option("--port", o.port);
  serve->add_option("--host", o.host);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(o);
    if (sweep_cmd->parsed()) return cmd_sweep(o);
    if (oracle->parsed()) return cmd_oracle_check(o);
    if (verify->parsed()) return cmd_verify(o);
    if (serve->parsed()) return cmd_serve(o);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const FordError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
