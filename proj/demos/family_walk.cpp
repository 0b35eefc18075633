// Walks gamma_t = [[-1 + i t, -1], [1, 0]] from t = 2 down to 0.8 and prints
// the visible faces at a few parameters, then the moves found by the sweep.

#include <cstdio>

#include "fordspine/path.hpp"
#include "fordspine/presets.hpp"
#include "fordspine/service.hpp"

using namespace fordspine;

int main() {
  const RepPath path = std::get<RepPath>(parse_rep_config(find_preset("tunnel-path")->config));

  for (double t : {2.0, 1.5, 1.2, 1.0, 0.8}) {
    const FordDomain fd = run_procedure(path.at(t));
    std::printf("t = %.2f  %-12s faces:", t, to_string(fd.status));
    for (const FaceClass& f : fd.faces) std::printf(" %s", f.core.str().c_str());
    std::printf("  edge classes: %zu\n", fd.edges.size());
  }

  const SweepResult r = sweep(path);
  for (const PathEvent& e : r.events) std::printf("%s between t = %.9f and %.9f\n", to_string(e.kind), e.t_before, e.t_after);
  const TunnelPathResult cert = certify_timeline(r.timeline);
  std::printf("core tunnel along the path: %s\n", cert.certified ? "certified" : "not certified");
  return 0;
}
