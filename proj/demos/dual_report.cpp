// Prints the dual complex of each single-representation preset.

#include <cstdio>

#include "fordspine/dual.hpp"
#include "fordspine/presets.hpp"
#include "fordspine/service.hpp"

using namespace fordspine;

int main() {
  for (const char* name : {"simple", "bumping-t1.2", "sliding-t0.8"}) {
    const FordDomain fd = run_procedure(std::get<Representation>(parse_rep_config(find_preset(name)->config)));
    const DualComplex dc = build_dual(fd);
    std::printf("%s: %zu dual edges, %zu dual faces, %zu dual cells\n", name, dc.dual_edges.size(), dc.dual_faces.size(),
                dc.dual_cells.size());
    for (const DualEdge& e : dc.dual_edges) std::printf("  edge %s / %s\n", e.word.str().c_str(), e.inverse_word.str().c_str());
    for (const DualFace& f : dc.dual_faces) {
      std::printf("  face of edge class %d, sides:", f.edge_class);
      for (int s : f.sides) std::printf(" %s", dc.dual_edges[static_cast<std::size_t>(s)].word.str().c_str());
      std::printf("\n");
    }
    for (const DualCell& c : dc.dual_cells) std::printf("  cell with %d ideal vertices\n", c.ideal_vertices);
    for (const Identification& id : dc.identifications) {
      std::printf("  %d faces over edge class %d glued together\n", id.multiplicity, id.edge_class);
    }
  }
  return 0;
}
