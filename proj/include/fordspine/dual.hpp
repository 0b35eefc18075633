#pragma once

#include <map>
#include <vector>

#include "fordspine/ford_engine.hpp"

namespace fordspine {

/// Vertical geodesic through the center of a face, one per face pair {g, g^{-1}}.
struct DualEdge {
  GroupWord word;          // the smaller core of the pair
  GroupWord inverse_word;
  Complex center{};
  int face = -1, inverse_face = -1;
};

/// Ideal polygon dual to an edge class. `sides` lists the dual edge of each
/// face met around the cycle; `owners` are the dual edges of the two spheres
/// of the first Gamma_inf edge.
struct DualFace {
  int edge_class = -1;
  std::vector<int> sides;
  std::pair<int, int> owners{-1, -1};
};

/// Dual of a vertex class: one ideal vertex per Gamma_inf vertex in the class.
/// `face_slots[c]` counts the faces of the cell lying over edge class c.
struct DualCell {
  int vertex_class = -1;
  int ideal_vertices = 0;
  std::map<int, int> face_slots;
};

/// Faces of a dual cell glued to each other by the face pairings.
struct Identification {
  int cell = -1;
  int edge_class = -1;
  int multiplicity = 0;
};

struct DualComplex {
  std::vector<DualEdge> dual_edges;
  std::vector<DualFace> dual_faces;
  std::vector<DualCell> dual_cells;
  std::vector<Identification> identifications;
};

inline DualComplex build_dual(const FordDomain& fd) {
  DualComplex dc;
  std::vector<int> edge_of_face(fd.faces.size(), -1);
  for (std::size_t i = 0; i < fd.faces.size(); ++i) {
    if (edge_of_face[i] >= 0) continue;
    const FaceClass& f = fd.faces[i];
    DualEdge de;
    de.word = f.core;
    de.face = static_cast<int>(i);
    de.center = f.sphere.center;
    de.inverse_face = f.inverse;
    de.inverse_word = f.inverse >= 0 ? fd.faces[static_cast<std::size_t>(f.inverse)].core : f.word.inverse().core();
    edge_of_face[i] = static_cast<int>(dc.dual_edges.size());
    if (f.inverse >= 0) edge_of_face[static_cast<std::size_t>(f.inverse)] = edge_of_face[i];
    dc.dual_edges.push_back(std::move(de));
  }
  auto dual_edge_of = [&](const GroupWord& w) {
    const int idx = fd.face_index(w.core());
    return idx < 0 ? -1 : edge_of_face[static_cast<std::size_t>(idx)];
  };

  for (std::size_t c = 0; c < fd.edges.size(); ++c) {
    const EdgeClass& ec = fd.edges[c];
    DualFace df;
    df.edge_class = static_cast<int>(c);
    for (const GroupWord& w : ec.out_words) df.sides.push_back(dual_edge_of(w));
    df.owners = {dual_edge_of(ec.in_words.front()), dual_edge_of(ec.out_words.front())};
    dc.dual_faces.push_back(std::move(df));
  }

  for (std::size_t v = 0; v < fd.vertices.size(); ++v) {
    DualCell cell;
    cell.vertex_class = static_cast<int>(v);
    cell.ideal_vertices = static_cast<int>(fd.vertices[v].members.size());
    std::map<int, int> ends;
    for (const LatticeEdge& e : fd.lattice_edges) {
      for (int end : e.end_vertex) {
        if (end >= 0 && fd.lattice_vertices[static_cast<std::size_t>(end)].vertex_class == static_cast<int>(v) && e.edge_class >= 0) {
          ++ends[e.edge_class];
        }
      }
    }
    // Each triangular face of the cell has one corner at each of three ideal vertices.
    for (const auto& [edge_class, count] : ends) cell.face_slots[edge_class] = count / 3;
    for (const auto& [edge_class, slots] : cell.face_slots) {
      if (slots >= 2) dc.identifications.push_back({static_cast<int>(v), edge_class, slots});
    }
    dc.dual_cells.push_back(std::move(cell));
  }
  return dc;
}

enum class Certification { DualCertified, HomotopicOnly };

inline const char* to_string(Certification c) { return c == Certification::DualCertified ? "DualCertified" : "HomotopicOnly"; }

struct TunnelStatus {
  bool gamma_visible = false;
  Certification certification = Certification::HomotopicOnly;
  bool pending_path = true;  // isotopy grade needs a path from the simple structure
};

inline TunnelStatus core_tunnel_status(const FordDomain& fd) {
  TunnelStatus ts;
  ts.gamma_visible = fd.face_index(GroupWord::gamma(1)) >= 0 || fd.face_index(GroupWord::gamma(-1)) >= 0;
  ts.certification = ts.gamma_visible ? Certification::DualCertified : Certification::HomotopicOnly;
  return ts;
}

}  // namespace fordspine
