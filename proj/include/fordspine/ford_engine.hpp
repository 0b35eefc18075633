#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fordspine/representation.hpp"
#include "fordspine/visibility.hpp"

namespace fordspine {

struct Budget {
  int max_faces = 256;
  int max_iterations = 20000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class RunStatus { Terminated, BudgetExhausted, IndiscreteSignal, Unresolved };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Terminated: return "Terminated";
    case RunStatus::BudgetExhausted: return "BudgetExhausted";
    case RunStatus::IndiscreteSignal: return "IndiscreteSignal";
    case RunStatus::Unresolved: return "Unresolved";
  }
  return "?";
}

enum class MinParabolic { Certified, Inconclusive };

inline const char* to_string(MinParabolic m) { return m == MinParabolic::Certified ? "Certified" : "Inconclusive"; }

/// A visible face class mod Gamma_inf.
struct FaceClass {
  GroupWord core;     // double coset label
  GroupWord word;     // core * mu, the translate centered in the fundamental parallelogram
  MoebiusMap element;
  IsoSphere sphere;
  int inverse = -1;   // index of the class of word^{-1}, -1 if absent
  double exposed_area = 0.0;
  bool marginal = false;
};

/// Label of a Gamma_inf class of edges: both cores plus the offset of the
/// second sphere relative to the first, oriented canonically.
struct EdgeKey {
  GroupWord x, y;
  LatticeOffset rel;

  std::string str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "|%d,%d", rel.p, rel.q);
    return x.str() + "|" + y.str() + buf;
  }
  bool operator==(const EdgeKey& o) const { return x == o.x && y == o.y && rel == o.rel; }
  bool operator<(const EdgeKey& o) const {
    if (!(x == o.x)) return x < o.x;
    if (!(y == o.y)) return y < o.y;
    return rel < o.rel;
  }
};

/// Returns the canonical key and whether (x, y) had to be swapped.
inline std::pair<EdgeKey, bool> edge_key(const GroupWord& core_x, LatticeOffset off_x, const GroupWord& core_y, LatticeOffset off_y) {
  EdgeKey k{core_x, core_y, off_y - off_x};
  bool flipped = false;
  if (core_y < core_x) {
    std::swap(k.x, k.y);
    k.rel = -k.rel;
    flipped = true;
  } else if (core_x == core_y && k.rel < -k.rel) {
    k.rel = -k.rel;
    flipped = true;
  }
  return {k, flipped};
}

inline std::pair<EdgeKey, bool> edge_key(const GroupWord& wx, const GroupWord& wy) {
  return edge_key(wx.core(), -wx.trailing_lattice(), wy.core(), -wy.trailing_lattice());
}

/// One Gamma_inf class of visible edges, realized on the representative
/// sphere of `face_x` and the translate of `face_y` by `offset_y`.
struct LatticeEdge {
  EdgeKey key;
  int face_x = -1, face_y = -1;
  LatticeOffset offset_y;
  LatticeOffset window_offset;  // reduced offset from the nearest translate
  EdgeArc arc;
  GroupWord word_x, word_y;
  int end_vertex[2] = {-1, -1};  // lattice vertex at each end, -1 on C
  int edge_class = -1;
};

struct VertexIncidence {
  int face = -1;
  LatticeOffset offset;
};

/// A vertex of the domain mod Gamma_inf, reduced into the fundamental parallelogram.
struct LatticeVertex {
  HalfSpacePoint point;
  std::vector<VertexIncidence> incident;
  int vertex_class = -1;
};

/// Endpoint of a visible edge on the boundary C.
struct Crossing {
  EdgeKey key;
  int end = 0;
  Complex point{};
};

struct EdgeClass {
  std::vector<GroupWord> in_words, out_words;  // cycle states
  std::vector<int> lattice_edges;              // visited, in cycle order
  LatticeOffset closing;                       // sigma with state_k = state_0 * sigma
  MoebiusMap monodromy;
  GroupWord monodromy_word;
  double monodromy_deviation = 0.0;  // distance to +-Id over the product of the factor scales
  double angle_sum = 0.0;
  int steps() const { return static_cast<int>(in_words.size()); }
};

struct VertexClass {
  std::vector<int> members;  // lattice vertex indices
};

struct EdgeReport {
  std::vector<std::string> cycle_words;
  double monodromy_deviation = 0.0;
  double angle_sum = 0.0;
  bool closed = true;
};

struct VerificationReport {
  bool pairings_ok = true;
  std::vector<EdgeReport> edge_reports;
  bool passed = false;
  std::vector<std::string> notes;
};

struct IntersectionRecord {
  GroupWord xi, w;
  LatticeOffset window;  // (epsilon, delta) relative to the nearest translate
};

struct FordDomain {
  Representation rep;
  Tolerances tol;
  Rectangle window;
  RunStatus status = RunStatus::Terminated;
  std::string reason;
  std::vector<FaceClass> faces;
  std::vector<FaceClass> hidden;  // drawn, then covered by later faces
  std::vector<LatticeEdge> lattice_edges;
  std::vector<LatticeVertex> lattice_vertices;
  std::vector<Crossing> crossings;
  std::vector<EdgeClass> edges;
  std::vector<VertexClass> vertices;
  VerificationReport poincare;
  MinParabolic min_parabolic = MinParabolic::Inconclusive;
  ShimizuResult shimizu;
  std::vector<IntersectionRecord> intersections;
  int iterations = 0;
  std::vector<std::string> diagnostics;

  int face_index(const GroupWord& core) const {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].core == core) return static_cast<int>(i);
    }
    return -1;
  }
  std::vector<IsoSphere> face_spheres() const {
    std::vector<IsoSphere> out;
    for (const auto& f : faces) out.push_back(f.sphere);
    return out;
  }
  int max_weight() const {
    int m = 0;
    for (const auto& f : faces) m = std::max(m, f.core.weight());
    return m;
  }
  int edge_index(const EdgeKey& k) const {
    for (std::size_t i = 0; i < lattice_edges.size(); ++i) {
      if (lattice_edges[i].key == k) return static_cast<int>(i);
    }
    return -1;
  }
};

/// The face class record for an arbitrary word of a double coset.
inline FaceClass make_face(const GroupWord& word, const Representation& rep, const Tolerances& tol) {
  FaceClass f;
  f.core = word.core();
  const MoebiusMap core_map = evaluate_word(f.core, rep);
  const IsoSphere core_sphere = isometric_sphere(core_map, tol);
  const LatticeOffset o = parallelogram_offset(rep.lattice, core_sphere.center);
  f.word = f.core * GroupWord::lattice(-o);
  f.element = evaluate_word(f.word, rep);
  f.sphere = isometric_sphere(f.element, tol);
  return f;
}

/// Matrix of any word whose core is a face class, built from the stored face
/// matrix: lambda * core * mu = T(lambda) M_rep T(mu - mu_rep).
inline MoebiusMap word_matrix(const FordDomain& fd, const GroupWord& w) {
  const int idx = fd.face_index(w.core());
  if (idx < 0) throw OpenCycle("no face class for " + w.str());
  const FaceClass& f = fd.faces[static_cast<std::size_t>(idx)];
  const LatticeOffset lambda = w.leading_lattice();
  const LatticeOffset mu = w.trailing_lattice();
  const LatticeOffset mu_rep = f.word.trailing_lattice();
  return compose(compose(lattice_element(fd.rep.lattice, lambda), f.element), lattice_element(fd.rep.lattice, mu - mu_rep));
}

inline IsoSphere word_sphere(const FordDomain& fd, const GroupWord& w) {
  const int idx = fd.face_index(w.core());
  if (idx < 0) throw OpenCycle("no face class for " + w.str());
  const FaceClass& f = fd.faces[static_cast<std::size_t>(idx)];
  return translate(f.sphere, fd.rep.lattice, f.word.trailing_lattice() - w.trailing_lattice());
}

namespace detail {

/// Distance between z1 and the closest translate of z2.
inline double lattice_distance(const CuspLattice& lat, Complex z1, Complex z2) {
  const LatticeOffset r = nearest_translate(lat, z1, z2);
  return std::abs(z1 - (z2 + lat.reduced_vec(r)));
}

inline Complex reduce_point(const CuspLattice& lat, Complex z) { return z + lat.vec(parallelogram_offset(lat, z)); }

constexpr double kVertexMatch = 1e-6;

}  // namespace detail

/// Visible edges, vertices and boundary crossings of the current face set.
inline void analyze_arrangement(FordDomain& fd) {
  fd.lattice_edges.clear();
  fd.lattice_vertices.clear();
  fd.crossings.clear();
  const CuspLattice& lat = fd.rep.lattice;
  const Tolerances& tol = fd.tol;
  const auto spheres = fd.face_spheres();
  std::set<EdgeKey> seen;

  auto add_vertex = [&](Complex z, double height) -> int {
    const Complex zr = detail::reduce_point(lat, z);
    for (std::size_t k = 0; k < fd.lattice_vertices.size(); ++k) {
      const auto& v = fd.lattice_vertices[k];
      if (detail::lattice_distance(lat, zr, v.point.z) < detail::kVertexMatch && std::abs(v.point.height - height) < detail::kVertexMatch) {
        return static_cast<int>(k);
      }
    }
    LatticeVertex v;
    v.point = {zr, height};
    // Incident spheres: equal power -height^2 at zr.
    for (std::size_t k = 0; k < spheres.size(); ++k) {
      for (const LatticeOffset& o : offsets_within(lat, spheres[k].center - zr, spheres[k].radius + tol.tangent)) {
        const IsoSphere t = translate(spheres[k], lat, o);
        if (std::abs(t.power(zr) + height * height) < 1e-7) v.incident.push_back({static_cast<int>(k), o});
      }
    }
    fd.lattice_vertices.push_back(std::move(v));
    return static_cast<int>(fd.lattice_vertices.size()) - 1;
  };

  for (std::size_t i = 0; i < spheres.size(); ++i) {
    for (std::size_t j = i; j < spheres.size(); ++j) {
      const auto offsets = offsets_within(lat, spheres[j].center - spheres[i].center, spheres[i].radius + spheres[j].radius + tol.tangent);
      for (const LatticeOffset& o : offsets) {
        if (i == j && o.is_zero()) continue;
        const IsoSphere t = translate(spheres[j], lat, o);
        const auto [key, flipped] = edge_key(fd.faces[i].core, spheres[i].offset, fd.faces[j].core, t.offset);
        if (flipped || seen.count(key) != 0) continue;
        if (sphere_relation(spheres[i], t, tol) != SphereRelation::TwoPointIntersection) continue;
        EdgeArc arc = visible_edge(spheres[i], t, spheres, lat, tol);
        if (!arc.visible()) continue;
        seen.insert(key);
        LatticeEdge e;
        e.key = key;
        e.face_x = static_cast<int>(i);
        e.face_y = static_cast<int>(j);
        e.offset_y = o;
        const LatticeOffset nearest = nearest_translate(lat, spheres[i].center, spheres[j].center);
        e.window_offset = lat.to_reduced(o) - nearest;
        e.word_x = fd.faces[i].word;
        e.word_y = t.word;
        const auto& sub = arc.visible_subarcs.front();
        for (int end = 0; end < 2; ++end) {
          const double u = end == 0 ? sub.from : sub.to;
          const int cut = end == 0 ? sub.cut_from : sub.cut_to;
          const Complex z = arc.point(u);
          if (cut < 0) {
            fd.crossings.push_back({key, end, z});
          } else {
            e.end_vertex[end] = add_vertex(z, arc.first.height(z));
          }
        }
        e.arc = std::move(arc);
        fd.lattice_edges.push_back(std::move(e));
      }
    }
  }
}

/// Walks the chain-rule cycle of a visible edge.
///
/// State (in, out) is the edge I(in) cap I(out); applying `out` carries it to
/// I(out^{-1}) cap I(in out^{-1}). The walk closes once the state is a
/// Gamma_inf translate (in sigma, out sigma) of the start, and the monodromy
/// is sigma times the accumulated product.
inline EdgeClass edge_cycle(const FordDomain& fd, int lattice_edge, int max_steps = 12) {
  const LatticeEdge& start = fd.lattice_edges.at(static_cast<std::size_t>(lattice_edge));
  EdgeClass ec;
  const GroupWord x = start.word_x;
  const GroupWord y = start.word_y;
  GroupWord in = x, out = y;
  GroupWord t_word;
  MoebiusMap t_map;
  double scale = 1.0;
  for (int step = 0; step < max_steps; ++step) {
    const auto [key, flipped] = edge_key(in, out);
    (void)flipped;
    const int idx = fd.edge_index(key);
    if (idx < 0) throw OpenCycle("edge " + in.str() + " / " + out.str() + " is not visible");
    ec.in_words.push_back(in);
    ec.out_words.push_back(out);
    ec.lattice_edges.push_back(idx);
    ec.angle_sum += dihedral_angle(word_sphere(fd, in), word_sphere(fd, out), fd.tol);
    t_word = out * t_word;
    const MoebiusMap m = word_matrix(fd, out);
    t_map = compose(m, t_map);
    scale *= std::max(1.0, m.max_entry());
    const GroupWord next_in = out.inverse();
    const GroupWord next_out = in * out.inverse();
    in = next_in;
    out = next_out;
    const GroupWord sx = x.inverse() * in;
    const GroupWord sy = y.inverse() * out;
    if (sx.in_cusp_group() && sx == sy) {
      ec.closing = sx.trailing_lattice();
      const MoebiusMap sigma = lattice_element(fd.rep.lattice, ec.closing);
      ec.monodromy = compose(sigma, t_map);
      ec.monodromy_word = GroupWord::lattice(ec.closing) * t_word;
      // Rounding in a product grows with the entries of its factors; long words have entries in the thousands.
      ec.monodromy_deviation = ec.monodromy.distance_to_identity() / (scale * std::max(1.0, sigma.max_entry()));
      return ec;
    }
  }
  throw OpenCycle("no closure within " + std::to_string(max_steps) + " steps from " + x.str() + " / " + y.str());
}

/// Edge classes mod Gamma as cycle orbits of the visible Gamma_inf edges.
inline void analyze_cycles(FordDomain& fd) {
  fd.edges.clear();
  for (auto& e : fd.lattice_edges) e.edge_class = -1;
  for (std::size_t i = 0; i < fd.lattice_edges.size(); ++i) {
    if (fd.lattice_edges[i].edge_class >= 0) continue;
    EdgeClass ec = edge_cycle(fd, static_cast<int>(i));
    const int id = static_cast<int>(fd.edges.size());
    for (int le : ec.lattice_edges) fd.lattice_edges[static_cast<std::size_t>(le)].edge_class = id;
    fd.edges.push_back(std::move(ec));
  }
}

/// Vertex classes mod Gamma: each incident face element carries a vertex to
/// another vertex; classes are the connected components.
inline void analyze_vertex_classes(FordDomain& fd) {
  const std::size_t n = fd.lattice_vertices.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  const CuspLattice& lat = fd.rep.lattice;
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVertex& v = fd.lattice_vertices[i];
    for (const VertexIncidence& inc : v.incident) {
      const FaceClass& f = fd.faces[static_cast<std::size_t>(inc.face)];
      const MoebiusMap m = compose(f.element, lattice_element(lat, -inc.offset));
      const HalfSpacePoint img = m.apply(v.point);
      const Complex zr = detail::reduce_point(lat, img.z);
      bool matched = false;
      for (std::size_t j = 0; j < n; ++j) {
        const LatticeVertex& u = fd.lattice_vertices[j];
        if (detail::lattice_distance(lat, zr, u.point.z) < detail::kVertexMatch && std::abs(u.point.height - img.height) < detail::kVertexMatch) {
          parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
          matched = true;
          break;
        }
      }
      if (!matched) fd.diagnostics.push_back("vertex image under " + m.word().str() + " matches no vertex");
    }
  }
  std::map<int, int> class_of_root;
  fd.vertices.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const int r = find(static_cast<int>(i));
    auto it = class_of_root.find(r);
    if (it == class_of_root.end()) {
      it = class_of_root.emplace(r, static_cast<int>(fd.vertices.size())).first;
      fd.vertices.emplace_back();
    }
    fd.vertices[static_cast<std::size_t>(it->second)].members.push_back(static_cast<int>(i));
    fd.lattice_vertices[i].vertex_class = it->second;
  }
}

/// Face pairings plus edge cycles, recomputed from the stored face matrices.
inline VerificationReport verify_poincare(const FordDomain& fd) {
  VerificationReport rep;
  const CuspLattice& lat = fd.rep.lattice;
  const double pair_tol = 10.0 * fd.tol.geom;
  for (const FaceClass& f : fd.faces) {
    if (f.inverse < 0) {
      rep.pairings_ok = false;
      rep.notes.push_back("face " + f.core.str() + " has no inverse class");
      continue;
    }
    const FaceClass& g = fd.faces[static_cast<std::size_t>(f.inverse)];
    const HalfSpacePoint img = f.element.apply(f.sphere.top());
    if (std::abs(img.height - g.sphere.radius) > pair_tol || detail::lattice_distance(lat, img.z, g.sphere.center) > pair_tol) {
      rep.pairings_ok = false;
      rep.notes.push_back("face " + f.core.str() + " does not pair onto " + g.core.str());
    }
  }
  bool cycles_ok = true;
  for (const EdgeClass& ec : fd.edges) {
    EdgeReport er;
    try {
      const EdgeClass again = edge_cycle(fd, ec.lattice_edges.front());
      for (std::size_t k = 0; k < again.in_words.size(); ++k) er.cycle_words.push_back(again.out_words[k].str());
      er.monodromy_deviation = again.monodromy_deviation;
      er.angle_sum = again.angle_sum;
    } catch (const OpenCycle& e) {
      er.closed = false;
      rep.notes.push_back(e.what());
    }
    if (!er.closed || er.monodromy_deviation >= fd.tol.mono || std::abs(er.angle_sum - 2.0 * std::numbers::pi) >= fd.tol.angle) cycles_ok = false;
    rep.edge_reports.push_back(std::move(er));
  }
  rep.passed = rep.pairings_ok && cycles_ok;
  return rep;
}

struct Tangency {
  Complex point{};
  GroupWord first, second;
};

/// Externally tangent pairs of visible faces whose tangency point is not
/// covered by any other face, one per Gamma_inf class.
inline std::vector<Tangency> visible_tangencies(const FordDomain& fd) {
  std::vector<Tangency> out;
  const auto spheres = fd.face_spheres();
  const CuspLattice& lat = fd.rep.lattice;
  std::set<EdgeKey> seen;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    for (std::size_t j = i; j < spheres.size(); ++j) {
      for (const LatticeOffset& o : offsets_within(lat, spheres[j].center - spheres[i].center, spheres[i].radius + spheres[j].radius + 2.0 * fd.tol.tangent)) {
        if (i == j && o.is_zero()) continue;
        const IsoSphere t = translate(spheres[j], lat, o);
        const auto [key, flipped] = edge_key(fd.faces[i].core, spheres[i].offset, fd.faces[j].core, t.offset);
        if (flipped || seen.count(key) != 0) continue;
        if (!visibly_tangent(spheres[i], t, spheres, &lat, fd.tol)) continue;
        seen.insert(key);
        out.push_back({tangency_point(spheres[i], t), spheres[i].word, t.word});
      }
    }
  }
  return out;
}

/// One-sided test: no visible tangency among visible faces.
inline MinParabolic check_minimal_parabolic(const FordDomain& fd) {
  if (fd.faces.empty()) return MinParabolic::Inconclusive;
  return visible_tangencies(fd).empty() ? MinParabolic::Certified : MinParabolic::Inconclusive;
}

/// Arrangement, cycles, vertex classes, verification. Sets Unresolved on an open cycle.
inline void analyze_domain(FordDomain& fd) {
  for (FaceClass& f : fd.faces) f.inverse = fd.face_index(f.word.inverse().core());
  analyze_arrangement(fd);
  try {
    analyze_cycles(fd);
  } catch (const OpenCycle& e) {
    // A stopped run keeps its own status; open cycles are expected there.
    if (fd.status == RunStatus::Terminated) {
      fd.status = RunStatus::Unresolved;
      fd.reason = e.what();
    }
    fd.edges.clear();
  }
  analyze_vertex_classes(fd);
  fd.poincare = verify_poincare(fd);
  if (fd.status == RunStatus::Unresolved) fd.poincare.passed = false;
  fd.min_parabolic = check_minimal_parabolic(fd);
}

/// Finalizes a drawn list: keeps the spheres visible against all of it,
/// sorted by core, then runs the analysis.
inline void finalize_faces(FordDomain& fd, std::vector<FaceClass> drawn) {
  std::vector<IsoSphere> all;
  for (const auto& f : drawn) all.push_back(f.sphere);
  fd.faces.clear();
  fd.hidden.clear();
  for (auto& f : drawn) {
    const VisibilityResult v = visibility(f.sphere, all, fd.rep.lattice, fd.tol);
    f.exposed_area = v.area;
    f.marginal = v.marginal;
    if (v.marginal) fd.diagnostics.push_back("marginal visibility for " + f.core.str());
    (v.visible ? fd.faces : fd.hidden).push_back(std::move(f));
  }
  std::sort(fd.faces.begin(), fd.faces.end(), [](const FaceClass& a, const FaceClass& b) { return a.core < b.core; });
  if (fd.shimizu.ok) fd.shimizu = shimizu_check(fd.face_spheres(), fd.rep.lattice, fd.tol);
  analyze_domain(fd);
}

/// The drawing procedure: L0 holds words to draw, L1 drawn words.
///
/// Each popped word is re-tested for visibility against L1 before drawing.
/// Once drawn, its translates near every drawn sphere are checked inside the
/// 7 x 7 offset window around the nearest translate; each visible
/// intersection I(xi) cap I(w) enqueues xi w^{-1} and w xi^{-1}.
struct Prescan {
  std::optional<RunStatus> verdict;  // empty when nothing was found
  std::string reason;
  ShimizuResult shimizu;
};

/// Checks the words x tau y, x, y in {gamma, gamma^-1}, with tau the lattice
/// element minimizing the lower-left entry c_y (c_x tau + d_x) + c_x a_y.
/// These have the largest spheres among short words. A radius above the
/// Shimizu bound signals indiscreteness; an element fixing infinity is either a
/// lattice translation (a relation: the representation is not faithful) or
/// lies outside the cusp lattice (indiscrete).
inline Prescan shimizu_prescan(const Representation& rep, const Tolerances& tol = default_tolerances()) {
  Prescan res;
  res.shimizu.bound = min_translation_length(rep.lattice);
  const GroupWord g = rep.gamma_word();
  std::vector<GroupWord> words = {g, g.inverse()};
  for (const GroupWord& x : {g, g.inverse()}) {
    for (const GroupWord& y : {g, g.inverse()}) {
      const MoebiusMap mx = evaluate_word(x, rep);
      const MoebiusMap my = evaluate_word(y, rep);
      const Complex target = -mx.d() / mx.c() - my.a() / my.c();
      const GroupWord w = x * GroupWord::lattice(rep.lattice.to_input(nearest_translate(rep.lattice, target, 0.0))) * y;
      if (!w.in_cusp_group()) words.push_back(w);
    }
  }
  char buf[200];
  std::string fixer;
  bool relation = false;
  for (const GroupWord& w : words) {
    const MoebiusMap m = evaluate_word(w, rep);
    if (std::abs(m.c()) <= tol.geom) {
      if (!fixer.empty()) continue;
      fixer = w.str();
      const Complex shift = m.b() / m.d();
      const auto xy = rep.lattice.coords(shift);
      const LatticeOffset near{static_cast<int>(std::round(xy[0])), static_cast<int>(std::round(xy[1]))};
      relation = std::abs(m.a() - m.d()) <= tol.geom && std::abs(shift - rep.lattice.reduced_vec(near)) <= tol.geom;
      continue;
    }
    const IsoSphere s = isometric_sphere(m, tol);
    if (s.radius > res.shimizu.bound + tol.geom && s.radius > res.shimizu.radius) {
      res.shimizu.ok = false;
      res.shimizu.word = w;
      res.shimizu.radius = s.radius;
    }
  }
  if (!res.shimizu.ok) {
    res.verdict = RunStatus::IndiscreteSignal;
    std::snprintf(buf, sizeof buf, "radius %.6g of I(%s) exceeds the minimal translation length %.6g", res.shimizu.radius,
                  res.shimizu.word.str().c_str(), res.shimizu.bound);
  } else if (!fixer.empty() && relation) {
    res.verdict = RunStatus::Unresolved;
    std::snprintf(buf, sizeof buf, "%s acts as a cusp translation: the representation is not faithful", fixer.c_str());
  } else if (!fixer.empty()) {
    res.verdict = RunStatus::IndiscreteSignal;
    std::snprintf(buf, sizeof buf, "%s fixes infinity but is not a cusp lattice translation", fixer.c_str());
  }
  if (res.verdict) res.reason = buf;
  return res;
}

inline FordDomain run_procedure(const Representation& rep, const Rectangle& window = {}, const Budget& budget = {},
                                const Tolerances& tol = default_tolerances()) {
  FordDomain fd;
  fd.rep = rep;
  fd.tol = tol;
  fd.window = window;
  const CuspLattice& lat = rep.lattice;
  const double bound = min_translation_length(lat);

  struct Drawn {
    GroupWord word;
    IsoSphere sphere;
  };
  std::vector<Drawn> l1;
  std::vector<IsoSphere> l1_spheres;
  std::deque<GroupWord> l0;
  std::set<std::string> queued, drawn_cores, discarded;

  auto signal = [&](const GroupWord& w, double radius) {
    fd.status = RunStatus::IndiscreteSignal;
    fd.shimizu = {false, w, radius, bound};
    char buf[160];
    std::snprintf(buf, sizeof buf, "radius %.6g of I(%s) exceeds the minimal translation length %.6g", radius, w.str().c_str(), bound);
    fd.reason = buf;
  };
  // Radii are checked on the way in: an oversized sphere ends the run
  // without waiting for its turn in the queue.
  auto enqueue = [&](const GroupWord& w) {
    if (w.in_cusp_group() || fd.status == RunStatus::IndiscreteSignal) return;
    const std::string c = w.core().str();
    if (queued.count(c) != 0 || drawn_cores.count(c) != 0 || discarded.count(c) != 0) return;
    const MoebiusMap m = evaluate_word(w, rep);
    if (std::abs(m.c()) > tol.geom && 1.0 / std::abs(m.c()) > bound + tol.geom) {
      signal(w, 1.0 / std::abs(m.c()));
      return;
    }
    queued.insert(c);
    l0.push_back(w);
  };
  const GroupWord g = rep.gamma_word();
  enqueue(g);
  enqueue(g.inverse());
  if (const Prescan pre = shimizu_prescan(rep, tol); pre.verdict && fd.status == RunStatus::Terminated) {
    fd.status = *pre.verdict;
    fd.shimizu = pre.shimizu;
    fd.reason = pre.reason;
    l0.clear();
  }

  while (!l0.empty() && fd.status != RunStatus::IndiscreteSignal) {
    if (fd.iterations >= budget.max_iterations) {
      fd.status = RunStatus::BudgetExhausted;
      fd.reason = "iteration budget exhausted";
      break;
    }
    if (budget.deadline && std::chrono::steady_clock::now() > *budget.deadline) {
      fd.status = RunStatus::BudgetExhausted;
      fd.reason = "time limit exceeded";
      break;
    }
    ++fd.iterations;
    const GroupWord zeta = l0.front();
    l0.pop_front();
    const std::string zc = zeta.core().str();
    queued.erase(zc);

    const IsoSphere s = isometric_sphere(evaluate_word(zeta, rep), tol);
    if (s.radius > bound + tol.geom) {
      signal(zeta, s.radius);
      break;
    }
    if (!visible_wrt(s, l1_spheres, lat, tol)) {
      discarded.insert(zc);
      continue;
    }
    if (static_cast<int>(l1.size()) >= budget.max_faces) {
      fd.status = RunStatus::BudgetExhausted;
      fd.reason = "face budget exhausted";
      break;
    }
    l1.push_back({zeta, s});
    l1_spheres.push_back(s);
    drawn_cores.insert(zc);

    for (std::size_t k = 0; k < l1.size(); ++k) {
      const Drawn& xi = l1[k];
      const LatticeOffset near = nearest_translate(lat, xi.sphere.center, s.center);
      for (const LatticeOffset& win : neighbor_offsets()) {
        const LatticeOffset o = lat.to_input(near + win);
        const IsoSphere w = translate(s, lat, o);
        if (detail::same_sphere(w, xi.sphere, tol)) continue;
        if (sphere_relation(xi.sphere, w, tol) != SphereRelation::TwoPointIntersection) continue;
        if (!visible_edge(xi.sphere, w, l1_spheres, lat, tol).visible()) continue;
        fd.intersections.push_back({xi.word, w.word, win});
        enqueue(xi.word * w.word.inverse());
        enqueue(w.word * xi.word.inverse());
      }
    }
  }

  std::vector<FaceClass> faces;
  for (const Drawn& d : l1) faces.push_back(make_face(d.word, rep, tol));
  finalize_faces(fd, std::move(faces));
  if (fd.status == RunStatus::IndiscreteSignal) {
    fd.poincare.passed = false;
  } else if (!fd.shimizu.ok) {
    fd.status = RunStatus::IndiscreteSignal;
    fd.reason = "visible sphere " + fd.shimizu.word.str() + " violates the radius bound";
    fd.poincare.passed = false;
  } else if (fd.status != RunStatus::Terminated) {
    fd.poincare.passed = false;
  }
  return fd;
}

/// A domain from an explicit list of words, bypassing discovery. Used for
/// verification of hand-built inputs and in tests.
inline FordDomain domain_from_words(const Representation& rep, const std::vector<GroupWord>& words,
                                   const Tolerances& tol = default_tolerances()) {
  FordDomain fd;
  fd.rep = rep;
  fd.tol = tol;
  std::vector<FaceClass> faces;
  for (const GroupWord& w : words) faces.push_back(make_face(w, rep, tol));
  finalize_faces(fd, std::move(faces));
  return fd;
}

}  // namespace fordspine
