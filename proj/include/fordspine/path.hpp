#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "fordspine/dual.hpp"

namespace fordspine {

/// Polynomial sum_k coeffs[k] t^k with complex coefficients.
struct Polynomial {
  std::vector<Complex> coeffs;

  Complex at(double t) const {
    Complex v{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
  }
  static Polynomial constant(Complex c) { return {{c}}; }
  bool operator==(const Polynomial&) const = default;
};

/// A one-parameter family of representations, sampled from `t_start` to
/// `t_end` (in that order, so the direction of travel is part of the data).
struct RepPath {
  enum class Form { Standard, Matrices };
  Form form = Form::Standard;
  double t_start = 0.0, t_end = 1.0;
  int samples = 64;
  Polynomial a, b, c;                               // standard form
  std::array<std::array<Polynomial, 4>, 3> matrix;  // alpha, beta, gamma entries (a, b, c, d)

  double width() const { return std::abs(t_end - t_start); }
  double sample_t(int i) const {
    return samples <= 1 ? t_start : t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(samples - 1);
  }

  Representation at(double t, const Tolerances& tol = default_tolerances()) const {
    if (form == Form::Standard) return standard_representation(a.at(t), b.at(t), c.at(t), tol);
    auto m = [&](int g, GroupWord w) {
      return MoebiusMap(matrix[g][0].at(t), matrix[g][1].at(t), matrix[g][2].at(t), matrix[g][3].at(t), std::move(w), tol);
    };
    return normalize_representation(m(0, GroupWord::alpha()), m(1, GroupWord::beta()), m(2, GroupWord::gamma()), tol);
  }
};

/// Combinatorial fingerprint of a run, used to detect transitions.
struct DomainSummary {
  double t = 0.0;
  bool valid = true;  // false when the sample is not a valid representation
  RunStatus status = RunStatus::Terminated;
  std::string reason;
  std::vector<std::string> faces;
  std::vector<std::string> edges;      // Gamma_inf edge keys
  std::vector<std::string> crossings;  // edge key plus end index
  int edge_classes = 0;
  int vertex_classes = 0;
  int lattice_vertices = 0;
  bool passed = false;
  bool gamma_visible = false;

  bool same_combinatorics(const DomainSummary& o) const {
    return valid == o.valid && status == o.status && faces == o.faces && edges == o.edges && crossings == o.crossings &&
           lattice_vertices == o.lattice_vertices;
  }
};

inline std::string crossing_label(const Crossing& c) { return c.key.str() + "#" + std::to_string(c.end); }

inline DomainSummary summarize(const FordDomain& fd, double t) {
  DomainSummary s;
  s.t = t;
  s.status = fd.status;
  s.reason = fd.reason;
  for (const auto& f : fd.faces) s.faces.push_back(f.core.str());
  for (const auto& e : fd.lattice_edges) s.edges.push_back(e.key.str());
  for (const auto& c : fd.crossings) s.crossings.push_back(crossing_label(c));
  std::sort(s.faces.begin(), s.faces.end());
  std::sort(s.edges.begin(), s.edges.end());
  std::sort(s.crossings.begin(), s.crossings.end());
  s.edge_classes = static_cast<int>(fd.edges.size());
  s.vertex_classes = static_cast<int>(fd.vertices.size());
  s.lattice_vertices = static_cast<int>(fd.lattice_vertices.size());
  s.passed = fd.poincare.passed;
  s.gamma_visible = core_tunnel_status(fd).gamma_visible;
  return s;
}

enum class EventKind { Bumping, ReverseBumping, Sliding, ReverseSliding, Internal, Tangency, Unclassified };

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::Bumping: return "Bumping";
    case EventKind::ReverseBumping: return "ReverseBumping";
    case EventKind::Sliding: return "Sliding";
    case EventKind::ReverseSliding: return "ReverseSliding";
    case EventKind::Internal: return "Internal";
    case EventKind::Tangency: return "Tangency";
    case EventKind::Unclassified: return "Unclassified";
  }
  return "?";
}

struct PathEvent {
  EventKind kind = EventKind::Unclassified;
  double t_lo = 0.0, t_hi = 0.0;  // t_lo < t_hi
  double t_before = 0.0, t_after = 0.0;  // bracket ends in the direction of travel
  std::vector<std::string> witnesses;
};

namespace detail {

inline std::vector<std::string> minus(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// The two spheres behind an edge key, positioned in `fd`.
inline std::optional<std::pair<IsoSphere, IsoSphere>> key_spheres(const FordDomain& fd, const EdgeKey& key) {
  const int ix = fd.face_index(key.x);
  const int iy = fd.face_index(key.y);
  if (ix < 0 || iy < 0) return std::nullopt;
  const IsoSphere& sx = fd.faces[static_cast<std::size_t>(ix)].sphere;
  const IsoSphere& sy = fd.faces[static_cast<std::size_t>(iy)].sphere;
  return std::make_pair(sx, translate(sy, fd.rep.lattice, sx.offset + key.rel - sy.offset));
}

struct Forward {
  bool bumping = false;
  bool sliding = false;
  std::vector<std::string> witnesses;
};

/// Emergence tests in the direction before -> after.
inline Forward forward_moves(const FordDomain& before, const FordDomain& after) {
  Forward f;
  const DomainSummary sb = summarize(before, 0.0);
  const DomainSummary sa = summarize(after, 0.0);
  const auto gained = minus(sa.crossings, sb.crossings);
  const auto lost = minus(sb.crossings, sa.crossings);
  const auto new_faces = minus(sa.faces, sb.faces);
  if (gained.empty()) return f;
  if (lost.empty()) {
    // Two faces already present, apart or touching before, now cross on C.
    for (const Crossing& c : after.crossings) {
      if (std::find(gained.begin(), gained.end(), crossing_label(c)) == gained.end()) continue;
      const auto pair = key_spheres(before, c.key);
      if (!pair) continue;
      const SphereRelation rel = sphere_relation(pair->first, pair->second, before.tol);
      if (rel == SphereRelation::Disjoint || rel == SphereRelation::ExternallyTangent) {
        f.bumping = true;
        f.witnesses.push_back(c.key.x.str() + "/" + c.key.y.str());
        break;
      }
    }
  } else if (!new_faces.empty()) {
    // A new face appears where an existing edge met C.
    f.sliding = true;
  }
  if (f.bumping || f.sliding) {
    for (const auto& w : new_faces) f.witnesses.push_back(w);
  }
  return f;
}

}  // namespace detail

/// Classifies the transition between two domains on either side of an event.
inline PathEvent classify_event(const FordDomain& before, const FordDomain& after) {
  PathEvent ev;
  const auto fwd = detail::forward_moves(before, after);
  if (fwd.bumping || fwd.sliding) {
    ev.kind = fwd.bumping ? EventKind::Bumping : EventKind::Sliding;
    ev.witnesses = fwd.witnesses;
    return ev;
  }
  const auto rev = detail::forward_moves(after, before);
  if (rev.bumping || rev.sliding) {
    ev.kind = rev.bumping ? EventKind::ReverseBumping : EventKind::ReverseSliding;
    ev.witnesses = rev.witnesses;
    return ev;
  }
  const DomainSummary sb = summarize(before, 0.0);
  const DomainSummary sa = summarize(after, 0.0);
  if (sb.crossings == sa.crossings && (sb.edges != sa.edges || sb.lattice_vertices != sa.lattice_vertices)) {
    ev.kind = EventKind::Internal;
    for (const auto& e : detail::minus(sa.edges, sb.edges)) ev.witnesses.push_back("+" + e);
    for (const auto& e : detail::minus(sb.edges, sa.edges)) ev.witnesses.push_back("-" + e);
    return ev;
  }
  ev.kind = EventKind::Unclassified;
  for (const auto& w : detail::minus(sa.faces, sb.faces)) ev.witnesses.push_back("+" + w);
  for (const auto& w : detail::minus(sb.faces, sa.faces)) ev.witnesses.push_back("-" + w);
  return ev;
}

struct SweepSample {
  DomainSummary summary;
  std::optional<FordDomain> domain;
};

struct SweepResult {
  std::vector<DomainSummary> timeline;
  std::vector<PathEvent> events;
  std::vector<std::string> violations;  // consistency invariants that failed
};

inline SweepSample run_sample(const RepPath& path, double t, const Budget& budget, const Tolerances& tol) {
  SweepSample s;
  try {
    FordDomain fd = run_procedure(path.at(t, tol), {}, budget, tol);
    s.summary = summarize(fd, t);
    s.domain = std::move(fd);
  } catch (const FordError& e) {
    s.summary.t = t;
    s.summary.valid = false;
    s.summary.reason = e.what();
  }
  return s;
}

/// Samples the path, then brackets every combinatorial change by bisection to
/// width <= |t_end - t_start| / 1e4 and classifies it.
inline SweepResult sweep(const RepPath& path, const Budget& budget = {}, const Tolerances& tol = default_tolerances(),
                         int max_events_per_interval = 16) {
  SweepResult res;
  std::vector<SweepSample> samples;
  for (int i = 0; i < path.samples; ++i) samples.push_back(run_sample(path, path.sample_t(i), budget, tol));
  for (const auto& s : samples) res.timeline.push_back(s.summary);
  const double target = path.width() / 1e4;

  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const DomainSummary& a = samples[i].summary;
    const DomainSummary& b = samples[i + 1].summary;
    if (a.same_combinatorics(b)) {
      if (a.faces != b.faces) res.violations.push_back("faces changed without combinatorial change");
      continue;
    }
    if (a.crossings == b.crossings && a.edges == b.edges) {
      std::vector<std::string> fa = a.faces, fb = b.faces;
      if (detail::minus(fb, fa).size() > 0 && a.valid && b.valid && a.status == b.status) {
        res.violations.push_back("new face without new visible intersection near t=" + std::to_string(b.t));
      }
    }
    SweepSample lo = samples[i];
    for (int n = 0; n < max_events_per_interval && !lo.summary.same_combinatorics(b); ++n) {
      double t_lo = lo.summary.t;
      double t_hi = b.t;
      SweepSample hi = samples[i + 1];
      while (std::abs(t_hi - t_lo) > target) {
        const double mid = 0.5 * (t_lo + t_hi);
        SweepSample m = run_sample(path, mid, budget, tol);
        if (m.summary.same_combinatorics(lo.summary)) {
          t_lo = mid;
          lo = std::move(m);
        } else {
          t_hi = mid;
          hi = std::move(m);
        }
      }
      PathEvent ev;
      if (lo.domain && hi.domain && lo.summary.valid && hi.summary.valid) {
        ev = classify_event(*lo.domain, *hi.domain);
      } else {
        ev.kind = EventKind::Unclassified;
        ev.witnesses.push_back(!lo.summary.valid ? lo.summary.reason : hi.summary.reason);
      }
      ev.t_before = t_lo;
      ev.t_after = t_hi;
      ev.t_lo = std::min(t_lo, t_hi);
      ev.t_hi = std::max(t_lo, t_hi);
      res.events.push_back(std::move(ev));
      lo = std::move(hi);
    }
  }
  return res;
}

struct TunnelPathResult {
  bool certified = false;
  bool start_simple = false;     // the first sample has a single face pair
  int witness_sample = -1;       // first sample without the gamma face, if any
  int samples = 0;
};

/// Certified iff the gamma face class is visible at every sample.
/// Throws PathBroken at the first sample that did not terminate.
inline TunnelPathResult certify_timeline(const std::vector<DomainSummary>& timeline) {
  TunnelPathResult r;
  r.samples = static_cast<int>(timeline.size());
  r.certified = true;
  for (std::size_t i = 0; i < timeline.size(); ++i) {
    const DomainSummary& s = timeline[i];
    if (!s.valid || s.status != RunStatus::Terminated) throw PathBroken(static_cast<int>(i));
    if (!s.gamma_visible && r.certified) {
      r.certified = false;
      r.witness_sample = static_cast<int>(i);
    }
  }
  r.start_simple = !timeline.empty() && timeline.front().faces.size() == 2;
  return r;
}

inline TunnelPathResult certify_tunnel_along_path(const RepPath& path, const Budget& budget = {},
                                                  const Tolerances& tol = default_tolerances()) {
  std::vector<DomainSummary> timeline;
  for (int i = 0; i < path.samples; ++i) timeline.push_back(run_sample(path, path.sample_t(i), budget, tol).summary);
  return certify_timeline(timeline);
}

}  // namespace fordspine
