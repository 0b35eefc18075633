#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "fordspine/lattice.hpp"

namespace fordspine {

enum class SphereRelation {
  Disjoint,
  ExternallyTangent,
  TwoPointIntersection,
  InternallyTangent,
  Covered,    // the second sphere lies strictly inside the first
  CoveredBy,  // the first sphere lies strictly inside the second
  Equal
};

inline const char* to_string(SphereRelation r) {
  switch (r) {
    case SphereRelation::Disjoint: return "Disjoint";
    case SphereRelation::ExternallyTangent: return "ExternallyTangent";
    case SphereRelation::TwoPointIntersection: return "TwoPointIntersection";
    case SphereRelation::InternallyTangent: return "InternallyTangent";
    case SphereRelation::Covered: return "Covered";
    case SphereRelation::CoveredBy: return "CoveredBy";
    case SphereRelation::Equal: return "Equal";
  }
  return "?";
}

inline SphereRelation sphere_relation(const IsoSphere& s1, const IsoSphere& s2, const Tolerances& tol = default_tolerances()) {
  const double d = std::abs(s1.center - s2.center);
  const double sum = s1.radius + s2.radius;
  const double diff = std::abs(s1.radius - s2.radius);
  if (d <= tol.tangent && diff <= tol.tangent) return SphereRelation::Equal;
  if (std::abs(d - sum) <= tol.tangent) return SphereRelation::ExternallyTangent;
  if (d > sum) return SphereRelation::Disjoint;
  if (std::abs(d - diff) <= tol.tangent) return SphereRelation::InternallyTangent;
  if (d < diff) return s1.radius > s2.radius ? SphereRelation::Covered : SphereRelation::CoveredBy;
  return SphereRelation::TwoPointIntersection;
}

/// Half-plane {z : Re((z - origin) * conj(normal)) < offset}.
struct HalfPlane {
  Complex origin{};
  Complex normal{};
  double offset = 0.0;

  double slack(Complex z) const { return offset - ((z - origin) * std::conj(normal)).real(); }
  bool contains(Complex z) const { return slack(z) > 0.0; }
};

/// Where the hemisphere over s1 is strictly higher than the one over s2.
///
/// With heights continued as h^2 = r^2 - |z - c|^2 this is the side of the
/// radical line where pow_{s1}(z) < pow_{s2}(z), a half-plane.
inline HalfPlane dominance_halfplane(const IsoSphere& s1, const IsoSphere& s2) {
  const Complex delta = s2.center - s1.center;
  return {s1.center, delta, (std::norm(delta) + s1.radius * s1.radius - s2.radius * s2.radius) / 2.0};
}

namespace detail {

inline double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

/// Signed area of (triangle 0, a, b) intersected with the disk |z| < r.
inline double triangle_disk_area(Complex a, Complex b, double r) {
  const Complex d = b - a;
  const double qa = std::norm(d);
  if (qa == 0.0) return 0.0;
  const double qb = (a * std::conj(d)).real();
  const double qc = std::norm(a) - r * r;
  const double disc = qb * qb - qa * qc;
  double cuts[4] = {0.0, 0.0, 0.0, 1.0};
  int n = 1;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    const double t1 = (-qb - sq) / qa;
    const double t2 = (-qb + sq) / qa;
    if (t1 > 0.0 && t1 < 1.0) cuts[n++] = t1;
    if (t2 > 0.0 && t2 < 1.0) cuts[n++] = t2;
  }
  cuts[n++] = 1.0;
  double total = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const Complex p = a + cuts[i] * d;
    const Complex q = a + cuts[i + 1] * d;
    const Complex mid = a + 0.5 * (cuts[i] + cuts[i + 1]) * d;
    if (std::norm(mid) <= r * r) {
      total += cross(p, q) / 2.0;
    } else {
      total += r * r * std::atan2(cross(p, q), (p * std::conj(q)).real()) / 2.0;
    }
  }
  return total;
}

/// Clips a convex polygon (counter-clockwise) by a half-plane.
inline std::vector<Complex> clip(const std::vector<Complex>& poly, const HalfPlane& h) {
  std::vector<Complex> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex p = poly[i];
    const Complex q = poly[(i + 1) % n];
    const double sp = h.slack(p);
    const double sq = h.slack(q);
    if (sp >= 0.0) out.push_back(p);
    if ((sp >= 0.0) != (sq >= 0.0)) out.push_back(p + (sp / (sp - sq)) * (q - p));
  }
  return out;
}

inline bool same_sphere(const IsoSphere& x, const IsoSphere& y, const Tolerances& tol) {
  return std::abs(x.center - y.center) <= tol.tangent && std::abs(x.radius - y.radius) <= tol.tangent;
}

}  // namespace detail

/// Every translate of every sphere in `others` whose disk meets (or touches)
/// the disk of s, excluding spheres equal to s or to `also_exclude`.
inline std::vector<IsoSphere> obstacles_near(const IsoSphere& s, std::span<const IsoSphere> others, const CuspLattice& lat,
                                             const Tolerances& tol = default_tolerances(),
                                             const IsoSphere* also_exclude = nullptr) {
  std::vector<IsoSphere> out;
  for (const IsoSphere& k : others) {
    for (const LatticeOffset& o : offsets_within(lat, k.center - s.center, s.radius + k.radius + tol.tangent)) {
      IsoSphere t = translate(k, lat, o);
      if (detail::same_sphere(t, s, tol)) continue;
      if (also_exclude != nullptr && detail::same_sphere(t, *also_exclude, tol)) continue;
      out.push_back(std::move(t));
    }
  }
  return out;
}

struct VisibilityResult {
  bool visible = false;
  bool marginal = false;  // residual area within a factor 10 below the threshold
  double area = 0.0;      // area of the exposed region projected to C
  std::vector<Complex> region;  // convex polygon bounding the exposed region
};

/// Area of D(s) minus everything dominated by a sphere in `obstacles`
/// (obstacles are used as given, no translates added).
inline VisibilityResult exposed_region(const IsoSphere& s, std::span<const IsoSphere> obstacles,
                                       const Tolerances& tol = default_tolerances()) {
  VisibilityResult res;
  const double r = s.radius;
  std::vector<Complex> poly{{-1.5 * r, -1.5 * r}, {1.5 * r, -1.5 * r}, {1.5 * r, 1.5 * r}, {-1.5 * r, 1.5 * r}};
  for (const IsoSphere& k : obstacles) {
    HalfPlane h = dominance_halfplane(s, k);
    h.origin = 0.0;  // polygon is kept relative to the center of s
    poly = detail::clip(poly, h);
    if (poly.size() < 3) {
      poly.clear();
      break;
    }
  }
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) area += detail::triangle_disk_area(poly[i], poly[(i + 1) % poly.size()], r);
  res.area = std::abs(area);
  res.visible = res.area > tol.area_threshold();
  res.marginal = res.area > tol.marginal_area() && res.area <= tol.area_threshold();
  for (Complex& z : poly) z += s.center;
  res.region = std::move(poly);
  return res;
}

/// Visibility of s with respect to `others` and all their Gamma_inf translates:
/// some open subset of s lies outside every closed half-ball of the collection.
inline VisibilityResult visibility(const IsoSphere& s, std::span<const IsoSphere> others, const CuspLattice& lat,
                                   const Tolerances& tol = default_tolerances()) {
  const auto obstacles = obstacles_near(s, others, lat, tol);
  return exposed_region(s, obstacles, tol);
}

inline bool visible_wrt(const IsoSphere& s, std::span<const IsoSphere> others, const CuspLattice& lat,
                        const Tolerances& tol = default_tolerances()) {
  return visibility(s, others, lat, tol).visible;
}

/// The intersection I(s1) cap I(s2), parameterized along its chord in C.
///
/// The chord runs between the two crossing points of the boundary circles;
/// u in [0, 1] maps linearly onto it. A visible sub-arc ends either on the
/// boundary at infinity (cutter index -1) or where a third sphere takes over
/// (index into `cutters`), which is a vertex of the domain.
struct EdgeArc {
  struct Subarc {
    double from = 0.0;
    double to = 1.0;
    int cut_from = -1;
    int cut_to = -1;
  };

  IsoSphere first, second;
  Complex chord_start{}, chord_end{};
  std::vector<Subarc> visible_subarcs;
  std::vector<IsoSphere> cutters;

  bool visible() const { return !visible_subarcs.empty(); }
  double chord_length() const { return std::abs(chord_end - chord_start); }
  Complex point(double u) const { return chord_start + u * (chord_end - chord_start); }
  HalfSpacePoint lift(double u) const {
    const Complex z = point(u);
    return {z, first.height(z)};
  }
};

/// Chord of two circles meeting in two points. Requires TwoPointIntersection.
inline EdgeArc chord_of(const IsoSphere& s1, const IsoSphere& s2, const Tolerances& tol = default_tolerances()) {
  if (sphere_relation(s1, s2, tol) != SphereRelation::TwoPointIntersection) throw NoIntersection();
  const Complex delta = s2.center - s1.center;
  const double d = std::abs(delta);
  const double s = (d * d + s1.radius * s1.radius - s2.radius * s2.radius) / (2.0 * d);
  const double half = std::sqrt(std::max(0.0, s1.radius * s1.radius - s * s));
  const Complex dir = delta / d;
  const Complex mid = s1.center + s * dir;
  const Complex perp = Complex(0.0, 1.0) * dir;
  EdgeArc arc;
  arc.first = s1;
  arc.second = s2;
  arc.chord_start = mid - half * perp;
  arc.chord_end = mid + half * perp;
  return arc;
}

/// Restricts a chord to the part not dominated by any obstacle (used as given).
inline EdgeArc clip_edge(EdgeArc arc, std::span<const IsoSphere> obstacles, const Tolerances& tol = default_tolerances()) {
  const Complex D = arc.chord_end - arc.chord_start;
  double lo = 0.0, hi = 1.0;
  int cut_lo = -1, cut_hi = -1;
  std::vector<IsoSphere> cutters;
  for (const IsoSphere& k : obstacles) {
    const HalfPlane h = dominance_halfplane(arc.first, k);
    const double alpha = (D * std::conj(h.normal)).real();
    const double beta = h.slack(arc.chord_start);
    if (alpha == 0.0) {
      if (beta <= 0.0) {
        lo = 1.0;
        hi = 0.0;
      }
      continue;
    }
    const double u = beta / alpha;
    if (alpha > 0.0 && u < hi) {
      hi = u;
      cutters.push_back(k);
      cut_hi = static_cast<int>(cutters.size()) - 1;
    } else if (alpha < 0.0 && u > lo) {
      lo = u;
      cutters.push_back(k);
      cut_lo = static_cast<int>(cutters.size()) - 1;
    }
  }
  arc.visible_subarcs.clear();
  if (hi > lo && (hi - lo) * std::abs(D) > tol.edge) arc.visible_subarcs.push_back({lo, hi, cut_lo, cut_hi});
  arc.cutters = std::move(cutters);
  return arc;
}

/// Visible part of I(s1) cap I(s2) with respect to `others` and their translates.
inline EdgeArc visible_edge(const IsoSphere& s1, const IsoSphere& s2, std::span<const IsoSphere> others, const CuspLattice& lat,
                            const Tolerances& tol = default_tolerances()) {
  EdgeArc arc = chord_of(s1, s2, tol);
  const auto obstacles = obstacles_near(s1, others, lat, tol, &s2);
  return clip_edge(std::move(arc), obstacles, tol);
}

/// Tangency point of two externally tangent boundary disks.
inline Complex tangency_point(const IsoSphere& s1, const IsoSphere& s2) {
  return s1.center + (s2.center - s1.center) * (s1.radius / (s1.radius + s2.radius));
}

/// Disks tangent on C with the tangency point outside every other open disk.
inline bool visibly_tangent(const IsoSphere& s1, const IsoSphere& s2, std::span<const IsoSphere> others,
                            const CuspLattice* lat = nullptr, const Tolerances& tol = default_tolerances()) {
  if (sphere_relation(s1, s2, tol) != SphereRelation::ExternallyTangent) return false;
  const Complex p = tangency_point(s1, s2);
  auto covers = [&](const IsoSphere& k) {
    if (detail::same_sphere(k, s1, tol) || detail::same_sphere(k, s2, tol)) return false;
    return std::abs(p - k.center) < k.radius - tol.tangent;
  };
  for (const IsoSphere& k : others) {
    if (lat == nullptr) {
      if (covers(k)) return false;
      continue;
    }
    for (const LatticeOffset& o : offsets_within(*lat, k.center - p, k.radius)) {
      if (covers(translate(k, *lat, o))) return false;
    }
  }
  return true;
}

/// Dihedral angle of the exterior region (the equivariant Ford domain side)
/// along I(s1) cap I(s2): pi minus the angle between the outward normals, so
/// cos(theta) = (d^2 - r1^2 - r2^2) / (2 r1 r2). External tangency gives 0.
inline double dihedral_angle(const IsoSphere& s1, const IsoSphere& s2, const Tolerances& tol = default_tolerances()) {
  const SphereRelation rel = sphere_relation(s1, s2, tol);
  if (rel == SphereRelation::ExternallyTangent) return 0.0;
  if (rel != SphereRelation::TwoPointIntersection) throw NoIntersection();
  const double d = std::abs(s2.center - s1.center);
  const double s = (d * d + s1.radius * s1.radius - s2.radius * s2.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, s1.radius * s1.radius - s * s));
  // Intersection point with s1 at the origin and s2 on the positive real axis.
  const Complex n1{s, h};
  const Complex n2{s - d, h};
  const double between = std::atan2(std::abs(detail::cross(n1, n2)), (n1 * std::conj(n2)).real());
  return std::numbers::pi - between;
}

struct ShimizuResult {
  bool ok = true;
  GroupWord word;  // offending sphere when !ok
  double radius = 0.0;
  double bound = 0.0;
};

/// Radii of isometric spheres of a discrete group with a rank-2 cusp at
/// infinity are bounded by the shortest cusp translation.
inline ShimizuResult shimizu_check(std::span<const IsoSphere> spheres, const CuspLattice& lat,
                                   const Tolerances& tol = default_tolerances()) {
  ShimizuResult res;
  res.bound = min_translation_length(lat);
  for (const IsoSphere& s : spheres) {
    if (s.radius > res.bound + tol.geom) {
      res.ok = false;
      res.word = s.word;
      res.radius = s.radius;
      return res;
    }
  }
  return res;
}

}  // namespace fordspine
