#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "fordspine/sphere.hpp"

namespace fordspine {

/// Axis-aligned rectangle in C.
struct Rectangle {
  double x0 = -10.0, y0 = -10.0, x1 = 10.0, y1 = 10.0;

  bool empty() const { return !(x1 > x0 && y1 > y0); }
  bool contains(Complex z) const { return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1; }
  /// Euclidean distance from z to the rectangle (0 inside).
  double distance(Complex z) const {
    const double dx = std::max({x0 - z.real(), 0.0, z.real() - x1});
    const double dy = std::max({y0 - z.imag(), 0.0, z.imag() - y1});
    return std::hypot(dx, dy);
  }
};

/// The rank-2 cusp group Gamma_inf = <alpha, beta> acting by translations.
///
/// Keeps both the generator translations (`input_a`, `input_b`, the images of
/// alpha and beta) and a Lagrange-reduced basis (`a`, `b`). Offsets attached to
/// words and spheres are always in generator exponents; reduced coordinates
/// appear only in the basis-level queries below and convert via `to_input`.
struct CuspLattice {
  Complex input_a{}, input_b{};
  Complex a{}, b{};
  // a = m[0][0] input_a + m[0][1] input_b;  b = m[1][0] input_a + m[1][1] input_b
  std::array<std::array<int, 2>, 2> change{{{1, 0}, {0, 1}}};
  bool reduced = false;

  Complex vec(LatticeOffset o) const { return static_cast<double>(o.p) * input_a + static_cast<double>(o.q) * input_b; }
  Complex reduced_vec(LatticeOffset o) const { return static_cast<double>(o.p) * a + static_cast<double>(o.q) * b; }

  LatticeOffset to_input(LatticeOffset r) const {
    return {r.p * change[0][0] + r.q * change[1][0], r.p * change[0][1] + r.q * change[1][1]};
  }
  LatticeOffset to_reduced(LatticeOffset o) const {
    const int det = change[0][0] * change[1][1] - change[0][1] * change[1][0];
    // inverse of an integer unimodular matrix, transposed action on row vectors
    const int i00 = change[1][1] * det, i01 = -change[0][1] * det, i10 = -change[1][0] * det, i11 = change[0][0] * det;
    return {o.p * i00 + o.q * i10, o.p * i01 + o.q * i11};
  }

  /// Real coordinates (x, y) with z = x a + y b in the reduced basis.
  std::array<double, 2> coords(Complex z) const {
    const double det = a.real() * b.imag() - a.imag() * b.real();
    return {(z.real() * b.imag() - z.imag() * b.real()) / det, (a.real() * z.imag() - a.imag() * z.real()) / det};
  }
};

namespace detail {

inline bool canonical_sign(Complex v) { return v.imag() > 0.0 || (v.imag() == 0.0 && v.real() > 0.0); }

inline double dot(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

}  // namespace detail

/// Two-dimensional Lagrange reduction.
///
/// Output satisfies |a| <= |b| <= |a - b| <= |a + b|, with a having positive
/// imaginary part (or positive real part on the real axis), and ties between
/// equal-length candidates resolved towards the smaller argument in [0, pi).
inline CuspLattice reduce(Complex a, Complex b, const Tolerances& tol = default_tolerances()) {
  const double cross = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(a) <= tol.geom || std::abs(b) <= tol.geom || std::abs(cross) <= tol.geom * std::abs(a) * std::abs(b)) {
    throw DegenerateLattice();
  }
  CuspLattice lat;
  lat.input_a = a;
  lat.input_b = b;
  Complex u = a, v = b;
  std::array<int, 2> mu{1, 0}, mv{0, 1};
  if (std::norm(v) < std::norm(u)) {
    std::swap(u, v);
    std::swap(mu, mv);
  }
  for (int iter = 0; iter < 10000; ++iter) {
    const double m = std::round(detail::dot(v, u) / std::norm(u));
    v -= m * u;
    const int mi = static_cast<int>(m);
    mv = {mv[0] - mi * mu[0], mv[1] - mi * mu[1]};
    if (std::norm(v) >= std::norm(u)) break;
    std::swap(u, v);
    std::swap(mu, mv);
  }
  if (!detail::canonical_sign(u)) {
    u = -u;
    mu = {-mu[0], -mu[1]};
  }
  const double uv = detail::dot(u, v);
  if (uv < 0.0 || (uv == 0.0 && !detail::canonical_sign(v))) {
    v = -v;
    mv = {-mv[0], -mv[1]};
  }
  // Equal lengths: prefer the candidate with smaller argument in [0, pi) first.
  if (std::abs(std::abs(u) - std::abs(v)) <= 1e-12 * std::abs(u)) {
    Complex v_canon = detail::canonical_sign(v) ? v : -v;
    if (std::arg(v_canon) < std::arg(u)) {
      const std::array<int, 2> mvc = detail::canonical_sign(v) ? mv : std::array<int, 2>{-mv[0], -mv[1]};
      Complex new_b = u;
      std::array<int, 2> mb = mu;
      if (detail::dot(v_canon, new_b) < 0.0) {
        new_b = -new_b;
        mb = {-mb[0], -mb[1]};
      }
      u = v_canon;
      mu = mvc;
      v = new_b;
      mv = mb;
    }
  }
  lat.a = u;
  lat.b = v;
  lat.change = {{{mu[0], mu[1]}, {mv[0], mv[1]}}};
  lat.reduced = true;
  return lat;
}

/// Closest lattice translate of `base` to `target`; result in reduced
/// coordinates. Ties go to the lexicographically smallest (p, q).
inline LatticeOffset nearest_translate(const CuspLattice& lat, Complex target, Complex base) {
  const auto xy = lat.coords(target - base);
  const int p0 = static_cast<int>(std::round(xy[0]));
  const int q0 = static_cast<int>(std::round(xy[1]));
  LatticeOffset best{p0, q0};
  double best_d = std::numeric_limits<double>::infinity();
  for (int dp = -1; dp <= 1; ++dp) {
    for (int dq = -1; dq <= 1; ++dq) {
      const LatticeOffset cand{p0 + dp, q0 + dq};
      const double dist = std::abs(target - (base + lat.reduced_vec(cand)));
      const double slack = 1e-12 * std::max(1.0, dist);
      if (dist < best_d - slack || (std::abs(dist - best_d) <= slack && cand < best)) {
        best = cand;
        best_d = std::min(best_d, dist);
      }
    }
  }
  return best;
}

/// The 7 x 7 window of offsets with entries in {0, +-1, +-2, +-3}, row-major from (-3, -3).
inline const std::vector<LatticeOffset>& neighbor_offsets() {
  static const std::vector<LatticeOffset> window = [] {
    std::vector<LatticeOffset> w;
    for (int e = -3; e <= 3; ++e) {
      for (int d = -3; d <= 3; ++d) w.push_back({e, d});
    }
    return w;
  }();
  return window;
}

inline double min_translation_length(const CuspLattice& lat) { return std::abs(lat.a); }

/// All offsets o (generator exponents) with |delta + vec(o)| < radius.
inline std::vector<LatticeOffset> offsets_within(const CuspLattice& lat, Complex delta, double radius) {
  std::vector<LatticeOffset> out;
  if (radius <= 0.0) return out;
  const auto xy = lat.coords(-delta);
  // Reduced bases have angle in [60, 120] degrees, so |p a + q b|^2 >= (p^2|a|^2 + q^2|b|^2) / 2.
  const int rp = static_cast<int>(std::ceil(std::sqrt(2.0) * radius / std::abs(lat.a))) + 1;
  const int rq = static_cast<int>(std::ceil(std::sqrt(2.0) * radius / std::abs(lat.b))) + 1;
  const int cp = static_cast<int>(std::round(xy[0]));
  const int cq = static_cast<int>(std::round(xy[1]));
  for (int p = cp - rp; p <= cp + rp; ++p) {
    for (int q = cq - rq; q <= cq + rq; ++q) {
      const LatticeOffset r{p, q};
      if (std::abs(delta + lat.reduced_vec(r)) < radius) out.push_back(lat.to_input(r));
    }
  }
  return out;
}

/// Offset (generator exponents) moving z into the half-open fundamental
/// parallelogram {base + x a + y b : 0 <= x, y < 1} of the reduced basis.
inline LatticeOffset parallelogram_offset(const CuspLattice& lat, Complex z, Complex base = {}) {
  auto xy = lat.coords(z - base);
  // Snap values within rounding of an integer so boundary points land on the closed side.
  for (double& c : xy) {
    const double r = std::round(c);
    if (std::abs(c - r) < 1e-12) c = r;
  }
  return lat.to_input({-static_cast<int>(std::floor(xy[0])), -static_cast<int>(std::floor(xy[1]))});
}

/// The translate of s by the lattice element with exponents o.
inline IsoSphere translate(const IsoSphere& s, const CuspLattice& lat, LatticeOffset o) {
  return {s.center + lat.vec(o), s.radius, s.word * GroupWord::lattice(-o), s.offset + o};
}

/// Every Gamma_inf translate of s whose disk meets the window.
inline std::vector<IsoSphere> translates_in_window(const CuspLattice& lat, const IsoSphere& s, const Rectangle& window) {
  std::vector<IsoSphere> out;
  const double reach = std::hypot(window.x1 - window.x0, window.y1 - window.y0) / 2.0 + s.radius;
  const Complex mid{(window.x0 + window.x1) / 2.0, (window.y0 + window.y1) / 2.0};
  for (const LatticeOffset& o : offsets_within(lat, s.center - mid, reach + 1e-9)) {
    const Complex c = s.center + lat.vec(o);
    if (window.distance(c) < s.radius) out.push_back(translate(s, lat, o));
  }
  return out;
}

}  // namespace fordspine
