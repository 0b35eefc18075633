#pragma once

#include <cmath>

#include "fordspine/moebius.hpp"

namespace fordspine {

/// Isometric sphere I(g): the Euclidean hemisphere over the disk D(g) in C.
///
/// `offset` records which Gamma_inf translate of I(core(g)) this is, in
/// generator exponents: I(w * alpha^p beta^q) is I(w) shifted by -(p a + q b),
/// so offset = -trailing lattice block of `word`.
struct IsoSphere {
  Complex center{};
  double radius = 0.0;
  GroupWord word;
  LatticeOffset offset;

  HalfSpacePoint top() const { return {center, radius}; }

  /// Power of a boundary point with respect to the circle: |z - c|^2 - r^2.
  double power(Complex z) const { return std::norm(z - center) - radius * radius; }

  /// Height of the hemisphere over z, or 0 outside the disk.
  double height(Complex z) const {
    const double h2 = radius * radius - std::norm(z - center);
    return h2 > 0.0 ? std::sqrt(h2) : 0.0;
  }
};

/// Centered at g^{-1}(infinity) = -d/c with radius 1/|c|.
inline IsoSphere isometric_sphere(const MoebiusMap& m, const Tolerances& tol = default_tolerances()) {
  if (std::abs(m.c()) <= tol.geom) throw FixesInfinity();
  return {-m.d() / m.c(), 1.0 / std::abs(m.c()), m.word(), -m.word().trailing_lattice()};
}

}  // namespace fordspine
