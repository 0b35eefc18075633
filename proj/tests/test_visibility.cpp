#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace fordspine;
using fordspine::testing::Gen;

namespace {

IsoSphere sph(Complex c, double r, GroupWord w = GroupWord::gamma()) { return {c, r, std::move(w), {}}; }

// Area of the part of D(s) where the point of I(s) above z lies outside every
// closed ball of the obstacles, by midpoint sampling on an n x n grid.
double grid_exposed_area(const IsoSphere& s, const std::vector<IsoSphere>& obstacles, int n) {
  const double r = s.radius, step = 2.0 * r / n;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex z = s.center + Complex(-r + (i + 0.5) * step, -r + (j + 0.5) * step);
      const double h2 = r * r - std::norm(z - s.center);
      if (h2 <= 0.0) continue;
      bool exposed = true;
      for (const IsoSphere& k : obstacles) {
        if (std::norm(z - k.center) + h2 <= k.radius * k.radius) {
          exposed = false;
          break;
        }
      }
      hits += exposed ? 1 : 0;
    }
  }
  return hits * step * step;
}

}  // namespace

TEST(Visibility, RelationBands) {
  const IsoSphere u = sph(0.0, 1.0);
  EXPECT_EQ(sphere_relation(u, sph(3.0, 1.0)), SphereRelation::Disjoint);
  EXPECT_EQ(sphere_relation(u, sph(2.0 + 5e-8, 1.0)), SphereRelation::ExternallyTangent);
  EXPECT_EQ(sphere_relation(u, sph(2.0 + 5e-7, 1.0)), SphereRelation::Disjoint);
  EXPECT_EQ(sphere_relation(u, sph(1.0, 1.0)), SphereRelation::TwoPointIntersection);
  EXPECT_EQ(sphere_relation(u, sph(0.5, 0.5)), SphereRelation::InternallyTangent);
  EXPECT_EQ(sphere_relation(u, sph(0.1, 0.5)), SphereRelation::Covered);
  EXPECT_EQ(sphere_relation(sph(0.1, 0.5), u), SphereRelation::CoveredBy);
  EXPECT_EQ(sphere_relation(u, sph(1e-8, 1.0 + 1e-8)), SphereRelation::Equal);
}

TEST(Visibility, ExposedAreaMatchesGrid) {
  Gen gen(31);
  for (int i = 0; i < 40; ++i) {
    const IsoSphere s = sph(0.0, gen.real(0.5, 1.5));
    std::vector<IsoSphere> obs;
    const int n = gen.integer(1, 4);
    for (int k = 0; k < n; ++k) obs.push_back(sph(gen.complex(-1.8, 1.8), gen.real(0.3, 1.4)));
    const double exact = exposed_region(s, obs).area;
    const double approx = grid_exposed_area(s, obs, 600);
    // Boundary cells dominate the grid error.
    EXPECT_NEAR(exact, approx, 0.03 * s.radius * s.radius) << "case " << i;
  }
}

TEST(Visibility, UnobstructedAndCovered) {
  const IsoSphere s = sph(0.0, 1.0);
  EXPECT_NEAR(exposed_region(s, {}).area, std::numbers::pi, 1e-12);
  const std::vector<IsoSphere> big{sph(0.2, 2.0)};
  const VisibilityResult r = exposed_region(s, big);
  EXPECT_FALSE(r.visible);
  EXPECT_EQ(r.area, 0.0);
}

TEST(Visibility, HalfCoveredByEqualSphere) {
  // Equal radii: the radical line is the perpendicular bisector.
  const IsoSphere s = sph(0.0, 1.0);
  const std::vector<IsoSphere> obs{sph(1.0, 1.0)};
  const double lens_half = std::acos(0.5) - 0.5 * std::sqrt(0.75);
  EXPECT_NEAR(exposed_region(s, obs).area, std::numbers::pi - lens_half, 1e-12);
}

TEST(Visibility, SurroundedSphereIsHidden) {
  // Hidden under the union of translates but not under any single sphere.
  const CuspLattice lat = reduce(1.0, {0.0, 1.0});
  const std::vector<IsoSphere> others{sph(0.0, 0.75, GroupWord::gamma(2))};
  const IsoSphere s = sph({0.5, 0.5}, 0.2);
  EXPECT_FALSE(visible_wrt(s, others, lat));
  EXPECT_TRUE(visible_wrt(sph({0.5, 0.5}, 0.45), others, lat));
}

TEST(Visibility, MarginalBand) {
  const Tolerances tol;
  const IsoSphere s = sph(0.0, 1.0);
  // Radius sqrt(4 - 2e) at -1 puts the radical line at x = 1 - e, leaving a segment of height e.
  auto sliver = [&](double e) { return exposed_region(s, std::vector<IsoSphere>{sph(-1.0, std::sqrt(4.0 - 2.0 * e))}, tol); };
  double lo = 0.0, hi = 1e-6;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (lo + hi);
    (sliver(m).area < 5e-13 ? lo : hi) = m;
  }
  const VisibilityResult mid = sliver(lo);
  EXPECT_FALSE(mid.visible);
  EXPECT_TRUE(mid.marginal);
  EXPECT_NEAR(mid.area, 5e-13, 1e-14);
  EXPECT_FALSE(sliver(1e-12).marginal);
  EXPECT_FALSE(sliver(1e-12).visible);
  EXPECT_TRUE(sliver(1e-4).visible);
  EXPECT_FALSE(sliver(1e-4).marginal);
}

TEST(Visibility, ChordEndpointsLieOnBothCircles) {
  Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    const IsoSphere s1 = sph(gen.complex(-1, 1), gen.real(0.5, 2.0));
    const IsoSphere s2 = sph(gen.complex(-1, 1), gen.real(0.5, 2.0));
    if (sphere_relation(s1, s2) != SphereRelation::TwoPointIntersection) {
      EXPECT_THROW(chord_of(s1, s2), NoIntersection);
      continue;
    }
    const EdgeArc arc = chord_of(s1, s2);
    for (const Complex p : {arc.chord_start, arc.chord_end}) {
      EXPECT_NEAR(std::abs(p - s1.center), s1.radius, 1e-9);
      EXPECT_NEAR(std::abs(p - s2.center), s2.radius, 1e-9);
    }
    // Along the chord both hemispheres have equal height.
    const Complex z = arc.point(gen.real(0.0, 1.0));
    EXPECT_NEAR(s1.height(z), s2.height(z), 1e-7);
  }
}

TEST(Visibility, ClipEdgeAtThirdSphere) {
  // Two unit spheres at -0.5 and 0.5; the chord is x = 0, y in [-sqrt(3)/2, sqrt(3)/2].
  const IsoSphere s1 = sph(-0.5, 1.0), s2 = sph(0.5, 1.0);
  const EdgeArc arc = chord_of(s1, s2);
  // A third unit sphere at 1.5 i: equal power with s1 along a line crossing the chord at y0.
  const IsoSphere k = sph({0.0, 1.5}, 1.0);
  const EdgeArc clipped = clip_edge(arc, std::vector<IsoSphere>{k});
  ASSERT_TRUE(clipped.visible());
  ASSERT_EQ(clipped.visible_subarcs.size(), 1u);
  const auto& sub = clipped.visible_subarcs[0];
  const Complex end = clipped.point(sub.to > sub.from ? (arc.chord_end.imag() > 0 ? sub.to : sub.from) : sub.to);
  // The cut point is equidistant (in power) from s1 and k: triple intersection.
  EXPECT_NEAR(s1.power(end), k.power(end), 1e-9);
  EXPECT_NEAR(end.real(), 0.0, 1e-12);
  // |z + 0.5|^2 = |z - 1.5i|^2 on x = 0 gives y = (2.25 - 0.25) / 3.
  EXPECT_NEAR(end.imag(), 2.0 / 3.0, 1e-12);
  const int cut = arc.chord_end.imag() > 0 ? sub.cut_to : sub.cut_from;
  ASSERT_GE(cut, 0);
  EXPECT_NEAR(std::abs(clipped.cutters[static_cast<std::size_t>(cut)].center - k.center), 0.0, 1e-12);
  // A huge sphere swallows the edge.
  EXPECT_FALSE(clip_edge(arc, std::vector<IsoSphere>{sph(0.0, 5.0)}).visible());
}

TEST(Visibility, VisiblyTangent) {
  const IsoSphere s1 = sph(-1.0, 1.0), s2 = sph(1.0, 1.0);
  EXPECT_NEAR(std::abs(tangency_point(s1, s2)), 0.0, 1e-15);
  EXPECT_TRUE(visibly_tangent(s1, s2, std::vector<IsoSphere>{}));
  EXPECT_FALSE(visibly_tangent(s1, s2, std::vector<IsoSphere>{sph({0.0, 0.5}, 0.6)}));
  EXPECT_TRUE(visibly_tangent(s1, s2, std::vector<IsoSphere>{sph({0.0, 0.5}, 0.4)}));
  EXPECT_FALSE(visibly_tangent(s1, sph(1.5, 1.0), std::vector<IsoSphere>{}));
  // A translate covering the point counts.
  const CuspLattice lat = reduce(10.0, {0.0, 10.0});
  EXPECT_FALSE(visibly_tangent(s1, s2, std::vector<IsoSphere>{sph({10.0, 0.2}, 0.5)}, &lat));
  EXPECT_TRUE(visibly_tangent(s1, s2, std::vector<IsoSphere>{sph({10.0, 0.2}, 0.5)}));
}

TEST(Visibility, DihedralAngle) {
  const IsoSphere u = sph(0.0, 1.0);
  EXPECT_NEAR(dihedral_angle(u, sph(std::sqrt(2.0), 1.0)), std::numbers::pi / 2.0, 1e-12);
  EXPECT_NEAR(dihedral_angle(u, sph(1.0, 1.0)), 2.0 * std::numbers::pi / 3.0, 1e-12);
  EXPECT_EQ(dihedral_angle(u, sph(2.0, 1.0)), 0.0);
  EXPECT_THROW(dihedral_angle(u, sph(5.0, 1.0)), NoIntersection);
  Gen gen(33);
  for (int i = 0; i < 500; ++i) {
    const double r1 = gen.real(0.3, 2.0), r2 = gen.real(0.3, 2.0);
    const double d = gen.real(std::abs(r1 - r2) + 1e-3, r1 + r2 - 1e-3);
    const IsoSphere a = sph(gen.complex(-2, 2), r1);
    const IsoSphere b = sph(a.center + d * gen.unit(), r2);
    const double want = std::acos((d * d - r1 * r1 - r2 * r2) / (2.0 * r1 * r2));
    EXPECT_NEAR(dihedral_angle(a, b), want, 1e-7);
    EXPECT_NEAR(dihedral_angle(a, b), dihedral_angle(b, a), 1e-12);
  }
}

TEST(Visibility, ShimizuBound) {
  const CuspLattice lat = reduce(1.0, {0.0, 1.0});
  const std::vector<IsoSphere> fine{sph(0.0, 0.9), sph(0.5, 1.0)};
  EXPECT_TRUE(shimizu_check(fine, lat).ok);
  const std::vector<IsoSphere> bad{sph(0.0, 0.9), sph(0.5, 2.0, GroupWord::gamma(3))};
  const ShimizuResult r = shimizu_check(bad, lat);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.word, GroupWord::gamma(3));
  EXPECT_DOUBLE_EQ(r.radius, 2.0);
  EXPECT_DOUBLE_EQ(r.bound, 1.0);
}

TEST(Visibility, DominanceHalfPlaneIsHeightComparison) {
  Gen gen(34);
  for (int i = 0; i < 2000; ++i) {
    const IsoSphere s1 = sph(gen.complex(-1, 1), gen.real(0.3, 2.0));
    const IsoSphere s2 = sph(gen.complex(-1, 1), gen.real(0.3, 2.0));
    const Complex z = s1.center + gen.real(0.0, s1.radius) * gen.unit();
    if (std::abs(z - s2.center) >= s2.radius) continue;
    const double gap = s1.height(z) - s2.height(z);
    if (std::abs(gap) < 1e-9) continue;
    EXPECT_EQ(dominance_halfplane(s1, s2).contains(z), gap > 0.0);
  }
}
