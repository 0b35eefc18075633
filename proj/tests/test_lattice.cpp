#include <gtest/gtest.h>

#include "support.hpp"

using namespace fordspine;
using fordspine::testing::Gen;

namespace {

// Non-degenerate lattice with a random (usually unreduced) input basis.
CuspLattice random_lattice(Gen& gen) {
  const Complex u = std::polar(gen.real(0.5, 2.0), gen.real(-3.1, 3.1));
  const Complex v = u * Complex(gen.real(-1.0, 1.0), gen.real(0.6, 2.0));
  const int k = gen.integer(-4, 4);
  return reduce(u, v + static_cast<double>(k) * u);
}

}  // namespace

TEST(Lattice, ReductionConditions) {
  const CuspLattice lat = reduce({5.0, 1.0}, {0.0, 5.5});
  EXPECT_LE(std::abs(lat.a), std::abs(lat.b) + 1e-12);
  EXPECT_LE(std::abs(lat.b), std::abs(lat.a - lat.b) + 1e-12);
  EXPECT_LE(std::abs(lat.a - lat.b), std::abs(lat.a + lat.b) + 1e-12);
  EXPECT_GT(lat.a.imag(), 0.0);
  // The change of basis is unimodular and consistent with vec.
  const int det = lat.change[0][0] * lat.change[1][1] - lat.change[0][1] * lat.change[1][0];
  EXPECT_EQ(std::abs(det), 1);
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      const LatticeOffset r{p, q};
      EXPECT_NEAR(std::abs(lat.vec(lat.to_input(r)) - lat.reduced_vec(r)), 0.0, 1e-12);
      EXPECT_EQ(lat.to_reduced(lat.to_input(r)), r);
    }
  }
}

TEST(Lattice, SkewInputIsReduced) {
  // a and b = 7a + i: the reduced basis is {i, a} up to sign.
  const CuspLattice lat = reduce(1.0, {7.0, 1.0});
  EXPECT_NEAR(min_translation_length(lat), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(lat.b), 1.0, 1e-12);
}

TEST(Lattice, DegenerateThrows) {
  EXPECT_THROW(reduce(1.0, 2.0), DegenerateLattice);
  EXPECT_THROW(reduce(0.0, 1.0), DegenerateLattice);
  EXPECT_THROW(reduce({1.0, 1.0}, {-2.0, -2.0}), DegenerateLattice);
}

TEST(Lattice, NearestTranslateMatchesBruteForce) {
  Gen gen(21);
  for (int i = 0; i < 300; ++i) {
    const CuspLattice lat = random_lattice(gen);
    const Complex target = gen.complex(-20.0, 20.0), base = gen.complex(-5.0, 5.0);
    const LatticeOffset r = nearest_translate(lat, target, base);
    const double got = std::abs(target - base - lat.reduced_vec(r));
    double best = 1e300;
    for (int p = -60; p <= 60; ++p) {
      for (int q = -60; q <= 60; ++q) best = std::min(best, std::abs(target - base - lat.reduced_vec({p, q})));
    }
    EXPECT_NEAR(got, best, 1e-9);
  }
}

TEST(Lattice, NeighborWindow) {
  const auto& w = neighbor_offsets();
  ASSERT_EQ(w.size(), 49u);
  EXPECT_EQ(w.front(), (LatticeOffset{-3, -3}));
  EXPECT_EQ(w.back(), (LatticeOffset{3, 3}));
}

TEST(Lattice, OffsetsWithinMatchesBruteForce) {
  Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const CuspLattice lat = random_lattice(gen);
    const Complex delta = gen.complex(-4.0, 4.0);
    const double radius = gen.real(0.1, 6.0);
    auto got = offsets_within(lat, delta, radius);
    std::vector<LatticeOffset> want;
    for (int p = -40; p <= 40; ++p) {
      for (int q = -40; q <= 40; ++q) {
        if (std::abs(delta + lat.reduced_vec({p, q})) < radius) want.push_back(lat.to_input({p, q}));
      }
    }
    for (const LatticeOffset& o : got) EXPECT_LT(std::abs(delta + lat.vec(o)), radius);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}

TEST(Lattice, ParallelogramOffsetIsHalfOpen) {
  const CuspLattice lat = reduce({5.0, 1.0}, {0.0, 5.5});
  Gen gen(23);
  for (int i = 0; i < 500; ++i) {
    const Complex z = gen.complex(-30.0, 30.0);
    const Complex moved = z + lat.vec(parallelogram_offset(lat, z));
    const auto xy = lat.coords(moved);
    EXPECT_GE(xy[0], 0.0);
    EXPECT_LT(xy[0], 1.0);
    EXPECT_GE(xy[1], 0.0);
    EXPECT_LT(xy[1], 1.0);
  }
  // Lattice points land on the origin, edges on the closed side.
  EXPECT_EQ(lat.vec(parallelogram_offset(lat, lat.a)), -lat.a);
  EXPECT_NEAR(std::abs(lat.b + lat.vec(parallelogram_offset(lat, lat.b))), 0.0, 1e-12);
}

TEST(Lattice, TranslateAgreesWithTheTranslatedWord) {
  const Representation rep = fordspine::testing::family_rep(0.8);
  const IsoSphere s = isometric_sphere(evaluate_word(GroupWord::gamma(2), rep));
  for (const LatticeOffset o : {LatticeOffset{1, 0}, LatticeOffset{-2, 3}, LatticeOffset{0, -1}}) {
    const IsoSphere t = translate(s, rep.lattice, o);
    // Independently: I(w * tau^{-1}) is the sphere of the matrix product.
    const IsoSphere direct = isometric_sphere(evaluate_word(t.word, rep));
    EXPECT_NEAR(std::abs(direct.center - t.center), 0.0, 1e-9);
    EXPECT_NEAR(direct.radius, t.radius, 1e-12);
    EXPECT_EQ(t.offset, o);
  }
}

TEST(Lattice, TranslatesInWindow) {
  const CuspLattice lat = reduce(1.0, {0.0, 1.0});
  const IsoSphere s{{0.25, 0.25}, 0.1, GroupWord::gamma(), {}};
  const Rectangle w{-2.0, -2.0, 2.0, 2.0};
  const auto list = translates_in_window(lat, s, w);
  EXPECT_EQ(list.size(), 16u);  // centers at 0.25 + k for k = -2..1 in each direction
  for (const IsoSphere& t : list) EXPECT_LT(w.distance(t.center), t.radius);
}
