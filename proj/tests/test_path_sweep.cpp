#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace fordspine;
using fordspine::testing::family_path;

namespace {

// Domain with hand-placed faces (no group behind them) on a lattice too coarse to matter.
FordDomain synthetic_domain(const std::vector<std::pair<GroupWord, IsoSphere>>& faces) {
  FordDomain fd;
  fd.rep.lattice = reduce(100.0, {0.0, 100.0});
  for (const auto& [w, s] : faces) {
    FaceClass f;
    f.core = w;
    f.word = w;
    f.sphere = s;
    fd.faces.push_back(f);
  }
  std::sort(fd.faces.begin(), fd.faces.end(), [](const FaceClass& a, const FaceClass& b) { return a.core < b.core; });
  analyze_arrangement(fd);
  return fd;
}

// Four disks of radius 1.5 at +-1 and +-i y: the middle edge flips as y crosses 1.
FordDomain four_disks(double y) {
  auto s = [](Complex c, GroupWord w) { return std::make_pair(w, IsoSphere{c, 1.5, w, {}}); };
  return synthetic_domain({s(-1.0, GroupWord::gamma(1)), s(1.0, GroupWord::gamma(-1)), s({0.0, y}, GroupWord::gamma(2)),
                           s({0.0, -y}, GroupWord::gamma(-2))});
}

DomainSummary terminated(double t, bool gamma) {
  DomainSummary s;
  s.t = t;
  s.faces = {"G", "g"};
  s.gamma_visible = gamma;
  return s;
}

}  // namespace

TEST(PathSweep, PolynomialEvaluation) {
  const Polynomial p{{{1.0, 0.0}, {0.0, 2.0}, {3.0, -1.0}}};
  for (const double t : {-2.0, 0.0, 0.5, 3.0}) {
    const Complex want = Complex(1.0, 0.0) + Complex(0.0, 2.0) * t + Complex(3.0, -1.0) * t * t;
    EXPECT_NEAR(std::abs(p.at(t) - want), 0.0, 1e-12);
  }
  EXPECT_EQ(Polynomial::constant({2.0, 1.0}).at(7.0), Complex(2.0, 1.0));
  const RepPath path = family_path(2.0, 1.2, 5);
  EXPECT_DOUBLE_EQ(path.sample_t(0), 2.0);
  EXPECT_DOUBLE_EQ(path.sample_t(4), 1.2);
  EXPECT_NEAR(std::abs(path.at(1.5).c() - Complex(-1.0, 1.5)), 0.0, 1e-12);
}

TEST(PathSweep, BumpingEventBracketsSqrtThree) {
  const SweepResult r = sweep(family_path(2.0, 1.2, 64));
  ASSERT_EQ(r.events.size(), 1u);
  const PathEvent& e = r.events[0];
  EXPECT_EQ(e.kind, EventKind::Bumping);
  EXPECT_LE(e.t_lo, std::sqrt(3.0));
  EXPECT_GE(e.t_hi, std::sqrt(3.0));
  EXPECT_LE(e.t_hi - e.t_lo, 0.8 / 1e4 + 1e-15);
  // Direction of travel is decreasing t.
  EXPECT_GT(e.t_before, e.t_after);
  EXPECT_TRUE(r.violations.empty());
}

TEST(PathSweep, SlidingEventNearOne) {
  const SweepResult r = sweep(family_path(1.2, 0.8, 64));
  ASSERT_EQ(r.events.size(), 1u);
  const PathEvent& e = r.events[0];
  EXPECT_EQ(e.kind, EventKind::Sliding);
  EXPECT_GE(e.t_lo, 0.95);
  EXPECT_LE(e.t_hi, 1.05);
  EXPECT_TRUE(r.violations.empty());
}

TEST(PathSweep, ReversedPathReversesTheMove) {
  const SweepResult r = sweep(family_path(1.2, 2.0, 32));
  ASSERT_EQ(r.events.size(), 1u);
  EXPECT_EQ(r.events[0].kind, EventKind::ReverseBumping);
  const SweepResult s = sweep(family_path(0.8, 1.2, 32));
  ASSERT_EQ(s.events.size(), 1u);
  EXPECT_EQ(s.events[0].kind, EventKind::ReverseSliding);
}

TEST(PathSweep, ConstantPathHasNoEvents) {
  RepPath p;
  p.t_start = 0.0;
  p.t_end = 1.0;
  p.samples = 16;
  p.a = Polynomial::constant({6.0, 2.0});
  p.b = Polynomial::constant({0.0, 4.5});
  p.c = Polynomial::constant({2.0, 1.0});
  const SweepResult r = sweep(p);
  EXPECT_TRUE(r.events.empty());
  EXPECT_EQ(r.timeline.size(), 16u);
  for (const DomainSummary& s : r.timeline) EXPECT_TRUE(s.same_combinatorics(r.timeline.front()));
  const TunnelPathResult t = certify_timeline(r.timeline);
  EXPECT_TRUE(t.certified);
  EXPECT_TRUE(t.start_simple);
}

TEST(PathSweep, InternalFlip) {
  const FordDomain before = four_disks(0.9), after = four_disks(1.1);
  ASSERT_EQ(summarize(before, 0).crossings, summarize(after, 0).crossings);
  ASSERT_NE(summarize(before, 0).edges, summarize(after, 0).edges);
  const PathEvent e = classify_event(before, after);
  EXPECT_EQ(e.kind, EventKind::Internal);
  EXPECT_FALSE(e.witnesses.empty());
}

TEST(PathSweep, TunnelCertification) {
  std::vector<DomainSummary> line{terminated(0.0, true), terminated(0.5, true), terminated(1.0, true)};
  EXPECT_TRUE(certify_timeline(line).certified);
  line[2].gamma_visible = false;
  const TunnelPathResult r = certify_timeline(line);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.witness_sample, 2);
}

TEST(PathSweep, PathBrokenNamesTheSample) {
  std::vector<DomainSummary> line{terminated(0.0, true), terminated(0.25, true), terminated(0.5, true), terminated(0.75, true)};
  line[2].status = RunStatus::BudgetExhausted;
  try {
    certify_timeline(line);
    FAIL() << "expected PathBroken";
  } catch (const PathBroken& e) {
    EXPECT_EQ(e.sample(), 2);
  }
  line[2].status = RunStatus::Terminated;
  line[1].valid = false;
  EXPECT_THROW(certify_timeline(line), PathBroken);
}

TEST(PathSweep, InvalidSampleIsMarked) {
  // c(t) = 1.5 + t is parabolic at t = 0.5.
  RepPath p;
  p.t_start = 0.0;
  p.t_end = 1.0;
  p.samples = 3;
  p.a = Polynomial::constant({6.0, 2.0});
  p.b = Polynomial::constant({0.0, 4.5});
  p.c = Polynomial{{{1.5, 0.0}, {1.0, 0.0}}};
  const SweepSample s = run_sample(p, 0.5, {}, default_tolerances());
  EXPECT_FALSE(s.summary.valid);
  EXPECT_FALSE(s.domain.has_value());
  EXPECT_FALSE(s.summary.reason.empty());
  const SweepResult r = sweep(p);
  EXPECT_FALSE(r.timeline[1].valid);
  EXPECT_THROW(certify_timeline(r.timeline), PathBroken);
}
