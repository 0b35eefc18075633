#pragma once

#include <sstream>

#include "support.hpp"

// Invariant checks shared by the property tests and the acceptance binary.
// Each draws its cases from a seeded generator and reports the first violation.

namespace fordspine::testing {

struct CheckResult {
  int cases = 0;
  int violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  bool ok() const { return violations == 0; }
};

/// Random lattice and trace; roughly one in eight comes back indiscrete.
inline Representation random_rep(Gen& gen) {
  const Complex a = std::polar(gen.real(3.0, 7.0), gen.real(-0.5, 0.5));
  const Complex b = a * Complex(gen.real(-0.5, 0.5), gen.real(0.8, 1.3));
  return standard_representation(a, b, gen.complex(-3.0, 3.0));
}

inline std::string describe(const Representation& rep) {
  std::ostringstream os;
  os << "a=" << rep.a() << " b=" << rep.b() << " c=" << rep.c();
  return os.str();
}

/// Agreement of two PSL(2, C) elements up to sign, as matrices.
inline double psl_distance(const MoebiusMap& x, const MoebiusMap& y) {
  auto d = [&](double s) {
    return std::max({std::abs(x.a() - s * y.a()), std::abs(x.b() - s * y.b()), std::abs(x.c() - s * y.c()), std::abs(x.d() - s * y.d())});
  };
  return std::min(d(1.0), d(-1.0));
}

inline double max_entry(const MoebiusMap& m) { return std::max({std::abs(m.a()), std::abs(m.b()), std::abs(m.c()), std::abs(m.d())}); }

/// Height at z of the upper envelope of all translates of `spheres`.
inline double envelope(const std::vector<IsoSphere>& spheres, const CuspLattice& lat, Complex z) {
  double h = 0.0;
  for (const IsoSphere& s : spheres) {
    for (const LatticeOffset& o : offsets_within(lat, s.center - z, s.radius)) h = std::max(h, translate(s, lat, o).height(z));
  }
  return h;
}

/// Every visible face has its inverse class visible, with the same radius.
inline CheckResult check_inverse_pairs(std::uint64_t seed, int cases) {
  CheckResult r;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const Representation rep = random_rep(gen);
    const FordDomain fd = run_procedure(rep);
    if (fd.status != RunStatus::Terminated) continue;
    ++r.cases;
    for (const FaceClass& f : fd.faces) {
      const int j = fd.face_index(f.core.inverse());
      if (j < 0 || f.inverse != j) {
        r.fail(describe(rep) + ": no inverse face for " + f.core.str());
      } else if (std::abs(fd.faces[static_cast<std::size_t>(j)].sphere.radius - f.sphere.radius) > 1e-9) {
        r.fail(describe(rep) + ": radius mismatch for " + f.core.str());
      }
    }
  }
  return r;
}

/// Passing edge classes close after exactly three steps with trivial
/// monodromy and angle sum 2 pi; the product of the stored face matrices
/// matches the recorded monodromy word.
inline CheckResult check_edge_closure(std::uint64_t seed, int cases) {
  CheckResult r;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const Representation rep = random_rep(gen);
    const FordDomain fd = run_procedure(rep);
    if (fd.status == RunStatus::IndiscreteSignal) continue;
    if (fd.status != RunStatus::Terminated || !fd.poincare.passed) {
      r.fail(describe(rep) + ": " + to_string(fd.status) + " " + fd.reason);
      continue;
    }
    ++r.cases;
    for (const EdgeClass& ec : fd.edges) {
      if (ec.steps() != 3) r.fail(describe(rep) + ": edge class with " + std::to_string(ec.steps()) + " faces");
      if (std::abs(ec.angle_sum - 2.0 * std::numbers::pi) >= 1e-9) r.fail(describe(rep) + ": angle sum");
      if (ec.monodromy_deviation >= 1e-9) r.fail(describe(rep) + ": monodromy");
      MoebiusMap product;
      for (const GroupWord& w : ec.out_words) product = compose(word_matrix(fd, w), product);
      if (psl_distance(product, evaluate_word(ec.monodromy_word, fd.rep).inverse()) / max_entry(product) > 1e-8) {
        r.fail(describe(rep) + ": monodromy word disagrees with the face matrices");
      }
    }
  }
  return r;
}

/// Recorded intersections and visible edges use offsets within the 7 x 7 window.
inline CheckResult check_offset_window(std::uint64_t seed, int cases) {
  CheckResult r;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const Representation rep = random_rep(gen);
    const FordDomain fd = run_procedure(rep);
    ++r.cases;
    for (const IntersectionRecord& x : fd.intersections) {
      if (std::abs(x.window.p) > 3 || std::abs(x.window.q) > 3) r.fail(describe(rep) + ": intersection offset outside the window");
    }
    for (const LatticeEdge& e : fd.lattice_edges) {
      if (std::abs(e.window_offset.p) > 3 || std::abs(e.window_offset.q) > 3) r.fail(describe(rep) + ": edge offset outside the window");
    }
  }
  return r;
}

/// Visible spheres of terminated runs are no larger than the shortest translation.
inline CheckResult check_shimizu_bound(std::uint64_t seed, int cases) {
  CheckResult r;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const Representation rep = random_rep(gen);
    const FordDomain fd = run_procedure(rep);
    if (fd.status != RunStatus::Terminated) continue;
    ++r.cases;
    const double bound = min_translation_length(fd.rep.lattice);
    for (const FaceClass& f : fd.faces) {
      if (f.sphere.radius > bound + 1e-9) r.fail(describe(rep) + ": visible " + f.core.str() + " exceeds the bound");
    }
  }
  return r;
}

/// The reduced basis realizes the two successive minima of the lattice,
/// against brute force over |p|, |q| <= 5 in the input basis.
inline CheckResult check_reduction(std::uint64_t seed, int cases) {
  CheckResult r;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const Complex u = std::polar(gen.real(0.5, 2.0), gen.real(-3.1, 3.1));
    const Complex v = u * Complex(gen.real(-1.0, 1.0), gen.real(0.6, 2.0)) + static_cast<double>(gen.integer(-2, 2)) * u;
    const CuspLattice lat = reduce(u, v);
    ++r.cases;
    double first = 1e300;
    for (int p = -5; p <= 5; ++p) {
      for (int q = -5; q <= 5; ++q) {
        if (p != 0 || q != 0) first = std::min(first, std::abs(static_cast<double>(p) * u + static_cast<double>(q) * v));
      }
    }
    double second = 1e300;
    for (int p = -5; p <= 5; ++p) {
      for (int q = -5; q <= 5; ++q) {
        const Complex w = static_cast<double>(p) * u + static_cast<double>(q) * v;
        if (std::abs(detail::cross(lat.a, w)) > 1e-9) second = std::min(second, std::abs(w));
      }
    }
    if (std::abs(std::abs(lat.a) - first) > 1e-9 || std::abs(min_translation_length(lat) - first) > 1e-9) r.fail("first minimum");
    if (std::abs(std::abs(lat.b) - second) > 1e-9) r.fail("second minimum");
  }
  return r;
}

/// The dominance half-plane of (s1, s2) is exactly where I(s1) is higher,
/// at random points inside both disks.
inline CheckResult check_dominance(std::uint64_t seed, int points) {
  CheckResult r;
  Gen gen(seed);
  while (r.cases < points) {
    const IsoSphere s1{gen.complex(-1.0, 1.0), gen.real(0.3, 2.0), GroupWord::gamma(), {}};
    const IsoSphere s2{gen.complex(-1.0, 1.0), gen.real(0.3, 2.0), GroupWord::gamma(-1), {}};
    const Complex z = s1.center + gen.real(0.0, s1.radius) * gen.unit();
    if (std::abs(z - s2.center) >= s2.radius) continue;
    const double gap = s1.height(z) - s2.height(z);
    if (std::abs(gap) < 1e-9) continue;
    ++r.cases;
    if (dominance_halfplane(s1, s2).contains(z) != (gap > 0.0)) r.fail("half-plane disagrees with heights");
  }
  return r;
}

/// At random points of the fundamental parallelogram, the visible faces are
/// at least as high as every sphere of weight <= 5 (translates included).
inline CheckResult check_upper_envelope(const Representation& rep, std::uint64_t seed, int points) {
  CheckResult r;
  const FordDomain fd = run_procedure(rep);
  const std::vector<IsoSphere> faces = fd.face_spheres();
  std::vector<IsoSphere> all;
  for (const GroupWord& w : core_words(5)) {
    const MoebiusMap m = evaluate_word(w, rep);
    if (std::abs(m.c()) > 1e-9) all.push_back(isometric_sphere(m));
  }
  Gen gen(seed);
  const CuspLattice& lat = rep.lattice;
  for (int i = 0; i < points; ++i) {
    const Complex z = gen.real(0.0, 1.0) * lat.a + gen.real(0.0, 1.0) * lat.b;
    ++r.cases;
    if (envelope(faces, lat, z) < envelope(all, lat, z) - 1e-9) {
      std::ostringstream os;
      os << describe(rep) << ": a sphere rises above the faces at " << z;
      r.fail(os.str());
    }
  }
  return r;
}

inline std::vector<std::string> oracle_faces(const Representation& rep, int bound) {
  std::vector<std::string> out;
  for (const GroupWord& w : brute_force_oracle(rep, bound).faces) out.push_back(w.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fordspine::testing
