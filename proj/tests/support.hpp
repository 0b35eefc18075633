#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fordspine/dual.hpp"
#include "fordspine/oracle.hpp"
#include "fordspine/path.hpp"

namespace fordspine::testing {

inline Representation simple_rep() { return standard_representation({6.0, 2.0}, {0.0, 4.5}, {2.0, 1.0}); }

/// gamma = [[-1 + i t, -1], [1, 0]] with a = 5 + i, b = 5.5 i.
inline Representation family_rep(double t) { return standard_representation({5.0, 1.0}, {0.0, 5.5}, {-1.0, t}); }

inline RepPath family_path(double from, double to, int samples) {
  RepPath p;
  p.t_start = from;
  p.t_end = to;
  p.samples = samples;
  p.a = Polynomial::constant({5.0, 1.0});
  p.b = Polynomial::constant({0.0, 5.5});
  p.c = Polynomial{{{-1.0, 0.0}, {0.0, 1.0}}};
  return p;
}

inline std::vector<std::string> face_labels(const FordDomain& fd) {
  std::vector<std::string> out;
  for (const FaceClass& f : fd.faces) out.push_back(f.core.str());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Seeded generator for the hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double lo, double hi) { return {real(lo, hi), real(lo, hi)}; }
  Complex unit() { return std::polar(1.0, real(-3.14159, 3.14159)); }

  /// A random element of SL(2, C) with entries of moderate size and c away from 0.
  MoebiusMap sl2(GroupWord w = {}) {
    for (;;) {
      const Complex a = complex(-2.0, 2.0), c = complex(-2.0, 2.0), d = complex(-2.0, 2.0);
      if (std::abs(a) < 0.2 || std::abs(c) < 0.3) continue;
      const Complex b = (a * d - 1.0) / c;
      if (std::abs(b) > 20.0) continue;
      return MoebiusMap(a, b, c, d, std::move(w));
    }
  }

  /// A random normal-form word with `blocks` syllables.
  GroupWord word(int blocks) {
    GroupWord w;
    bool lattice = integer(0, 1) == 1;
    for (int i = 0; i < blocks; ++i) {
      if (lattice) {
        LatticeOffset o{integer(-2, 2), integer(-2, 2)};
        if (o.is_zero()) o.p = 1;
        w = w * GroupWord::lattice(o);
      } else {
        int k = integer(-2, 2);
        if (k == 0) k = 1;
        w = w * GroupWord::gamma(k);
      }
      lattice = !lattice;
    }
    return w;
  }

  /// c in the region of the family studied in the examples, where the
  /// procedure terminates with a verified domain.
  Complex family_c() { return {real(-1.2, 0.3), real(0.8, 2.2)}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fordspine::testing
