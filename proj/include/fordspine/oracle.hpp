#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "fordspine/ford_engine.hpp"

namespace fordspine {

/// Every core word (starting and ending with a gamma block) of weight at
/// most `max_weight`. Lattice blocks count |p| + |q| letters.
inline std::vector<GroupWord> core_words(int max_weight) {
  std::vector<GroupWord> out;
  auto grow = [&](auto&& self, const GroupWord& w, int remaining) -> void {
    out.push_back(w);
    for (int m = 1; m < remaining; ++m) {
      for (int p = -m; p <= m; ++p) {
        const int rest = m - std::abs(p);
        for (int q : {-rest, rest}) {
          const GroupWord l = w * GroupWord::lattice({p, q});
          for (int k = 1; k <= remaining - m; ++k) {
            self(self, l * GroupWord::gamma(k), remaining - m - k);
            self(self, l * GroupWord::gamma(-k), remaining - m - k);
          }
          if (rest == 0) break;
        }
      }
    }
  };
  for (int k = 1; k <= max_weight; ++k) {
    grow(grow, GroupWord::gamma(k), max_weight - k);
    grow(grow, GroupWord::gamma(-k), max_weight - k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleResult {
  std::vector<GroupWord> faces;  // visible cores, sorted
  std::size_t enumerated = 0;
  std::size_t survivors = 0;     // not covered by any single sphere
};

/// Enumerates every element up to the weight bound and keeps the spheres
/// visible with respect to all the others. Independent of the discovery order
/// of the drawing procedure; shares only the geometric primitives.
inline OracleResult brute_force_oracle(const Representation& rep, int max_weight, const Tolerances& tol = default_tolerances()) {
  OracleResult res;
  if (max_weight <= 0) return res;
  const CuspLattice& lat = rep.lattice;
  std::vector<IsoSphere> spheres;
  for (const GroupWord& w : core_words(max_weight)) {
    const MoebiusMap m = evaluate_word(w, rep);
    if (std::abs(m.c()) <= tol.geom) continue;
    spheres.push_back(isometric_sphere(m, tol));
  }
  res.enumerated = spheres.size();
  std::stable_sort(spheres.begin(), spheres.end(), [](const IsoSphere& a, const IsoSphere& b) { return a.radius > b.radius; });

  // Single-sphere coverage (or equality mod Gamma_inf) by an earlier, larger survivor.
  std::vector<IsoSphere> survivors;
  for (const IsoSphere& s : spheres) {
    bool covered = false;
    for (const IsoSphere& t : survivors) {
      for (const LatticeOffset& o : offsets_within(lat, t.center - s.center, t.radius - s.radius + tol.tangent)) {
        const SphereRelation rel = sphere_relation(translate(t, lat, o), s, tol);
        if (rel == SphereRelation::Covered || rel == SphereRelation::Equal || rel == SphereRelation::InternallyTangent) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) survivors.push_back(s);
  }
  res.survivors = survivors.size();
  for (const IsoSphere& s : survivors) {
    if (visible_wrt(s, survivors, lat, tol)) res.faces.push_back(s.word.core());
  }
  std::sort(res.faces.begin(), res.faces.end());
  return res;
}

}  // namespace fordspine
