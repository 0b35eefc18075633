#pragma once

#include <string>
#include <vector>

namespace fordspine {

struct Preset {
  std::string name;
  std::string description;
  std::string config;  // JSON accepted by parse_rep_config
};

/// Named configurations. Paths sample gamma = [[-1 + i t, -1], [1, 0]] with
/// a = 5 + i, b = 5.5 i held fixed.
inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"simple", "single face pair, c = 2 + i, a = 6 + 2i, b = 4.5i", R"({"a":[6,2],"b":[0,4.5],"c":[2,1]})"},
      {"bumping-t1.2", "gamma^{+-1} and gamma^{+-2} faces after the spheres of gamma and gamma^{-1} bump",
       R"({"a":[5,1],"b":[0,5.5],"c":[-1,1.2]})"},
      {"sliding-t0.8", "gamma^{+-3} faces after gamma^{+-2} slides into gamma^{+-1}", R"({"a":[5,1],"b":[0,5.5],"c":[-1,0.8]})"},
      {"tangent-sqrt3", "gamma and gamma^{-1} spheres visibly tangent at t = sqrt(3)",
       R"({"a":[5,1],"b":[0,5.5],"c":[-1,1.7320508075688772]})"},
      {"bumping-path", "t from 2 down to 1.2", R"({"t_range":[2,1.2],"samples":64,"entries":{"a":[5,1],"b":[0,5.5],"c":[[-1,0],[0,1]]}})"},
      {"sliding-path", "t from 1.2 down to 0.8",
       R"({"t_range":[1.2,0.8],"samples":64,"entries":{"a":[5,1],"b":[0,5.5],"c":[[-1,0],[0,1]]}})"},
      {"tunnel-path", "t from 2 down to 0.8, both moves in sequence",
       R"({"t_range":[2,0.8],"samples":128,"entries":{"a":[5,1],"b":[0,5.5],"c":[[-1,0],[0,1]]}})"},
      {"shimizu-violation", "sphere radius 1 against a lattice of translation length 0.5",
       R"({"a":[0.5,0],"b":[0,0.5],"c":[3,0]})"},
      {"shimizu-radius2", "gamma with isometric sphere of radius 2 against the lattice (1, i)",
       R"({"alpha":[[[1,0],[1,0]],[[0,0],[1,0]]],"beta":[[[1,0],[0,1]],[[0,0],[1,0]]],"gamma":[[[3,0],[-2,0]],[[0.5,0],[0,0]]]})"},
      {"malformed-alpha", "alpha is not parabolic at the fixed point of beta",
       R"({"alpha":[[[1,0],[5,0]],[[1,0],[1,0]]],"beta":[[[1,0],[0,1]],[[0,0],[1,0]]],"gamma":[[[3,0],[-2,0]],[[0.5,0],[0,0]]]})"},
      {"constant-path", "the simple representation held fixed", R"({"t_range":[0,1],"samples":16,"entries":{"a":[6,2],"b":[0,4.5],"c":[2,1]}})"},
  };
  return table;
}

inline const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace fordspine
