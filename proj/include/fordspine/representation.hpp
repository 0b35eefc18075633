#pragma once

#include <optional>
#include <string>

#include "fordspine/lattice.hpp"

namespace fordspine {

/// Images of alpha, beta, gamma in standard form.
///
/// `gamma` is rho(gamma) itself; `gamma_shift` is the lattice element tau for
/// which tau * gamma sends infinity into the fundamental parallelogram based at
/// gamma^{-1}(infinity) = 0. Words always use the input generators.
struct Representation {
  MoebiusMap alpha, beta, gamma;
  CuspLattice lattice;
  LatticeOffset gamma_shift;
  bool normalized = false;

  /// The shifted loxodromic generator tau * gamma.
  GroupWord gamma_word() const { return GroupWord::lattice(gamma_shift) * GroupWord::gamma(); }
  MoebiusMap normalized_gamma() const;

  Complex a() const { return lattice.input_a; }
  Complex b() const { return lattice.input_b; }
  /// Trace of gamma with the sign that makes its lower-left entry 1 in standard form.
  Complex c() const {
    const Complex lower = gamma.c();
    const bool flip = lower.real() < 0.0 || (lower.real() == 0.0 && lower.imag() < 0.0);
    return flip ? -(gamma.a() + gamma.d()) : gamma.a() + gamma.d();
  }
};

inline MoebiusMap lattice_element(const CuspLattice& lat, LatticeOffset o) {
  return MoebiusMap::translation(lat.vec(o), GroupWord::lattice(o));
}

namespace detail {

struct Mat {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

inline Mat power(const Mat& m, int k) {
  Mat base = k >= 0 ? m : Mat{m.d, -m.b, -m.c, m.a};
  Mat out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

}  // namespace detail

/// Matrix of an abstract word, in generator order.
inline MoebiusMap evaluate_word(const GroupWord& w, const Representation& rep) {
  detail::Mat m;
  const detail::Mat g{rep.gamma.a(), rep.gamma.b(), rep.gamma.c(), rep.gamma.d()};
  for (const Syllable& s : w.syllables()) {
    if (s.kind == Syllable::Kind::Lattice) {
      m = m * detail::Mat{1.0, rep.lattice.vec(s.lattice), 0.0, 1.0};
    } else {
      m = m * detail::power(g, s.power);
    }
  }
  return MoebiusMap(m.a, m.b, m.c, m.d, w);
}

inline MoebiusMap Representation::normalized_gamma() const { return evaluate_word(gamma_word(), *this); }

namespace detail {

inline Representation finish_normalization(const MoebiusMap& alpha, const MoebiusMap& beta, const MoebiusMap& gamma,
                                           const Tolerances& tol) {
  if (std::abs(gamma.c()) <= tol.geom) throw NotLoxodromic();
  Representation rep;
  rep.alpha = MoebiusMap(alpha.a(), alpha.b(), alpha.c(), alpha.d(), GroupWord::alpha(), tol);
  rep.beta = MoebiusMap(beta.a(), beta.b(), beta.c(), beta.d(), GroupWord::beta(), tol);
  rep.gamma = MoebiusMap(gamma.a(), gamma.b(), gamma.c(), gamma.d(), GroupWord::gamma(), tol);
  rep.lattice = reduce(alpha.b() / alpha.a(), beta.b() / beta.a(), tol);
  const Complex image_inf = rep.gamma.a() / rep.gamma.c();
  const Complex base = -rep.gamma.d() / rep.gamma.c();
  rep.gamma_shift = parallelogram_offset(rep.lattice, image_inf, base);
  rep.normalized = true;
  return rep;
}

inline void require_parabolic(const MoebiusMap& m, const char* which, const Tolerances& tol) {
  if (classify(m, tol) != ElementType::Parabolic) throw NotParabolic(which);
}

}  // namespace detail

/// Standard form alpha = [[1, a], [0, 1]], beta = [[1, b], [0, 1]], gamma = [[c, -1], [1, 0]].
inline Representation standard_representation(Complex a, Complex b, Complex c, const Tolerances& tol = default_tolerances()) {
  const MoebiusMap alpha(1.0, a, 0.0, 1.0, GroupWord::alpha(), tol);
  const MoebiusMap beta(1.0, b, 0.0, 1.0, GroupWord::beta(), tol);
  const MoebiusMap gamma(c, -1.0, 1.0, 0.0, GroupWord::gamma(), tol);
  detail::require_parabolic(alpha, "alpha", tol);
  detail::require_parabolic(beta, "beta", tol);
  if (classify(gamma, tol) != ElementType::Loxodromic) throw NotLoxodromic();
  return detail::finish_normalization(alpha, beta, gamma, tol);
}

/// Conjugates arbitrary generator matrices into standard form.
///
/// The common fixed point of alpha and beta goes to infinity by
/// z -> -1/(z - z0); then z -> r z + s, with gamma = [[p, q], [r, s]], puts
/// gamma^{-1}(infinity) at 0 and makes the lower-left entry of gamma one.
inline Representation normalize_representation(const MoebiusMap& alpha_in, const MoebiusMap& beta_in, const MoebiusMap& gamma_in,
                                               const Tolerances& tol = default_tolerances()) {
  detail::require_parabolic(alpha_in, "alpha", tol);
  detail::require_parabolic(beta_in, "beta", tol);
  if (classify(gamma_in, tol) != ElementType::Loxodromic) throw NotLoxodromic();

  auto fixed_point = [&](const MoebiusMap& m) -> ExtendedComplex {
    if (std::abs(m.c()) <= tol.geom) return ExtendedComplex::infinity();
    return ExtendedComplex::finite((m.a() - m.d()) / (2.0 * m.c()));
  };
  const ExtendedComplex fa = fixed_point(alpha_in);
  const ExtendedComplex fb = fixed_point(beta_in);
  if (fa.infinite != fb.infinite || (!fa.infinite && std::abs(fa.z - fb.z) > std::sqrt(tol.geom))) {
    throw NotParabolic("beta");
  }

  auto conj = [](const MoebiusMap& h, const MoebiusMap& m) { return compose(compose(h, m), h.inverse()); };
  MoebiusMap alpha = alpha_in, beta = beta_in, gamma = gamma_in;
  if (!fa.infinite) {
    const MoebiusMap s(0.0, -1.0, 1.0, -fa.z, {}, tol);
    alpha = conj(s, alpha);
    beta = conj(s, beta);
    gamma = conj(s, gamma);
  }
  if (std::abs(gamma.c()) <= tol.geom) throw NotLoxodromic();
  // Upper-triangular conjugator [[r, s], [0, 1]], built unnormalized then rescaled by the constructor.
  const MoebiusMap h(gamma.c(), gamma.d(), 0.0, 1.0, {}, tol);
  alpha = conj(h, alpha);
  beta = conj(h, beta);
  gamma = conj(h, gamma);
  // Clean the entries that are zero or one by construction.
  const MoebiusMap alpha_std(1.0, alpha.b() / alpha.a(), 0.0, 1.0, GroupWord::alpha(), tol);
  const MoebiusMap beta_std(1.0, beta.b() / beta.a(), 0.0, 1.0, GroupWord::beta(), tol);
  const MoebiusMap gamma_std(gamma.a() / gamma.c() + gamma.d() / gamma.c(), -1.0, 1.0, 0.0, GroupWord::gamma(), tol);
  return detail::finish_normalization(alpha_std, beta_std, gamma_std, tol);
}

}  // namespace fordspine
