#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

#include "fordspine/tolerances.hpp"
#include "fordspine/word.hpp"

namespace fordspine {

using Complex = std::complex<double>;

/// A point of C u {infinity}. Infinity is a tag, never a huge number.
struct ExtendedComplex {
  Complex z{};
  bool infinite = false;

  static ExtendedComplex infinity() { return {{}, true}; }
  static ExtendedComplex finite(Complex w) { return {w, false}; }
};

/// A point of the upper half-space model: boundary coordinate plus height > 0.
struct HalfSpacePoint {
  Complex z{};
  double height = 0.0;
};

enum class ElementType { Identity, Parabolic, Elliptic, Loxodromic };

inline const char* to_string(ElementType t) {
  switch (t) {
    case ElementType::Identity: return "Identity";
    case ElementType::Parabolic: return "Parabolic";
    case ElementType::Elliptic: return "Elliptic";
    case ElementType::Loxodromic: return "Loxodromic";
  }
  return "?";
}

/// Element of PSL(2, C) acting by z -> (az + b) / (cz + d), tagged with the
/// group word it represents.
///
/// Construction rescales to determinant one and picks the sign representative
/// whose first non-negligible entry (in the order a, b, c, d) has argument in
/// (-pi/2, pi/2], so equal elements compare equal entrywise.
class MoebiusMap {
 public:
  MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

  MoebiusMap(Complex a, Complex b, Complex c, Complex d, GroupWord word = {}, const Tolerances& tol = default_tolerances())
      : a_(a), b_(b), c_(c), d_(d), word_(std::move(word)) {
    normalize(tol);
  }

  static MoebiusMap identity() { return {}; }
  static MoebiusMap translation(Complex s, GroupWord word = {}) { return MoebiusMap(1.0, s, 0.0, 1.0, std::move(word)); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  const GroupWord& word() const { return word_; }

  Complex det() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }

  MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_, word_.inverse()); }

  ExtendedComplex apply(const ExtendedComplex& w) const {
    if (w.infinite) {
      if (std::abs(c_) == 0.0) return ExtendedComplex::infinity();
      return ExtendedComplex::finite(a_ / c_);
    }
    const Complex den = c_ * w.z + d_;
    if (std::abs(den) == 0.0) return ExtendedComplex::infinity();
    return ExtendedComplex::finite((a_ * w.z + b_) / den);
  }

  Complex apply(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

  /// Poincare extension to the upper half-space.
  HalfSpacePoint apply(const HalfSpacePoint& x) const {
    const Complex cz_d = c_ * x.z + d_;
    const double t2 = x.height * x.height;
    const double den = std::norm(cz_d) + std::norm(c_) * t2;
    const Complex num = (a_ * x.z + b_) * std::conj(cz_d) + a_ * std::conj(c_) * t2;
    return {num / den, x.height / den};
  }

  double max_entry() const { return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)}); }

  /// Largest entrywise distance to the nearer of +Id and -Id.
  double distance_to_identity() const {
    const double plus = std::max({std::abs(a_ - 1.0), std::abs(b_), std::abs(c_), std::abs(d_ - 1.0)});
    const double minus = std::max({std::abs(a_ + 1.0), std::abs(b_), std::abs(c_), std::abs(d_ + 1.0)});
    return std::min(plus, minus);
  }

  /// Entrywise distance modulo sign.
  double distance(const MoebiusMap& o) const {
    const double plus = std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
    const double minus = std::max({std::abs(a_ + o.a_), std::abs(b_ + o.b_), std::abs(c_ + o.c_), std::abs(d_ + o.d_)});
    return std::min(plus, minus);
  }

  friend std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
    return os << "[[" << m.a_ << ", " << m.b_ << "], [" << m.c_ << ", " << m.d_ << "]] {" << m.word_.str() << "}";
  }

 private:
  void normalize(const Tolerances& tol) {
    const Complex det_value = det();
    if (std::abs(det_value) == 0.0) throw FordError("singular matrix");
    // ad - bc cancels: its rounding error grows with |a d| + |b c|.
    const double scale = std::max(1.0, std::abs(a_ * d_) + std::abs(b_ * c_));
    if (std::abs(det_value - 1.0) > tol.det * scale) {
      const Complex s = std::sqrt(det_value);
      a_ /= s;
      b_ /= s;
      c_ /= s;
      d_ /= s;
    }
    for (const Complex* e : {&a_, &b_, &c_, &d_}) {
      if (std::abs(*e) <= tol.geom) continue;
      const bool keep = e->real() > 0.0 || (e->real() == 0.0 && e->imag() > 0.0);
      if (!keep) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
      }
      break;
    }
  }

  Complex a_, b_, c_, d_;
  GroupWord word_;
};

/// Matrix product m1 * m2 (apply m2 first); the word is the reduced concatenation.
inline MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  return MoebiusMap(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                    m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d(), m1.word() * m2.word());
}

inline MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) { return compose(m1, m2); }

inline ElementType classify(const MoebiusMap& m, const Tolerances& tol = default_tolerances()) {
  if (m.distance_to_identity() <= tol.geom) return ElementType::Identity;
  const Complex tr2 = m.trace() * m.trace();
  if (std::abs(tr2 - 4.0) <= tol.geom) return ElementType::Parabolic;
  if (std::abs(tr2.imag()) <= tol.geom && tr2.real() >= 0.0 && tr2.real() < 4.0) return ElementType::Elliptic;
  return ElementType::Loxodromic;
}

}  // namespace fordspine
