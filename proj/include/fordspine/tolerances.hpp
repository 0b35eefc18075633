#pragma once

#include <stdexcept>
#include <string>

namespace fordspine {

/// Numerical thresholds shared by every geometric decision in the library.
///
/// All values are absolute except `det`, which is relative to the matrix
/// scale. Callers may override them (the CLI exposes `--eps-geom`), but the
/// defaults are the ones the test suites pin.
struct Tolerances {
  double det = 1e-12;      // determinant normalization
  double geom = 1e-9;      // general geometric comparisons
  double tangent = 1e-7;   // |d - (r1 + r2)| and |d - |r1 - r2|| bands
  double edge = 1e-6;      // minimum visible arc length
  double area = 1e-6;      // visible region must exceed area^2
  double mono = 1e-9;      // monodromy distance to +-Id
  double angle = 1e-9;     // |angle sum - 2 pi|

  double area_threshold() const { return area * area; }
  double marginal_area() const { return area * area / 10.0; }
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

class FordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FixesInfinity : public FordError {
 public:
  FixesInfinity() : FordError("element fixes infinity and has no isometric sphere") {}
};

class DegenerateLattice : public FordError {
 public:
  DegenerateLattice() : FordError("lattice generators are linearly dependent over R") {}
};

class NoIntersection : public FordError {
 public:
  NoIntersection() : FordError("spheres do not meet in a two-point intersection") {}
};

class NotParabolic : public FordError {
 public:
  explicit NotParabolic(const std::string& which)
      : FordError("generator " + which + " is not parabolic fixing the common point") {}
};

class NotLoxodromic : public FordError {
 public:
  NotLoxodromic() : FordError("generator gamma is not loxodromic with a defined isometric sphere") {}
};

class OpenCycle : public FordError {
 public:
  explicit OpenCycle(const std::string& detail) : FordError("edge cycle does not close: " + detail) {}
};

class PathBroken : public FordError {
 public:
  explicit PathBroken(int sample) : FordError("path sample " + std::to_string(sample) + " did not terminate"), sample_(sample) {}
  int sample() const { return sample_; }

 private:
  int sample_;
};

class SchemaError : public FordError {
 public:
  explicit SchemaError(std::string field)
      : FordError("schema error at '" + field + "'"), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace fordspine
