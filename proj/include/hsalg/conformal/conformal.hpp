#pragma once

#include <vector>

#include <json.hpp>

#include "hsalg/exactcore/matrix.hpp"

namespace hsalg {

using RVector = std::vector<Rational>;

/// Boundary metric diag(-1, +1, ..., +1) on length-n vectors.
Rational boundary_dot(const RVector& x, const RVector& y);
/// Ambient metric in the Cartesian ordering (0, 0', 1, ..., n).
Rational ambient_dot(const RVector& X, const RVector& Y);
RMatrix ambient_eta(int n);

/// Cartesian ambient coordinates <-> light-cone coordinates (+, -, x^0, ..., x^{n-1})
/// with X^+ = X^{0'} + X^n and X^- = X^{0'} - X^n.
RVector to_light_cone(const RVector& X);
RVector from_light_cone(const RVector& L);

/// Either a finite point x^mu or a ray on the X^- = 0 slice.
struct BoundaryPoint {
  bool at_infinity = false;
  RVector x;    // finite points
  RVector ray;  // Cartesian ambient ray when at infinity

  static BoundaryPoint finite(RVector x);
  static BoundaryPoint infinity(RVector ray);
  nlohmann::json to_json() const;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// Null lift X^- = 1, X^mu = x^mu, X^+ = x^2, returned in Cartesian coordinates.
RVector lift(const BoundaryPoint& p);

/// Ambient isometry acting linearly on Cartesian coordinates.
class AmbientMap {
 public:
  /// Throws unless m is (n+2)x(n+2) and preserves the ambient metric.
  AmbientMap(int n, RMatrix m);

  int n() const { return n_; }
  const RMatrix& matrix() const { return m_; }
  RVector apply(const RVector& X) const;

  friend AmbientMap operator*(const AmbientMap& a, const AmbientMap& b);
  friend bool operator==(const AmbientMap& a, const AmbientMap& b) { return a.m_ == b.m_; }
  /// Equal up to a nonzero rational factor (lines, not rays).
  bool projectively_equal(const AmbientMap& other) const;

 private:
  int n_;
  RMatrix m_;
};

bool preserves_metric(const RMatrix& m, int n);

AmbientMap translation(const RVector& a);
AmbientMap dilatation(int n, const Rational& lambda);
/// L must preserve the boundary metric.
AmbientMap lorentz(const RMatrix& L);
AmbientMap inversion(int n);
AmbientMap special_conformal(const RVector& b);

/// Lift, apply, and project back by dividing by X^-.
BoundaryPoint act(const AmbientMap& m, const BoundaryPoint& p);

}  // namespace hsalg
