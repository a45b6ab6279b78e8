#include "hsalg/conformal/conformal.hpp"

#include <optional>

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

// Cartesian ambient slot of boundary index mu.
int ambient_slot(int mu) { return mu == 0 ? 0 : mu + 1; }

int dim_of(const RVector& v, int extra) {
  int n = static_cast<int>(v.size()) - extra;
  if (n < 1) throw Error("vector too short");
  return n;
}

// Conjugate a light-cone matrix to Cartesian coordinates.
AmbientMap from_light_cone_matrix(int n, const RMatrix& lc) {
  int N = n + 2;
  RMatrix C(N, N), Cinv(N, N);
  for (int k = 0; k < N; ++k) {
    RVector e(u(N));
    e[u(k)] = 1;
    RVector c = from_light_cone(e), ci = to_light_cone(e);
    for (int r = 0; r < N; ++r) {
      C(r, k) = c[u(r)];
      Cinv(r, k) = ci[u(r)];
    }
  }
  return AmbientMap(n, C * lc * Cinv);
}

RMatrix light_cone_identity(int n) { return RMatrix::identity(n + 2); }

}  // namespace

Rational boundary_dot(const RVector& x, const RVector& y) {
  if (x.size() != y.size() || x.empty()) throw Error("boundary vectors differ in length");
  Rational s = -x[0] * y[0];
  for (std::size_t k = 1; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

Rational ambient_dot(const RVector& X, const RVector& Y) {
  if (X.size() != Y.size() || X.size() < 3) throw Error("ambient vectors differ in length");
  Rational s = -X[0] * Y[0] - X[1] * Y[1];
  for (std::size_t k = 2; k < X.size(); ++k) s += X[k] * Y[k];
  return s;
}

RMatrix ambient_eta(int n) {
  RMatrix eta(n + 2, n + 2);
  for (int a = 0; a < n + 2; ++a) eta(a, a) = a < 2 ? -1 : 1;
  return eta;
}

RVector to_light_cone(const RVector& X) {
  int n = dim_of(X, 2);
  RVector L(u(n + 2));
  L[0] = X[1] + X[u(n + 1)];
  L[1] = X[1] - X[u(n + 1)];
  for (int mu = 0; mu < n; ++mu) L[u(mu + 2)] = X[u(ambient_slot(mu))];
  return L;
}

RVector from_light_cone(const RVector& L) {
  int n = dim_of(L, 2);
  RVector X(u(n + 2));
  X[1] = (L[0] + L[1]) / 2;
  X[u(n + 1)] = (L[0] - L[1]) / 2;
  for (int mu = 0; mu < n; ++mu) X[u(ambient_slot(mu))] = L[u(mu + 2)];
  return X;
}

BoundaryPoint BoundaryPoint::finite(RVector x) {
  BoundaryPoint p;
  p.x = std::move(x);
  return p;
}

BoundaryPoint BoundaryPoint::infinity(RVector ray) {
  if (sgn(to_light_cone(ray)[1]) != 0) throw Error("ray is not on the slice at infinity");
  BoundaryPoint p;
  p.at_infinity = true;
  p.ray = std::move(ray);
  return p;
}

nlohmann::json BoundaryPoint::to_json() const {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& q : at_infinity ? ray : x) coords.push_back(to_string(q));
  if (at_infinity) return {{"at_infinity", true}, {"ray", coords}};
  return {{"at_infinity", false}, {"x", coords}};
}

RVector lift(const BoundaryPoint& p) {
  if (p.at_infinity) throw Error("cannot lift a point at infinity; use its ray");
  int n = static_cast<int>(p.x.size());
  RVector L(u(n + 2));
  L[0] = boundary_dot(p.x, p.x);
  L[1] = 1;
  for (int mu = 0; mu < n; ++mu) L[u(mu + 2)] = p.x[u(mu)];
  return from_light_cone(L);
}

bool preserves_metric(const RMatrix& m, int n) {
  if (m.rows() != n + 2 || m.cols() != n + 2) return false;
  RMatrix eta = ambient_eta(n);
  return m.transpose() * eta * m == eta;
}

AmbientMap::AmbientMap(int n, RMatrix m) : n_(n), m_(std::move(m)) {
  if (n < 1) throw Error("ambient map needs n >= 1");
  if (!preserves_metric(m_, n_)) throw Error("matrix does not preserve the ambient metric");
}

RVector AmbientMap::apply(const RVector& X) const {
  if (static_cast<int>(X.size()) != n_ + 2) throw Error("ambient vector has the wrong length");
  RVector Y(X.size());
  for (int r = 0; r < n_ + 2; ++r)
    for (int c = 0; c < n_ + 2; ++c) Y[u(r)] += m_(r, c) * X[u(c)];
  return Y;
}

AmbientMap operator*(const AmbientMap& a, const AmbientMap& b) {
  if (a.n_ != b.n_) throw Error("composing maps of different dimension");
  return AmbientMap(a.n_, a.m_ * b.m_);
}

bool AmbientMap::projectively_equal(const AmbientMap& other) const {
  if (n_ != other.n_) return false;
  std::optional<Rational> scale;
  for (int r = 0; r < n_ + 2; ++r) {
    for (int c = 0; c < n_ + 2; ++c) {
      const Rational& x = m_(r, c);
      const Rational& y = other.m_(r, c);
      if ((sgn(x) == 0) != (sgn(y) == 0)) return false;
      if (sgn(x) == 0) continue;
      Rational q = x / y;
      if (!scale) scale = q;
      else if (*scale != q) return false;
    }
  }
  return scale.has_value();
}

AmbientMap translation(const RVector& a) {
  int n = static_cast<int>(a.size());
  RMatrix lc = light_cone_identity(n);
  lc(0, 1) = boundary_dot(a, a);
  for (int mu = 0; mu < n; ++mu) {
    lc(0, mu + 2) = 2 * a[u(mu)] * (mu == 0 ? -1 : 1);
    lc(mu + 2, 1) = a[u(mu)];
  }
  return from_light_cone_matrix(n, lc);
}

AmbientMap dilatation(int n, const Rational& lambda) {
  if (sgn(lambda) == 0) throw Error("dilatation factor must be nonzero");
  RMatrix lc = light_cone_identity(n);
  lc(0, 0) = lambda;
  lc(1, 1) = 1 / lambda;
  return from_light_cone_matrix(n, lc);
}

AmbientMap lorentz(const RMatrix& L) {
  int n = L.rows();
  if (L.cols() != n) throw Error("Lorentz matrix must be square");
  RMatrix eta(n, n);
  for (int k = 0; k < n; ++k) eta(k, k) = k == 0 ? -1 : 1;
  if (!(L.transpose() * eta * L == eta)) throw Error("matrix does not preserve the boundary metric");
  RMatrix lc = light_cone_identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) lc(r + 2, c + 2) = L(r, c);
  return from_light_cone_matrix(n, lc);
}

AmbientMap inversion(int n) {
  RMatrix lc = light_cone_identity(n);
  lc(0, 0) = 0;
  lc(1, 1) = 0;
  lc(0, 1) = 1;
  lc(1, 0) = 1;
  return from_light_cone_matrix(n, lc);
}

AmbientMap special_conformal(const RVector& b) {
  int n = static_cast<int>(b.size());
  RMatrix lc = light_cone_identity(n);
  lc(1, 0) = boundary_dot(b, b);
  for (int mu = 0; mu < n; ++mu) {
    lc(1, mu + 2) = 2 * b[u(mu)] * (mu == 0 ? -1 : 1);
    lc(mu + 2, 0) = b[u(mu)];
  }
  return from_light_cone_matrix(n, lc);
}

BoundaryPoint act(const AmbientMap& m, const BoundaryPoint& p) {
  RVector X = p.at_infinity ? p.ray : lift(p);
  if (static_cast<int>(X.size()) != m.n() + 2) throw Error("point and map have different dimension");
  RVector Y = m.apply(X);
  bool zero = true;
  for (const auto& q : Y) zero = zero && sgn(q) == 0;
  if (zero) throw Error("zero image vector");
  RVector L = to_light_cone(Y);
  if (sgn(L[1]) == 0) return BoundaryPoint::infinity(Y);
  RVector x(u(m.n()));
  for (int mu = 0; mu < m.n(); ++mu) x[u(mu)] = L[u(mu + 2)] / L[1];
  return BoundaryPoint::finite(x);
}

}  // namespace hsalg
