#include <doctest.h>

#include "hsalg/conformal/conformal.hpp"
#include "support.hpp"

using namespace hsalg;

namespace {

RVector random_vec(std::mt19937_64& rng, int n) {
  RVector v;
  for (int k = 0; k < n; ++k) v.push_back(testing::random_rational(rng, 4, 3));
  return v;
}

// Closed boundary formulas.
RVector closed_sct(const RVector& x, const RVector& b) {
  Rational den = 1 + 2 * boundary_dot(b, x) + boundary_dot(b, b) * boundary_dot(x, x);
  RVector out;
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back((x[k] + boundary_dot(x, x) * b[k]) / den);
  return out;
}

RVector unit(int n, int k, Rational scale = 1) {
  RVector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(k)] = scale;
  return v;
}

// A rational boost in the (0,1) plane: rapidity from the Pythagorean triple (5,3,4).
RMatrix boost(int n) {
  RMatrix L = RMatrix::identity(n);
  L(0, 0) = frac(5, 4);
  L(1, 1) = frac(5, 4);
  L(0, 1) = frac(3, 4);
  L(1, 0) = frac(3, 4);
  return L;
}

}  // namespace

TEST_CASE("lift lands on the cone") {
  for (int n = 3; n <= 5; ++n) {
    RVector X = lift(BoundaryPoint::finite(RVector(static_cast<std::size_t>(n))));
    RVector L = to_light_cone(X);
    CHECK(sgn(L[0]) == 0);
    CHECK(L[1] == 1);
    CHECK(lift(BoundaryPoint::finite(unit(n, 1)))[1] - lift(BoundaryPoint::finite(unit(n, 1)))[static_cast<std::size_t>(n + 1)] == 1);
    CHECK(to_light_cone(lift(BoundaryPoint::finite(unit(n, 1))))[0] == 1);
    RVector light = unit(n, 0);
    light[1] = 1;
    CHECK(sgn(to_light_cone(lift(BoundaryPoint::finite(light)))[0]) == 0);
    std::mt19937_64 rng(static_cast<unsigned>(n));
    for (int t = 0; t < 20; ++t) {
      RVector X = lift(BoundaryPoint::finite(random_vec(rng, n)));
      CHECK(sgn(ambient_dot(X, X)) == 0);
      CHECK(from_light_cone(to_light_cone(X)) == X);
    }
  }
  CHECK_THROWS_AS(lift(BoundaryPoint::infinity(from_light_cone({1, 0, 0, 0, 0}))), Error);
}

TEST_CASE("map families preserve the metric and match closed formulas") {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      RVector a = random_vec(rng, n), x = random_vec(rng, n);
      Rational lambda = testing::random_rational(rng, 4, 3);
      if (sgn(lambda) == 0) lambda = 3;
      BoundaryPoint p = BoundaryPoint::finite(x);

      AmbientMap T = translation(a);
      RVector xa;
      for (int k = 0; k < n; ++k) xa.push_back(x[static_cast<std::size_t>(k)] + a[static_cast<std::size_t>(k)]);
      CHECK(act(T, p) == BoundaryPoint::finite(xa));

      RVector lx;
      for (auto& q : x) lx.push_back(lambda * q);
      CHECK(act(dilatation(n, lambda), p) == BoundaryPoint::finite(lx));

      RMatrix L = boost(n);
      RVector bx(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) bx[static_cast<std::size_t>(r)] += L(r, c) * x[static_cast<std::size_t>(c)];
      CHECK(act(lorentz(L), p) == BoundaryPoint::finite(bx));

      Rational x2 = boundary_dot(x, x);
      BoundaryPoint inv = act(inversion(n), p);
      if (sgn(x2) == 0) {
        CHECK(inv.at_infinity);
      } else {
        RVector xi;
        for (auto& q : x) xi.push_back(q / x2);
        CHECK(inv == BoundaryPoint::finite(xi));
      }

      AmbientMap K = special_conformal(a);
      Rational den = 1 + 2 * boundary_dot(a, x) + boundary_dot(a, a) * x2;
      BoundaryPoint kx = act(K, p);
      if (sgn(den) == 0) CHECK(kx.at_infinity);
      else CHECK(kx == BoundaryPoint::finite(closed_sct(x, a)));
      // image stays on the cone
      RVector Y = K.apply(lift(p));
      CHECK(sgn(ambient_dot(Y, Y)) == 0);

      // special conformal = inversion . translation . inversion
      CHECK((inversion(n) * T * inversion(n)).projectively_equal(K));
      CHECK(inversion(n) * T * inversion(n) == K);
    }
  }
}

TEST_CASE("worked examples") {
  int n = 4;
  CHECK(act(dilatation(n, 2), BoundaryPoint::finite({1, 2, 3, 4})) == BoundaryPoint::finite({2, 4, 6, 8}));
  CHECK(act(inversion(n), BoundaryPoint::finite(unit(n, 1, 2))) == BoundaryPoint::finite(unit(n, 1, frac(1, 2))));
  // b = x = spatial unit vector: denominator 1 + 2 + 1 = 4
  CHECK(act(special_conformal(unit(n, 2)), BoundaryPoint::finite(unit(n, 2))) == BoundaryPoint::finite(unit(n, 2, frac(1, 2))));
  // denominator 1 + 2 b.x + b^2 x^2 vanishes for b = -x, x^2 = 1
  CHECK(act(special_conformal(unit(n, 1, -1)), BoundaryPoint::finite(unit(n, 1))).at_infinity);
  CHECK(inversion(n) * inversion(n) == AmbientMap(n, RMatrix::identity(n + 2)));
  CHECK_THROWS_AS(dilatation(n, 0), Error);
  RMatrix bad = RMatrix::identity(n + 2);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(AmbientMap(n, bad), Error);
  CHECK(dilatation(n, 2).projectively_equal(AmbientMap(n, dilatation(n, 2).matrix())));
  CHECK_FALSE(dilatation(n, 2).projectively_equal(dilatation(n, 3)));
  // a point at infinity comes back under the inverse map
  BoundaryPoint far = act(inversion(n), BoundaryPoint::finite(RVector(4)));
  REQUIRE(far.at_infinity);
  CHECK(act(inversion(n), far) == BoundaryPoint::finite(RVector(4)));
}

TEST_CASE("group law holds projectively") {
  std::mt19937_64 rng(11);
  int n = 4;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    AmbientMap m1 = special_conformal(random_vec(rng, n)) * dilatation(n, frac(3, 2));
    AmbientMap m2 = translation(random_vec(rng, n)) * lorentz(boost(n)) * inversion(n);
    BoundaryPoint p = BoundaryPoint::finite(random_vec(rng, n));
    BoundaryPoint step = act(m2, p);
    BoundaryPoint lhs = act(m1, step);
    BoundaryPoint rhs = act(m1 * m2, p);
    if (step.at_infinity || lhs.at_infinity || rhs.at_infinity) continue;
    CHECK(lhs == rhs);
    ++checked;
  }
  CHECK(checked >= 20);
}
