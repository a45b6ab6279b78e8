#include <doctest.h>

#include <set>

#include "hsalg/liealg/algebras.hpp"

using namespace hsalg;

namespace {

const GaussRational I = GaussRational::i();

std::string pm(int i, char sign) { return std::string("J") + sign + "[" + std::to_string(i) + "]"; }

// J_ij in the compact basis for any ordered pair.
AlgebraElement rot(const LieAlgebra& c, int i, int j) {
  if (i == j) return c.zero();
  if (i < j) return c.basis("J[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return c.basis("J[" + std::to_string(j) + "," + std::to_string(i) + "]") * GaussRational(-1);
}

AlgebraElement lorentz(const LieAlgebra& c, int mu, int nu) {
  if (mu == nu) return c.zero();
  if (mu < nu) return c.basis("J[" + std::to_string(mu) + "," + std::to_string(nu) + "]");
  return c.basis("J[" + std::to_string(nu) + "," + std::to_string(mu) + "]") * GaussRational(-1);
}

int delta(int a, int b) { return a == b ? 1 : 0; }
int eta_boundary(int mu, int nu) { return mu != nu ? 0 : (mu == 0 ? -1 : 1); }

}  // namespace

TEST_CASE("o(n,2) presentation") {
  CHECK(o_n2(3).dim() == 10);
  CHECK(o_n2(4).dim() == 15);
  CHECK_THROWS_AS(o_n2(2), Error);
  LieAlgebra o = o_n2(3);
  CHECK(o.bracket(o.basis("J[0,1]"), o.basis("J[1,2]")) == o.basis("J[0,2]") * I);
  auto x = o.basis("J[0,0']") + o.basis("J[1,3]") * GaussRational(2);
  CHECK(o.bracket(x, x).is_zero());
  CHECK(o.check_antisymmetry().empty());
  for (int n = 3; n <= 8; ++n) CHECK(o_n2(n).check_jacobi().empty());
  CHECK(o_n2(5).check_jacobi_serial().empty());
  auto js = o.to_json();
  CHECK(js["basis"].size() == 10);
  CHECK(js["brackets"].size() > 0);
}

TEST_CASE("elements of different presentations do not mix") {
  LieAlgebra a = o_n2(3), b = o_n2(3);
  CHECK_THROWS_AS(a.bracket(a.basis(0), b.basis(1)), Error);
  CHECK_THROWS_AS(a.basis(0) + b.basis(0), Error);
}

TEST_CASE("a corrupted structure constant shows up only in triples that use it") {
  LieAlgebra o = o_n2(3);
  int a = o.index_of("J[0,1]"), b = o.index_of("J[1,2]");
  LieAlgebra bad = o;
  bad.set_bracket(a, b, o.basis("J[0,2]") * (I * GaussRational(2)));
  auto violations = bad.check_jacobi();
  REQUIRE_FALSE(violations.empty());
  CHECK(violations == bad.check_jacobi_serial());
  // A triple can only fail if its Jacobi sum evaluates [a,b] or [b,a] somewhere.
  auto uses = [&](int i, int j, int k) {
    auto touches = [&](int x, const AlgebraElement& y) {
      if (x != a && x != b) return false;
      int other = x == a ? b : a;
      return y.terms.count(other) != 0;
    };
    return touches(i, o.structure(j, k)) || touches(j, o.structure(k, i)) || touches(k, o.structure(i, j)) ||
           (std::set<int>{i, j} == std::set<int>{a, b}) || (std::set<int>{j, k} == std::set<int>{a, b}) ||
           (std::set<int>{k, i} == std::set<int>{a, b});
  };
  for (auto [i, j, k] : violations) CHECK(uses(i, j, k));
}

TEST_CASE("compact basis reproduces the E, J+, J-, J_ij table") {
  for (int n = 3; n <= 6; ++n) {
    BasisChange bc = compact_basis(n);
    const LieAlgebra& c = bc.algebra;
    CHECK(c.check_jacobi().empty());
    auto E = c.basis("E");
    for (int i = 1; i <= n; ++i) {
      CHECK(c.bracket(E, c.basis(pm(i, '+'))) == c.basis(pm(i, '+')));
      CHECK(c.bracket(E, c.basis(pm(i, '-'))) == c.basis(pm(i, '-')) * GaussRational(-1));
      for (int j = 1; j <= n; ++j) {
        AlgebraElement expect = (rot(c, i, j) * I + E * GaussRational(delta(i, j))) * GaussRational(2);
        CHECK(c.bracket(c.basis(pm(i, '-')), c.basis(pm(j, '+'))) == expect);
        CHECK(c.bracket(c.basis(pm(i, '+')), c.basis(pm(j, '+'))).is_zero());
        CHECK(c.bracket(c.basis(pm(i, '-')), c.basis(pm(j, '-'))).is_zero());
        for (int k = 1; k <= n; ++k) {
          if (i == j) continue;
          for (char s : {'+', '-'}) {
            // 2i delta_{k[j} J_{i]} with the antisymmetrization weighted by 1/2.
            AlgebraElement rhs = (c.basis(pm(i, s)) * GaussRational(delta(k, j)) -
                                  c.basis(pm(j, s)) * GaussRational(delta(k, i))) *
                                 I;
            CHECK(c.bracket(rot(c, i, j), c.basis(pm(k, s))) == rhs);
          }
        }
      }
    }
    // Transport: bracket then map equals map then bracket.
    for (int x = 0; x < c.dim(); ++x)
      for (int y = 0; y < c.dim(); ++y)
        CHECK(bc.to_old(c.bracket(c.basis(x), c.basis(y))) ==
              bc.source.bracket(bc.to_old(c.basis(x)), bc.to_old(c.basis(y))));
    CHECK(bc.to_new(bc.to_old(c.basis(1))) == c.basis(1));
  }
}

TEST_CASE("conformal basis") {
  for (int n = 3; n <= 5; ++n) {
    ConformalBasis cb = conformal_basis(n);
    const LieAlgebra& c = cb.change.algebra;
    CHECK(c.dim() == (n + 2) * (n + 1) / 2);
    CHECK(c.check_jacobi().empty());
    CHECK(cb.eta_plus_minus == Rational(-1, 2));
    CHECK(cb.dilatation_weight == GaussRational(Rational(0), Rational(-1, 2)));
    auto P = [&](int mu) { return c.basis("P[" + std::to_string(mu) + "]"); };
    auto K = [&](int mu) { return c.basis("K[" + std::to_string(mu) + "]"); };
    auto D = c.basis("D");
    for (int mu = 0; mu < n; ++mu) {
      CHECK(c.bracket(D, P(mu)) == P(mu) * cb.dilatation_weight);
      CHECK(c.bracket(D, K(mu)) == K(mu) * (cb.dilatation_weight * GaussRational(-1)));
      for (int nu = 0; nu < n; ++nu) {
        CHECK(c.bracket(P(mu), P(nu)).is_zero());
        for (int rho = 0; rho < n; ++rho) {
          AlgebraElement rhs = (P(rho) * GaussRational(eta_boundary(mu, nu)) -
                                P(nu) * GaussRational(eta_boundary(mu, rho))) *
                               I;
          CHECK(c.bracket(P(mu), lorentz(c, nu, rho)) == rhs);
        }
      }
    }
    LieAlgebra p = poincare(n);
    CHECK(p.dim() == n + n * (n - 1) / 2);
    CHECK(p.check_jacobi().empty());
  }
}

TEST_CASE("subalgebra rejects spans that are not closed") {
  LieAlgebra o = o_n2(3);
  CHECK_THROWS_AS(subalgebra(o, "x", {o.index_of("J[0,1]"), o.index_of("J[1,2]")}), Error);
}

TEST_CASE("Inonu-Wigner contraction") {
  for (int n = 3; n <= 5; ++n) {
    ParametricLieAlgebra c = contract_inonu_wigner(n);
    CHECK(c.dim() == (n + 2) * (n + 1) / 2);
    CHECK(c.check_jacobi().empty());
    UPoly t = UPoly::x();
    auto G = [&](int a) { return c.basis("G[" + std::to_string(a) + "]"); };
    auto J = [&](int a, int b) { return c.basis("J[" + std::to_string(a) + "," + std::to_string(b) + "]"); };
    CHECK(c.bracket(G(0), G(1)) == J(0, 1) * (t * t * UPoly(I)));
    CHECK(c.bracket(J(1, 2), G(2)) == G(1) * UPoly(I));
    CHECK(c.bracket(J(0, 1), G(0)) == G(1) * UPoly(I));
    LieAlgebra flat = specialize(c, GaussRational(0));
    CHECK(flat.check_jacobi().empty());
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) CHECK(flat.bracket(flat.basis("G[" + std::to_string(a) + "]"),
                                                      flat.basis("G[" + std::to_string(b) + "]"))
                                             .is_zero());
    CHECK(specialize(c, GaussRational(1)).check_jacobi().empty());
  }
}

TEST_CASE("sp(2), osp(2s|2) and gl(s)") {
  LieAlgebra s = sp2();
  CHECK(s.dim() == 3);
  CHECK(s.check_jacobi().empty());
  // [u11, u22] = 4i u12 in this normalization.
  CHECK(s.bracket(s.basis("t[1,1]"), s.basis("t[2,2]")) == s.basis("t[1,2]") * (I * GaussRational(4)));
  for (int k = 1; k <= 2; ++k) {
    LieAlgebra o = osp(k);
    int even = 0, odd = 0;
    for (int x = 0; x < o.dim(); ++x) (o.parity(x) == Parity::Odd ? odd : even)++;
    // Graded-symmetric square of a (2|2k) space.
    CHECK(even == 3 + k * (2 * k - 1));
    CHECK(odd == 4 * k);
    CHECK(o.check_antisymmetry().empty());
    CHECK(o.check_jacobi().empty());
  }
  CHECK(osp(1).dim() == 8);
  CHECK(osp(2).dim() == 17);
  CHECK(gl(2).check_jacobi().empty());
  CHECK(gl(3).check_jacobi().empty());
}
