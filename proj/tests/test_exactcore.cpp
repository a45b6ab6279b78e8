#include <doctest.h>

#include <functional>
#include <random>

#include "hsalg/exactcore/linalg.hpp"
#include "hsalg/exactcore/super_polynomial.hpp"
#include "support.hpp"

using namespace hsalg;
using hsalg::testing::random_gauss;
using hsalg::testing::random_rational;

namespace {

// Laplace expansion along the first row.
GaussRational cofactor_det(const QMatrix& m) {
  int n = m.rows();
  if (n == 0) return GaussRational(1);
  if (n == 1) return m(0, 0);
  GaussRational det;
  for (int c = 0; c < n; ++c) {
    std::vector<int> rows, cols;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    for (int k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    GaussRational minor = cofactor_det(m.block(rows, cols));
    det += (c % 2 == 0 ? m(0, c) : -m(0, c)) * minor;
  }
  return det;
}

VarTablePtr mixed_table() {
  return std::make_shared<VariableTable>(std::vector<std::pair<std::string, Parity>>{
      {"x", Parity::Even}, {"y", Parity::Even}, {"a", Parity::Odd}, {"b", Parity::Odd}, {"c", Parity::Odd}});
}

SuperPolynomial random_homogeneous(const VarTablePtr& vars, std::mt19937_64& rng, Parity parity) {
  SuperPolynomial p(vars);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> mask(0, 7);
  for (int t = 0; t < 4; ++t) {
    Monomial m = p.unit_monomial();
    m.even[0] = static_cast<std::uint8_t>(exp(rng));
    m.even[1] = static_cast<std::uint8_t>(exp(rng));
    std::uint64_t bits;
    do {
      bits = static_cast<std::uint64_t>(mask(rng));
    } while ((__builtin_popcountll(bits) & 1) != parity_bit(parity));
    m.odd = bits;
    p.add_term(m, random_gauss(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("gauss rational arithmetic and serialization") {
  GaussRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.to_string() == "1/2-3/4*i");
  CHECK(GaussRational::parse("1/2-3/4*i") == z);
  CHECK(GaussRational::parse("i") == GaussRational::i());
  CHECK(GaussRational::parse("-i") == -GaussRational::i());
  CHECK(GaussRational::parse("3") == GaussRational(3));
  CHECK(GaussRational().to_string() == "0");
  CHECK(GaussRational(Rational(0), Rational(2)).to_string() == "2*i");
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    GaussRational a = random_gauss(rng);
    CHECK(a.conj().conj() == a);
    GaussRational sq = a * a.conj();
    CHECK(sq.is_real());
    CHECK(sq.re() == a.norm());
    CHECK(a.re().get_den() > 0);
    CHECK(GaussRational::parse(a.to_string()) == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
  }
}

TEST_CASE("grassmann products") {
  auto vars = mixed_table();
  auto a = SuperPolynomial::variable(vars, "a");
  auto b = SuperPolynomial::variable(vars, "b");
  CHECK(a * b == -(b * a));
  CHECK((a * a).is_zero());
  CHECK((a * b).to_string() == "a*b");
  CHECK((b * a).to_string() == "-a*b");

  auto x = SuperPolynomial::variable(vars, "x");
  auto y = SuperPolynomial::variable(vars, "y");
  CHECK((x + y) * (x - y) == x * x - y * y);

  auto other = std::make_shared<VariableTable>(std::vector<std::pair<std::string, Parity>>{{"z", Parity::Even}});
  CHECK_THROWS_AS(poly_mul(x, SuperPolynomial::variable(other, "z")), Error);
}

TEST_CASE("supercommutativity and associativity on random polynomials") {
  auto vars = mixed_table();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    Parity pp = t % 2 ? Parity::Odd : Parity::Even;
    Parity pq = t % 3 ? Parity::Odd : Parity::Even;
    auto p = random_homogeneous(vars, rng, pp);
    auto q = random_homogeneous(vars, rng, pq);
    auto r = random_homogeneous(vars, rng, Parity::Odd);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    int sign = (pp == Parity::Odd && pq == Parity::Odd) ? -1 : 1;
    CHECK(p * q == GaussRational(sign) * (q * p));
  }
}

TEST_CASE("graded derivatives") {
  auto vars = mixed_table();
  auto a = SuperPolynomial::variable(vars, "a");
  auto b = SuperPolynomial::variable(vars, "b");
  auto x = SuperPolynomial::variable(vars, "x");
  int va = vars->index_of("a");
  int vb = vars->index_of("b");
  auto ab = a * b;
  CHECK(ab.left_derivative(va) == b);
  CHECK(ab.left_derivative(vb) == -a);
  CHECK(ab.right_derivative(vb) == a);
  CHECK(ab.right_derivative(va) == -b);
  auto x3 = x * x * x;
  CHECK(x3.left_derivative(vars->index_of("x")) == GaussRational(3) * x * x);
}

TEST_CASE("determinants against cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 5; ++n) {
    for (int t = 0; t < 6; ++t) {
      QMatrix m(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = t % 2 ? random_gauss(rng) : GaussRational(random_rational(rng));
      if (t == 5 && n > 1)
        for (int c = 0; c < n; ++c) m(0, c) = GaussRational();  // a zero pivot forces a row swap
      CHECK(det_exact(m) == cofactor_det(m));
    }
  }
  CHECK(det_exact(QMatrix::identity(3)) == GaussRational(1));
  CHECK_THROWS_AS(det_exact(QMatrix(2, 3)), Error);

  PolyMatrix d(2, 2);
  d(0, 0) = UPoly::x() * GaussRational(2);
  d(1, 1) = UPoly::x() * GaussRational(2);
  CHECK(det_exact(d) == UPoly::monomial(GaussRational(4), 2));
}

TEST_CASE("polynomial determinant agrees with evaluation") {
  std::mt19937_64 rng(5);
  PolyMatrix m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = UPoly(std::vector<GaussRational>{random_gauss(rng, 3, 2), random_gauss(rng, 3, 2)});
  UPoly det = det_exact(m);
  CHECK(det == det_by_blocks(m));
  for (int k = -2; k <= 2; ++k) {
    GaussRational at(Rational(k, 3));
    CHECK(det.evaluate(at) == det_exact(evaluate(m, at)));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(QMatrix(2, 2)).size() == 2);
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    QMatrix m(3, 5);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) m(r, c) = random_gauss(rng, 2, 2);
    for (int c = 0; c < 5; ++c) m(2, c) = m(0, c) + m(1, c);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 3);
    for (const auto& v : ker) {
      for (const auto& e : mat_vec(m, v)) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("inverse and solve") {
  QMatrix m(2, 2);
  m(0, 0) = GaussRational(1);
  m(0, 1) = GaussRational::i();
  m(1, 0) = GaussRational(2);
  m(1, 1) = GaussRational(3);
  CHECK(m * inverse(m) == QMatrix::identity(2));
  auto x = solve(m, {GaussRational(1), GaussRational(0)});
  REQUIRE(x.has_value());
  CHECK(mat_vec(m, *x) == std::vector<GaussRational>{GaussRational(1), GaussRational(0)});
  QMatrix s(2, 2);
  s(0, 0) = s(1, 0) = GaussRational(1);
  CHECK_THROWS_AS(inverse(s), Error);
  CHECK_FALSE(solve(s, {GaussRational(1), GaussRational(2)}).has_value());
}

TEST_CASE("rational roots") {
  UPoly e = UPoly::x();
  auto r1 = rational_roots(e * e - e);
  CHECK(r1 == std::vector<Rational>{0, 1});
  auto r2 = rational_roots(UPoly::monomial(GaussRational(4), 2));
  CHECK(r2 == std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(rational_roots(UPoly()), Error);

  // (3x - 2)^2 (x + 5/7)(x^2 + 1)(x^2 - 2)
  UPoly f = (UPoly(GaussRational(3)) * e - UPoly(2));
  f = f * f * (e + UPoly(GaussRational(Rational(5, 7)))) * (e * e + UPoly(1)) * (e * e - UPoly(2));
  auto r3 = rational_roots(f);
  CHECK(r3 == std::vector<Rational>{Rational(-5, 7), Rational(2, 3), Rational(2, 3)});

  // Roots close together and at split points.
  UPoly g = (e - UPoly(GaussRational(Rational(1, 1000)))) * (e - UPoly(GaussRational(Rational(1, 999)))) * e;
  auto r4 = rational_roots(g);
  CHECK(r4 == std::vector<Rational>{0, Rational(1, 1000), Rational(1, 999)});

  CHECK_THROWS_AS(rational_roots(e - UPoly(GaussRational::i())), Error);
}

TEST_CASE("positive definiteness and minors") {
  QMatrix m(3, 3);
  m(0, 0) = GaussRational(2);
  m(1, 1) = GaussRational(3);
  m(1, 2) = GaussRational(1);
  m(2, 1) = GaussRational(1);
  m(2, 2) = GaussRational(1);
  CHECK(positive_definite(m).positive_definite);
  auto minors = leading_principal_minors(m);
  CHECK(minors == std::vector<GaussRational>{GaussRational(2), GaussRational(6), GaussRational(4)});
  m(2, 2) = GaussRational(Rational(1, 4));
  auto rep = positive_definite(m);
  CHECK_FALSE(rep.positive_definite);
  CHECK(rep.failing_row == 2);
  m(0, 1) = GaussRational(5);
  CHECK_THROWS_AS(positive_definite(m), Error);
}

TEST_CASE("sparse echelon") {
  SparseEchelon ech;
  CHECK(ech.insert({{0, GaussRational(2)}, {3, GaussRational(1)}}));
  CHECK(ech.insert({{0, GaussRational(1)}, {1, GaussRational(1)}}));
  CHECK(ech.insert({{1, GaussRational(2)}, {3, GaussRational(1)}, {0, GaussRational(1)}}));
  CHECK_FALSE(ech.insert({{1, GaussRational(1)}, {0, GaussRational(1)}}));
  CHECK(ech.rank() == 3);
  CHECK(ech.contains({{3, GaussRational(5)}}));
  SparseEchelon e2;
  e2.insert({{0, GaussRational(1)}, {1, GaussRational(1)}});
  auto r = e2.reduce({{0, GaussRational(1)}, {2, GaussRational(1)}});
  CHECK(r == SparseVec{{1, GaussRational(-1)}, {2, GaussRational(1)}});
}
