#include <doctest.h>

#include "hsalg/liealg/algebras.hpp"
#include "hsalg/weyl/howe.hpp"
#include "support.hpp"

using namespace hsalg;

namespace {

GaussRational I = GaussRational::i();

SuperPolynomial random_poly(const PhaseSpace& ps, std::mt19937_64& rng, int max_degree, int terms) {
  std::vector<int> all;
  for (int v = 0; v < ps.vars()->size(); ++v) all.push_back(v);
  std::uniform_int_distribution<int> deg(0, max_degree);
  SuperPolynomial f = ps.zero();
  for (int t = 0; t < terms; ++t) {
    auto monos = monomials_of_degree(*ps.vars(), all, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    f.add_term(monos[pick(rng)], testing::random_gauss(rng, 3, 3));
  }
  return f;
}

SuperPolynomial random_even(const PhaseSpace& ps, std::mt19937_64& rng, int max_degree, int terms) {
  return random_poly(ps, rng, max_degree, terms).even_part();
}

}  // namespace

TEST_CASE("canonical pairs") {
  PhaseSpace ps(3, 1);
  for (int A = 0; A < ps.ambient_dim(); ++A) {
    CHECK(ps.star_commutator(ps.X(A), ps.P_lower(A)) == ps.constant(I));
    CHECK(ps.star_commutator(ps.theta(A, 1), ps.pi_lower(1, A)) == ps.constant(I));
    CHECK(ps.star_commutator(ps.theta(A, 1), ps.theta(A, 1)).is_zero());
    for (int B = 0; B < ps.ambient_dim(); ++B) {
      if (A == B) continue;
      CHECK(ps.star_commutator(ps.X(A), ps.P_lower(B)).is_zero());
      CHECK(ps.star_commutator(ps.theta(A, 1), ps.pi_lower(1, B)).is_zero());
    }
  }
  // X * P = X P + i/2
  CHECK(ps.star(ps.X(2), ps.P_lower(2)) == ps.X(2) * ps.P_lower(2) + ps.constant(I * GaussRational(frac(1, 2))));
  CHECK(ps.vars()->name(ps.p_var(1)) == "P0'");
}

TEST_CASE("fast star matches the series expansion") {
  std::mt19937_64 rng(11);
  for (int s = 0; s <= 1; ++s) {
    PhaseSpace ps(3, s);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_poly(ps, rng, 3, 4);
      auto g = random_poly(ps, rng, 3, 4);
      auto ref = ps.star_reference(f, g);
      CHECK(ps.star(f, g, false) == ref);
      CHECK(ps.star(f, g, true) == ref);
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(12);
  for (int s = 0; s <= 1; ++s) {
    PhaseSpace ps(3, s);
    for (int trial = 0; trial < 15; ++trial) {
      auto f = random_poly(ps, rng, 3, 3);
      auto g = random_poly(ps, rng, 3, 3);
      auto h = random_poly(ps, rng, 3, 3);
      CHECK(ps.star(ps.star(f, g), h) == ps.star(f, ps.star(g, h)));
    }
  }
}

TEST_CASE("quadratic commutators are i times the Poisson bracket") {
  std::mt19937_64 rng(13);
  PhaseSpace ps(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly(ps, rng, 4, 4).homogeneous_part(2);
    auto g = random_even(ps, rng, 4, 5);
    if (f.is_zero()) continue;
    CHECK(ps.star_commutator(f, g) == ps.poisson(f, g) * I);
  }
}

TEST_CASE("Howe pair") {
  for (int n = 3; n <= 6; ++n) {
    auto rep = howe_check(n);
    CHECK(rep.pass);
    int N = n + 2;
    CHECK(rep.payload["quadratic_space_dim"] == N * (2 * N + 1));
    CHECK(rep.payload["commutant_of_U_dim"] == N * (N - 1) / 2);
    CHECK(rep.payload["commutant_of_L_dim"] == 3);
  }
  CHECK(howe_check(3).payload["quadratic_space_dim"] == 55);
}

TEST_CASE("realization checker catches a wrong image") {
  PhaseSpace ps(3);
  auto Ls = o_n2_symbols(ps);
  Ls[0] = Ls[0] * GaussRational(2);
  CHECK_FALSE(check_realization(ps, o_n2(3), Ls).empty());
  auto Us = sp2_symbols(ps);
  std::swap(Us[0], Us[2]);
  CHECK_FALSE(check_realization(ps, sp2(), Us).empty());
}

TEST_CASE("centralizer modulo the ideal") {
  auto r = centralizer_mod_ideal(3, 4);
  CHECK(r.pass);
  CHECK(r.graded == std::vector<int>{1, 10, 35});
  CHECK(r.dimension == 46);
  for (std::size_t k = 0; k < r.graded.size(); ++k) CHECK(Integer(r.graded[k]) == r.expected[k]);

  auto r4 = centralizer_mod_ideal(4, 2);
  CHECK(r4.graded == std::vector<int>{1, 15});

  CentralizerQuotient cq(3, 2);
  for (const auto& b : cq.basis()) CHECK(cq.in_centralizer(b));
  // U itself lies in the ideal, X^0 X^0 does not commute with P^2
  CHECK(cq.normal_form(cq.phase_space().U(1, 1)).empty());
  CHECK_FALSE(cq.in_centralizer(cq.phase_space().X(0) * cq.phase_space().X(0)));
  // quotient monomials plus ideal rank fill the truncated space
  CHECK(static_cast<int>(cq.quotient_columns().size()) + cq.ideal_rank() == cq.ambient_monomials());

  CHECK_THROWS_AS(centralizer_mod_ideal(3, 3), Error);
  CHECK_THROWS_AS(centralizer_mod_ideal(3, -2), Error);
}

TEST_CASE("L polynomials span the centralizer") {
  auto rep = l_polynomial_span_check(3, 4);
  CHECK(rep.pass);
  CHECK(rep.payload["rank_by_order"] == nlohmann::json({1, 11, 46}));
  CHECK(l_polynomial_span_check(4, 2).pass);
}

TEST_CASE("constraint algebra") {
  for (int n = 3; n <= 5; ++n) CHECK(constraint_algebra_check(n).pass);
  PhaseSpace ps(3);
  CHECK(ps.star_commutator(ps.U(1, 1), ps.U(2, 2)) == ps.U(1, 2) * (I * GaussRational(4)));
  PhaseSpace odd(3, 1);
  CHECK_THROWS_AS(odd.star_commutator(odd.X(0) + odd.theta(0, 1), odd.P_lower(0)), Error);
}

TEST_CASE("monomial enumeration") {
  PhaseSpace ps(3, 1);
  std::vector<int> odd;
  for (int A = 0; A < ps.ambient_dim(); ++A) odd.push_back(ps.theta_var(A, 1));
  CHECK(monomials_of_degree(*ps.vars(), odd, 2).size() == 10);
  CHECK(monomials_of_degree(*ps.vars(), odd, 6).empty());
  std::vector<int> xs{ps.x_var(0), ps.x_var(1)};
  CHECK(monomials_of_degree(*ps.vars(), xs, 3).size() == 4);
}
