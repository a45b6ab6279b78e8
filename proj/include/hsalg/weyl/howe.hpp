#pragma once

#include <string>
#include <vector>

#include "hsalg/exactcore/linalg.hpp"
#include "hsalg/liealg/presentation.hpp"
#include "hsalg/report/check.hpp"
#include "hsalg/weyl/phase_space.hpp"

namespace hsalg {

/// Monomials of exact total degree d in the given variables (odd ones at most once).
std::vector<Monomial> monomials_of_degree(const VariableTable& vars, const std::vector<int>& variables, int d);

/// Linear combination of symbol images along an algebra element.
SuperPolynomial image_of(const AlgebraElement& x, const std::vector<SuperPolynomial>& images);

struct RealizationFailure {
  std::string x, y;
};

/// Pairs of basis elements whose graded star commutator differs from the image
/// of their bracket.
std::vector<RealizationFailure> check_realization(const PhaseSpace& ps, const LieAlgebra& alg,
                                                  const std::vector<SuperPolynomial>& images);

/// Images of the o_n2(n) basis: J[A,B] -> L^{AB}.
std::vector<SuperPolynomial> o_n2_symbols(const PhaseSpace& ps);
/// Images of the sp2() basis: t[a,b] -> U_ab.
std::vector<SuperPolynomial> sp2_symbols(const PhaseSpace& ps);

/// Result of a linear-dependency scan: rank and a basis of relations
/// (coefficient vectors, indexed like the input).
struct Dependencies {
  int rank = 0;
  std::vector<std::vector<GaussRational>> relations;
};
Dependencies linear_dependencies(const std::vector<SparseVec>& vectors);

/// Elements of span(candidates) whose graded star commutator with every
/// generator vanishes, as a basis of polynomials.
std::vector<SuperPolynomial> star_commutant(const PhaseSpace& ps, const std::vector<SuperPolynomial>& candidates,
                                            const std::vector<SuperPolynomial>& generators);

/// Rank of a family of polynomials.
int polynomial_rank(const std::vector<SuperPolynomial>& polys);

/// (a) [L, U]* = 0, (b) commutant of the U's among quadratics is span L,
/// (c) commutant of the L's among quadratics is span U.
CheckReport howe_check(int n);

/// Bounded-degree model of the higher-spin algebra: even-degree symbols of
/// degree <= 2m modulo I = span{U_ab * g}, and the classes whose star
/// commutators with the U's fall back into I.
class CentralizerQuotient {
 public:
  CentralizerQuotient(int n, int m);

  const PhaseSpace& phase_space() const { return ps_; }
  int m() const { return m_; }
  int ambient_monomials() const { return static_cast<int>(W_.size()); }
  int ideal_rank() const { return ideal_.rank(); }
  /// Monomials that are not leading terms of I (a basis of the quotient W/I).
  const std::vector<int>& quotient_columns() const { return Q_; }
  /// Dimension of the centralizer modulo I up to degree 2m.
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Representatives supported on the quotient monomials.
  const std::vector<SuperPolynomial>& basis() const { return basis_; }

  SparseVec to_vector(const SuperPolynomial& f) const;
  SuperPolynomial from_vector(const SparseVec& v) const;
  /// Normal form modulo I.
  SparseVec normal_form(const SuperPolynomial& f) const;
  bool in_centralizer(const SuperPolynomial& f) const;

 private:
  PhaseSpace ps_;
  int m_;
  std::vector<Monomial> W_;
  std::map<Monomial, int> column_;
  SparseEchelon ideal_;
  std::vector<int> Q_;
  std::vector<SuperPolynomial> U_;
  std::vector<SuperPolynomial> basis_;
};

struct CentralizerResult {
  int n = 0;
  int degree = 0;
  int dimension = 0;                 // total up to the degree
  std::vector<int> cumulative;       // D(0), D(2), ..., D(2m)
  std::vector<int> graded;           // D(2k) - D(2k-2)
  std::vector<Integer> expected;     // o_dim([k,k], n+2)
  std::vector<SuperPolynomial> basis;
  bool pass = false;
  nlohmann::json to_json(bool with_basis) const;
};

/// Throws for odd or negative degree.
CentralizerResult centralizer_mod_ideal(int n, int degree);

/// Pointwise polynomials in the L^{AB} span the centralizer modulo I, and the
/// total antisymmetrization of L^{AB} L^{CD} vanishes.
CheckReport l_polynomial_span_check(int n, int degree);

/// The U's close on sp(2), [X^2, P^2]* = 4i X.P and {f, X.P} = h f on
/// degree-h polynomials in X.
CheckReport constraint_algebra_check(int n);

}  // namespace hsalg
