#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hsalg/exactcore/linalg.hpp"
#include "hsalg/liealg/algebras.hpp"

namespace hsalg {

/// Sorted multiset of indices in 1..n standing for J+_{i1}...J+_{iL}|E0;0>.
using RaisingMonomial = std::vector<int>;
using ModuleVector = std::map<RaisingMonomial, GaussRational>;

/// All multisets of size L, lexicographic.
std::vector<RaisingMonomial> level_basis(int n, int L);

/// c0 + c1*E0.
struct Affine {
  Rational c0, c1;
  Affine& operator+=(const Affine& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0; }
};

/// Scalar-ground-state Verma module of o(n,2) up to a maximal level. States are
/// polynomials in commuting x_1..x_n (x_i standing for J+_i); a level-L basis
/// vector is an exponent vector, ordered as in level_basis.
class VermaModule {
 public:
  using Exponent = std::vector<int>;
  struct Term {
    int index;
    Affine coeff;
  };

  VermaModule(int n, int max_level);

  int n() const { return n_; }
  int max_level() const { return max_level_; }
  int level_dim(int L) const { return static_cast<int>(level_at(L).size()); }
  const std::vector<Exponent>& level(int L) const { return level_at(L); }
  int index_of(const Exponent& e) const;
  RaisingMonomial monomial(int L, int idx) const;
  Exponent exponent(const RaisingMonomial& m) const;

  /// J-_i (0-based i) applied to basis vector idx of level L >= 1, expanded on level L-1.
  const std::vector<Term>& lower(int i, int L, int idx) const;

  /// Gram matrices of levels 0..L with entries in Q(i)[E0] or at a fixed E0.
  std::vector<PolyMatrix> gram_symbolic(int L, bool parallel = true) const;
  std::vector<QMatrix> gram_at(int L, const GaussRational& e0, bool parallel = true) const;

 private:
  const std::vector<Exponent>& level_at(int L) const;
  template <class S>
  std::vector<Matrix<S>> gram(int L, const S& e0, bool parallel) const;

  int n_, max_level_;
  std::vector<std::vector<Exponent>> levels_;
  std::vector<std::map<Exponent, int>> index_;
  // lowering_[L][i][idx]
  std::vector<std::vector<std::vector<std::vector<Term>>>> lowering_;
};

PolyMatrix gram_matrix(int n, int L);
QMatrix gram_matrix_at(int n, int L, const GaussRational& e0);
/// Same rows without OpenMP; kept for testing and benchmarks.
PolyMatrix gram_matrix_serial(int n, int L);

/// <v|w> as a polynomial in E0, antilinear in v.
UPoly shapovalov(int n, const ModuleVector& v, const ModuleVector& w);

/// Determinant of the level-L Gram matrix, computed block by block.
UPoly gram_determinant(int n, int L);

/// Kernel of the Gram matrix at a concrete E0.
std::vector<ModuleVector> null_vectors(int n, int L, const GaussRational& e0);

/// The trace vector sum_i J+_i J+_i |E0;0>.
ModuleVector trace_vector(int n);

/// C(n+s-1, s) - C(n+s-3, s-2).
Integer quotient_dim(int n, int s);

/// Positive-definiteness of each Gram level 0..L at E0.
std::vector<DefiniteReport> unitarity_scan(int n, int L, const GaussRational& e0);

/// Quotient of the Verma module by the submodule generated by the trace vector.
/// Level bases are the monomials with x_1-exponent at most one; any state is
/// reduced to them by exact row reduction against the trace multiples.
class TraceQuotient {
 public:
  TraceQuotient(const VermaModule& module, int max_level);

  int level_dim(int t) const { return static_cast<int>(basis_.at(static_cast<std::size_t>(t)).size()); }
  /// Verma indices (at level t) of the quotient basis, ascending.
  const std::vector<int>& basis(int t) const { return basis_.at(static_cast<std::size_t>(t)); }
  /// Coordinates of a level-t Verma state in the quotient basis.
  SparseVec reduce(int t, const SparseVec& state) const;
  /// Quotient position of a Verma index that is itself a basis vector, or -1.
  int position(int t, int verma_index) const;

 private:
  std::vector<std::vector<int>> basis_;
  std::vector<std::vector<int>> column_of_;  // Verma index -> echelon column
  std::vector<std::vector<int>> verma_of_;   // echelon column -> Verma index
  std::vector<std::vector<int>> position_;
  std::vector<SparseEchelon> traces_;
};

/// Operator on levels 0..Lmax. Columns at levels above trusted_top are
/// polluted by truncation; raise bounds how many levels it climbs.
class TruncatedOperator {
 public:
  TruncatedOperator(QMatrix m, std::vector<int> offsets, int trusted_top, int raise);

  const QMatrix& matrix() const { return m_; }
  int lmax() const { return static_cast<int>(offsets_.size()) - 2; }
  int trusted_top() const { return trusted_; }
  int raise() const { return raise_; }

  /// Rows of all levels, columns of the given level. Throws "interior only"
  /// above the trusted level.
  QMatrix columns_at(int level) const;
  /// The (level -> level) diagonal block. Throws "interior only" as above.
  QMatrix block(int level) const;
  /// Exact equality on columns of levels 0..up_to. Throws "interior only" when
  /// either side is not trusted there.
  bool equals_on(const TruncatedOperator& other, int up_to) const;
  /// Common scalar value when the operator is scalar on levels 0..up_to.
  std::optional<GaussRational> scalar_on(int up_to) const;

  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator*(const GaussRational& c, const TruncatedOperator& a);
  friend TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) { return a * b - b * a; }

 private:
  void check_level(int level) const;
  QMatrix m_;
  std::vector<int> offsets_;
  int trusted_, raise_;
};

/// Matrices of the compact basis on levels 0..Lmax. At E0 = n/2 - 1 the trace
/// quotient is used; otherwise the full Verma module.
class TruncatedModule {
 public:
  TruncatedModule(int n, int lmax, const GaussRational& e0);

  int n() const { return n_; }
  int lmax() const { return lmax_; }
  const GaussRational& e0() const { return e0_; }
  bool quotient() const { return quotient_.has_value(); }
  int level_dim(int t) const;
  int dim() const { return offsets_.back(); }
  const BasisChange& compact() const { return compact_; }
  const LieAlgebra& algebra() const { return compact_.algebra; }

  /// Matrix of an element of algebra().
  TruncatedOperator represent(const AlgebraElement& x) const;
  TruncatedOperator generator(const std::string& label) const { return represent(algebra().basis(label)); }
  TruncatedOperator identity() const;
  /// E^2 - (1/2) sum_i (J+_i J-_i + J-_i J+_i) + sum_{i<j} J_ij^2.
  TruncatedOperator casimir() const;
  /// sum_{i<j} J_ij^2.
  TruncatedOperator compact_casimir() const;

  struct RelationFailure {
    std::string x, y;
  };
  /// [rho(x), rho(y)] == rho([x, y]) on interior levels for every pair of basis
  /// elements; returns the failing pairs.
  std::vector<RelationFailure> check_relations() const;

 private:
  int n_, lmax_;
  GaussRational e0_;
  VermaModule module_;
  std::optional<TraceQuotient> quotient_;
  BasisChange compact_;
  std::vector<int> offsets_;
  std::vector<TruncatedOperator> generators_;
};

/// E0 = n/2 - 1.
Rational singleton_energy(int n);

struct BranchingCheckRow {
  int t;
  int quotient_dim;
  Integer o_dim;
  GaussRational energy;
  Rational expected_energy;
  GaussRational compact_casimir;
  bool pass;
};

/// Level dimensions and energies of the scalar singleton against o(n) labels.
std::vector<BranchingCheckRow> branching_check(int n, int tmax);

/// Eigenvalue of E = [J-_1, J+_1]/2 on level t of the scalar singleton, computed
/// state by state in the trace quotient without building dense operators;
/// nullopt when it is not a scalar there.
std::optional<GaussRational> level_energy(int n, int t);

struct MajoranaMass {
  int s;
  GaussRational energy;
  GaussRational mass;
};

/// Masses M / E_s with E_s read from represent(E) on level s; throws unless M > 0.
std::vector<MajoranaMass> majorana_spectrum(int n, const Rational& M, int smax);

nlohmann::json to_json(const ModuleVector& v);

}  // namespace hsalg
