#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "hsalg/exactcore/matrix.hpp"

namespace hsalg {

/// Fraction-free (Bareiss) determinants. Non-square input throws.
Rational det_exact(const RMatrix& m);
GaussRational det_exact(const QMatrix& m);
UPoly det_exact(const PolyMatrix& m);

struct RrefResult {
  QMatrix reduced;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form over Q(i).
RrefResult rref(QMatrix m);
int rank(const QMatrix& m);

/// Exact basis of the right kernel, one vector per free column (free entry = 1).
std::vector<std::vector<GaussRational>> kernel_basis(const QMatrix& m);

/// Inverse of a square matrix; throws when singular.
QMatrix inverse(const QMatrix& m);

/// Some solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<GaussRational>> solve(const QMatrix& a, const std::vector<GaussRational>& b);

std::vector<GaussRational> mat_vec(const QMatrix& m, const std::vector<GaussRational>& v);

/// Connected components of the graph with an edge r-c whenever entry (r,c) or
/// (c,r) is nonzero. A square matrix is block diagonal up to a simultaneous
/// permutation of rows and columns along these components.
template <class T>
std::vector<std::vector<int>> block_components(const Matrix<T>& m) {
  if (!m.is_square()) throw Error("block_components needs a square matrix");
  int n = m.rows();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) parent[static_cast<std::size_t>(k)] = k;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (!is_zero(m(r, c)) || !is_zero(m(c, r))) parent[static_cast<std::size_t>(find(r))] = find(c);
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < n; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

/// Determinant as a product over diagonal blocks.
UPoly det_by_blocks(const PolyMatrix& m);

struct DefiniteReport {
  bool positive_definite = true;
  /// Row of the first non-positive pivot inside its block, -1 when definite.
  int failing_row = -1;
  Rational failing_pivot;
};

/// Sylvester test for a Hermitian matrix, block by block: every LDL pivot must
/// be a positive rational. Throws when the matrix is not Hermitian.
DefiniteReport positive_definite(const QMatrix& m);

/// Determinants of the leading principal submatrices, sizes 1..n.
std::vector<GaussRational> leading_principal_minors(const QMatrix& m);

using SparseVec = std::map<int, GaussRational>;

SparseVec& axpy(SparseVec& y, const GaussRational& a, const SparseVec& x);

/// Incremental row echelon basis of sparse vectors. Each stored row is
/// normalized so its pivot (smallest column) has coefficient 1, and no stored
/// row has a nonzero entry in another row's pivot column.
class SparseEchelon {
 public:
  /// Adds v to the span; returns false when v was already dependent.
  bool insert(const SparseVec& v);
  /// Residue of v after eliminating all pivot columns (zero iff v is in the span).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return rows_.count(col) != 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row
};

}  // namespace hsalg
