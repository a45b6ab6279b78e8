#include "hsalg/exactcore/linalg.hpp"

#include <algorithm>

namespace hsalg {

namespace {

template <class T, class Div>
T bareiss(Matrix<T> m, Div exact_div) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (int k = 0; k < n; ++k) {
    if (is_zero(m(k, k))) {
      int r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return T();
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = T();
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T() - det : det;
}

}  // namespace

Rational det_exact(const RMatrix& m) {
  return bareiss(m, [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

GaussRational det_exact(const QMatrix& m) {
  return bareiss(m, [](const GaussRational& a, const GaussRational& b) { return a / b; });
}

UPoly det_exact(const PolyMatrix& m) {
  return bareiss(m, [](const UPoly& a, const UPoly& b) { return UPoly::exact_div(a, b); });
}

UPoly det_by_blocks(const PolyMatrix& m) {
  UPoly det(1);
  for (const auto& comp : block_components(m)) det *= det_exact(m.block(comp, comp));
  return det;
}

RrefResult rref(QMatrix m) {
  RrefResult out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    GaussRational inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussRational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<std::vector<GaussRational>> kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<GaussRational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<GaussRational> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = GaussRational(1);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      v[static_cast<std::size_t>(r.pivot_cols[k])] = -r.reduced(static_cast<int>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = GaussRational(1);
  }
  RrefResult res = rref(aug);
  if (static_cast<int>(res.pivot_cols.size()) < n || res.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw Error("matrix is singular");
  }
  QMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = res.reduced(r, n + c);
  return inv;
}

std::optional<std::vector<GaussRational>> solve(const QMatrix& a, const std::vector<GaussRational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: right-hand side size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  RrefResult res = rref(aug);
  std::vector<GaussRational> x(static_cast<std::size_t>(a.cols()));
  for (std::size_t k = 0; k < res.pivot_cols.size(); ++k) {
    int col = res.pivot_cols[k];
    if (col == a.cols()) return std::nullopt;
    x[static_cast<std::size_t>(col)] = res.reduced(static_cast<int>(k), a.cols());
  }
  return x;
}

std::vector<GaussRational> mat_vec(const QMatrix& m, const std::vector<GaussRational>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw Error("mat_vec size mismatch");
  std::vector<GaussRational> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[static_cast<std::size_t>(c)].is_zero())
        out[static_cast<std::size_t>(r)] += m(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

DefiniteReport positive_definite(const QMatrix& m) {
  if (!m.is_hermitian()) throw Error("positive_definite needs a Hermitian matrix");
  DefiniteReport report;
  for (const auto& comp : block_components(m)) {
    QMatrix b = m.block(comp, comp);
    int n = b.rows();
    for (int k = 0; k < n; ++k) {
      const GaussRational& d = b(k, k);
      if (!d.is_real() || sgn(d.re()) <= 0) {
        report.positive_definite = false;
        report.failing_row = comp[static_cast<std::size_t>(k)];
        report.failing_pivot = d.re();
        return report;
      }
      GaussRational inv = d.inverse();
      for (int i = k + 1; i < n; ++i) {
        if (b(i, k).is_zero()) continue;
        GaussRational f = b(i, k) * inv;
        for (int j = k + 1; j < n; ++j) {
          if (!b(k, j).is_zero()) b(i, j) -= f * b(k, j);
        }
      }
    }
  }
  return report;
}

std::vector<GaussRational> leading_principal_minors(const QMatrix& m) {
  if (!m.is_square()) throw Error("leading minors of a non-square matrix");
  std::vector<GaussRational> out;
  std::vector<int> idx;
  for (int k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    out.push_back(det_exact(m.block(idx, idx)));
  }
  return out;
}

SparseVec& axpy(SparseVec& y, const GaussRational& a, const SparseVec& x) {
  if (a.is_zero()) return y;
  for (const auto& [col, v] : x) {
    auto [it, inserted] = y.try_emplace(col, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
  return y;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    GaussRational f = -it->second;
    axpy(v, f, row->second);
    // Only columns above col change, so resume from there.
    it = v.upper_bound(col);
  }
  return v;
}

bool SparseEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  GaussRational inv = r.begin()->second.inverse();
  for (auto& [col, c] : r) c *= inv;
  int pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

}  // namespace hsalg
