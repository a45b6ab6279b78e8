#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsalg/exactcore/gauss_rational.hpp"
#include "hsalg/exactcore/upoly.hpp"

namespace hsalg {

/// Dense row-major matrix over an exact ring (Rational, GaussRational or UPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = conj((*this)(r, c));
    return t;
  }

  bool is_hermitian() const { return is_square() && *this == conj_transpose(); }

  /// Sets the Hermitian flag after verifying it; throws when M != M^dagger.
  void mark_hermitian() {
    if (!is_hermitian()) throw Error("matrix flagged Hermitian is not Hermitian");
    hermitian_ = true;
  }
  bool hermitian_flag() const { return hermitian_; }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  Matrix block(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        out(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], cols[c]);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    hermitian_ = false;
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    hermitian_ = false;
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    hermitian_ = false;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (is_zero(x)) continue;
        for (int c = 0; c < b.cols_; ++c) {
          const T& y = b(k, c);
          if (is_zero(y)) continue;
          out(r, c) += x * y;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
  bool hermitian_ = false;
};

using RMatrix = Matrix<Rational>;
using QMatrix = Matrix<GaussRational>;
using PolyMatrix = Matrix<UPoly>;

/// Substitutes a value for the indeterminate in every entry.
inline QMatrix evaluate(const PolyMatrix& m, const GaussRational& at) {
  return m.map([&](const UPoly& p) { return p.evaluate(at); });
}

}  // namespace hsalg
