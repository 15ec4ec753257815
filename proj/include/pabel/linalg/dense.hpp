#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/scalars/field.hpp"

namespace pabel {

/// Row-major dense matrix over a scalar domain.
template <Field D>
class Matrix {
 public:
  using value_type = value_t<D>;

  Matrix(D dom, std::size_t rows, std::size_t cols)
      : dom_(std::move(dom)), rows_(rows), cols_(cols), a_(rows * cols, dom_.zero()) {}

  static Matrix identity(const D& dom, std::size_t n) {
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }

  static Matrix from_rows(const D& dom, const std::vector<std::vector<value_type>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(dom, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw UsageError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : a_) {
      if (!scalar_is_zero(x)) return false;
    }
    return true;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw UsageError("matrix shape mismatch in product");
    Matrix r(x.dom_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const auto& xik = x(i, k);
        if (scalar_is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    }
    return r;
  }
  friend Matrix operator*(const value_type& s, const Matrix& x) {
    Matrix r = x;
    for (auto& e : r.a_) e = s * e;
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k) {
      if (!(x.a_[k] == y.a_[k])) return false;
    }
    return true;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && scalar_is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      const value_type s = dom_.one() / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * s;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || scalar_is_zero((*this)(i, c))) continue;
        const value_type f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  [[nodiscard]] std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  [[nodiscard]] value_type determinant() const {
    if (rows_ != cols_) throw UsageError("determinant of non-square matrix");
    Matrix m = *this;
    value_type det = dom_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && scalar_is_zero(m(p, c))) ++p;
      if (p == rows_) return dom_.zero();
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det = det * m(c, c);
      const value_type s = dom_.one() / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (scalar_is_zero(m(i, c))) continue;
        const value_type f = m(i, c) * s;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
      }
    }
    return det;
  }

  /// Basis of {x : A x = 0}.
  [[nodiscard]] std::vector<std::vector<value_type>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<value_type>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<value_type> v(cols_, dom_.zero());
      v[f] = dom_.one();
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Solves A x = b; nullopt when inconsistent. Picks the solution with free variables zero.
  [[nodiscard]] std::optional<std::vector<value_type>> solve(const std::vector<value_type>& b) const {
    if (b.size() != rows_) throw UsageError("rhs length mismatch");
    Matrix aug(dom_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    std::vector<value_type> x(cols_, dom_.zero());
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == cols_) return std::nullopt;
      x[piv[r]] = aug(r, cols_);
    }
    return x;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  [[nodiscard]] value_type trace() const {
    value_type t = dom_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
    return t;
  }

  [[nodiscard]] std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
    }
    return out;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch");
  }

  D dom_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> a_;
};

/// Laplace expansion over a commutative ring; only for small orders (<= 5).
template <class T>
T determinant_cofactor(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) throw UsageError("determinant of empty matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T det = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][j] * determinant_cofactor(minor, zero);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace pabel
