// Copyright 2026 The ecrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "ecrank/arith/poly.hpp"
#include "ecrank/arith/rational.hpp"
#include "ecrank/errors.hpp"

namespace ecrank {

/// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& v : a.a_) v *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
    std::vector<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      F inv = F(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {v : A v = 0}.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Basis of {w : w A = 0}.
  std::vector<std::vector<F>> left_nullspace() const { return transpose().nullspace(); }

  /// Some solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (b.size() != rows_) throw InvalidArgument("solve: right-hand side has wrong length");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_, F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
  }

  F det() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
    Matrix m = *this;
    F d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && is_zero(m(p, c))) ++p;
      if (p == rows_) return F(0);
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d *= m(c, c);
      F inv = F(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (is_zero(m(i, c))) continue;
        F f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

using QMatrix = Matrix<Rational>;

/// Characteristic polynomial det(t I - M), monic (Hessenberg reduction).
QPoly characteristic_polynomial(const QMatrix& m);

}  // namespace ecrank
