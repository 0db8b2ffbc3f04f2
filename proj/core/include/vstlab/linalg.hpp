/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dense square matrices over Z[t, t^-1] or Q(i), and the exact linear
// algebra the representation checks need.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vstlab/error.hpp"
#include "vstlab/ring.hpp"

namespace vstlab {

template <RingElement R>
class Matrix {
 public:
  Matrix() = default;

  /// n x n zero matrix.
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n, R(0)) {}

  /// Row-major initialization; throws MismatchError unless rows are square.
  Matrix(std::initializer_list<std::initializer_list<R>> rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw MismatchError("matrix rows must form a square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static Matrix diagonal(std::span<const R> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }

  /// Zero-based access.
  R& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const R& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  std::span<const R> entries() const { return entries_; }

  bool is_identity() const { return *this == identity(n_); }

  /// Entrywise image under a ring map (used for specialization).
  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    Matrix<decltype(f(std::declval<const R&>()))> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw MismatchError("matrix product of different sizes");
    const std::size_t n = a.n_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const R& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw MismatchError("matrix sum of different sizes");
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw MismatchError("matrix difference of different sizes");
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Matrix-vector product.
  std::vector<R> apply(std::span<const R> x) const {
    if (x.size() != n_) throw MismatchError("vector length does not match matrix size");
    std::vector<R> y(n_, R(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
      }
    }
    return y;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      out += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != 0) out += ", ";
        out += (*this)(i, j).to_string();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t n_ = 0;
  std::vector<R> entries_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using FieldMatrix = Matrix<Gaussian>;

/// Exact determinant. Cofactor expansion up to size 3, fraction-free
/// (Bareiss) elimination beyond; every Bareiss division is exact.
template <RingElement R>
R det(const Matrix<R>& a) {
  const std::size_t n = a.size();
  if (n == 0) return R(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (n == 3) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  Matrix<R> m = a;
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return R(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = RingTraits<R>::divide(num, prev);
        if (!q) throw Error("Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// n x n matrix that is the identity except for `block` occupying rows and
/// columns i, i+1 (one-based i, 1 <= i <= n-1).
template <RingElement R>
Matrix<R> local_embed(int i, int n, const Matrix<R>& block) {
  if (block.size() != 2) throw MismatchError("local block must be 2x2");
  if (n < 2 || i < 1 || i > n - 1) {
    throw ConstraintError("local_embed index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n - 1));
  }
  auto m = Matrix<R>::identity(static_cast<std::size_t>(n));
  const auto base = static_cast<std::size_t>(i - 1);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) m(base + r, base + c) = block(r, c);
  }
  return m;
}

/// D^-1 X D for D = diag(d).
template <RingElement R>
Matrix<R> conjugate_by_diagonal(const Matrix<R>& x, std::span<const R> d, std::span<const R> d_inv) {
  const std::size_t n = x.size();
  if (d.size() != n || d_inv.size() != n) throw MismatchError("diagonal length mismatch");
  Matrix<R> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!x(i, j).is_zero()) out(i, j) = d_inv[i] * x(i, j) * d[j];
    }
  }
  return out;
}

/// Inverse of a 2x2 matrix over Z[t, t^-1] whose determinant is a unit
/// (adjugate formula); nullopt otherwise.
std::optional<PolyMatrix> inverse_unit_2x2(const PolyMatrix& a);

/// Inverse over Q(i) by Gauss-Jordan elimination; nullopt when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& a);

/// Reduced row echelon form of a square field matrix; returns the pivot
/// columns.
std::vector<std::size_t> row_reduce(FieldMatrix& a);

std::size_t rank(const FieldMatrix& a);

/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Gaussian>> kernel(const FieldMatrix& a);

/// Kernel of a stacked system: rows of every matrix in `blocks` together.
std::vector<std::vector<Gaussian>> common_kernel(std::span<const FieldMatrix> blocks);

/// Incrementally maintained row-reduced basis of a subspace of Q(i)^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis; inserts and returns true when v was
  /// independent.
  bool insert(std::vector<Gaussian> v);
  bool contains(std::vector<Gaussian> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  void reduce(std::vector<Gaussian>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Gaussian>> rows_;  // each normalized, pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace vstlab
