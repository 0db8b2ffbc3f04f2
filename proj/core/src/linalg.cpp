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

#include "vstlab/linalg.hpp"

namespace vstlab {

std::optional<PolyMatrix> inverse_unit_2x2(const PolyMatrix& a) {
  if (a.size() != 2) throw MismatchError("inverse_unit_2x2 expects a 2x2 matrix");
  auto inv_det = det(a).unit_inverse();
  if (!inv_det) return std::nullopt;
  return PolyMatrix{{a(1, 1) * *inv_det, -a(0, 1) * *inv_det},
                    {-a(1, 0) * *inv_det, a(0, 0) * *inv_det}};
}

std::optional<FieldMatrix> inverse(const FieldMatrix& a) {
  const std::size_t n = a.size();
  FieldMatrix m = a;
  FieldMatrix inv = FieldMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Gaussian scale = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      Gaussian factor = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Row reduction on a rows x cols block stored row-major.
std::vector<std::size_t> rref(std::vector<std::vector<Gaussian>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Gaussian scale = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= scale;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Gaussian factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Gaussian>> kernel_of_rows(std::vector<std::vector<Gaussian>> rows,
                                                  std::size_t cols) {
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Gaussian>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Gaussian> v(cols, Gaussian(0));
    v[free] = Gaussian(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Gaussian>> rows_of(const FieldMatrix& a) {
  std::vector<std::vector<Gaussian>> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows[i].assign(a.entries().begin() + static_cast<std::ptrdiff_t>(i * a.size()),
                   a.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * a.size()));
  }
  return rows;
}

}  // namespace

std::vector<std::size_t> row_reduce(FieldMatrix& a) {
  auto rows = rows_of(a);
  auto pivots = rref(rows, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) a(i, j) = rows[i][j];
  }
  return pivots;
}

std::size_t rank(const FieldMatrix& a) {
  auto rows = rows_of(a);
  return rref(rows, a.size()).size();
}

std::vector<std::vector<Gaussian>> kernel(const FieldMatrix& a) {
  return kernel_of_rows(rows_of(a), a.size());
}

std::vector<std::vector<Gaussian>> common_kernel(std::span<const FieldMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t n = blocks.front().size();
  std::vector<std::vector<Gaussian>> rows;
  for (const auto& b : blocks) {
    if (b.size() != n) throw MismatchError("common_kernel: mixed matrix sizes");
    auto r = rows_of(b);
    rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return kernel_of_rows(std::move(rows), n);
}

void EchelonBasis::reduce(std::vector<Gaussian>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    Gaussian factor = v[p];
    const auto& row = rows_[k];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
  }
}

bool EchelonBasis::insert(std::vector<Gaussian> v) {
  if (v.size() != dim_) throw MismatchError("vector length does not match basis dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Gaussian scale = v[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) v[j] *= scale;
  // Keep the basis fully reduced so reduce() is a single pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Gaussian factor = row[p];
    for (std::size_t j = p; j < dim_; ++j) row[j] -= factor * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<Gaussian> v) const {
  if (v.size() != dim_) throw MismatchError("vector length does not match basis dimension");
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace vstlab
