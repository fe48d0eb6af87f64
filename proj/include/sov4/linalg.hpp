// Copyright 2026 The sov4 Authors
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

#include <cstddef>
#include <optional>
#include <vector>

#include "sov4/matrix.hpp"

namespace sov {

// Plain Gaussian elimination over an exact field. Used for small systems,
// for anything involving radicals, and as the oracle for the modular code.

template <class T>
struct Echelon {
  Matrix<T> rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> reduced_echelon(Matrix<T> m) {
  static_assert(is_exact_v<T>, "exact field required");
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

/// Rank by forward elimination only (cheaper than the reduced form).
template <class T>
std::size_t rank(Matrix<T> m) {
  static_assert(is_exact_v<T>, "exact field required");
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    T inv = T(1) / m(row, col);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      T f = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      }
    }
    ++row;
  }
  return row;
}

/// Basis of the right kernel, one column vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Echelon<T> e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; nullopt when inconsistent. Free variables are set to 0.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon<T> e = reduced_echelon(std::move(aug));
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref(r, m.cols());
  }
  return x;
}

template <class T>
T determinant(Matrix<T> m) {
  static_assert(is_exact_v<T>, "exact field required");
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return T(0);
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det = det * m(col, col);
    T inv = T(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      T f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!is_zero(m(col, c))) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  Echelon<T> e = reduced_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::kSingularSystem, "matrix is singular");
  }
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

/// Division-free characteristic polynomial (Berkowitz). Coefficients in
/// ascending order, monic of degree n: det(xI - m). Quartic in n, so only
/// meant for small matrices and as a cross-check.
template <class T>
std::vector<T> charpoly_berkowitz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  // v holds det(xI - A_k) coefficients in descending order for the leading
  // k x k block.
  std::vector<T> v{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // A_{k+1} = [[A_k, C],[R, a_kk]] with R row k cols < k, C col k rows < k.
    std::vector<T> col(k), row(k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = a(i, k);
      row[i] = a(k, i);
    }
    // Toeplitz entries: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
    std::vector<T> t(k + 2, T(0));
    t[0] = T(1);
    t[1] = -a(k, k);
    std::vector<T> w = col;
    for (std::size_t j = 2; j < k + 2; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < k; ++i) dot += row[i] * w[i];
      t[j] = -dot;
      std::vector<T> nw(k, T(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
          if (!is_zero(a(i, l)) && !is_zero(w[l])) nw[i] += a(i, l) * w[l];
        }
      w = std::move(nw);
    }
    std::vector<T> nv(k + 2, T(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) nv[i] += t[i - j] * v[j];
    v = std::move(nv);
  }
  std::vector<T> asc(v.rbegin(), v.rend());
  return asc;
}

}  // namespace sov
