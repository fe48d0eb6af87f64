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

#include <array>
#include <cmath>
#include <complex>

#include "sov4/invariants.hpp"
#include "sov4/random.hpp"

namespace sov {

using ApproxMatrix = Matrix<ApproxScalar>;

inline double frobenius_norm(const ApproxMatrix& m) {
  double s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

inline double norm(const MultiVector<ApproxScalar>& v) {
  double s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += std::norm(v[k]);
  return std::sqrt(s);
}

inline MultiVector<ApproxScalar> to_approx(const MultiVector<GaussianRational>& v) {
  return map_coeffs<ApproxScalar>(v, [](const GaussianRational& x) { return x.to_approx(); });
}

inline MultiVector<ApproxScalar> to_approx(const MultiVector<ExactScalar>& v) {
  return map_coeffs<ApproxScalar>(v, [](const ExactScalar& x) { return x.to_approx(); });
}

/// True iff every pair e_{2k-1} ^ e_{2k} has vanishing interior product
/// with psi, relative to |psi|.
inline bool is_sov_approx(const MultiVector<ApproxScalar>& psi, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (psi.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "SOV test needs a grade-4 vector");
  const double scale = norm(psi);
  for (int k = 0; k < 4; ++k) {
    auto pair = MultiVector<ApproxScalar>::from_mask((1u << (2 * k)) | (1u << (2 * k + 1)));
    if (norm(interior(pair, psi)) > tol * scale) return false;
  }
  return true;
}

struct BlockPermFactorization {
  std::array<int, 4> perm{0, 1, 2, 3};  // block column q sits in block row perm[q]
  std::array<ApproxMatrix, 4> blocks;    // det 1, indexed by column q
  std::array<ApproxScalar, 4> lambda{1.0, 1.0, 1.0, 1.0};
  double residual = 0;

  /// The block-permutation matrix with the unit-determinant blocks.
  ApproxMatrix unimodular_part() const {
    ApproxMatrix m(8, 8);
    for (int q = 0; q < 4; ++q)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m(2 * perm[q] + a, 2 * q + b) = blocks[q](a, b);
    return m;
  }
  /// diag(lambda_k I2).
  ApproxMatrix scalar_part() const {
    ApproxMatrix s(8, 8);
    for (int k = 0; k < 8; ++k) s(k, k) = lambda[k / 2];
    return s;
  }
  ApproxMatrix reassemble() const { return unimodular_part() * scalar_part(); }
};

inline ApproxMatrix block_of(const ApproxMatrix& u, int r, int c) {
  ApproxMatrix b(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d) b(a, d) = u(2 * r + a, 2 * c + d);
  return b;
}

inline BlockPermFactorization factor_block_perm(const ApproxMatrix& u, double tol = 1e-8) {
  if (u.rows() != 8 || u.cols() != 8) throw Error(ErrorCode::kInvalidArgument, "expected an 8x8 matrix");
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  const double scale = frobenius_norm(u) / std::sqrt(8.0);
  if (frobenius_norm(u.adjoint() * u - ApproxMatrix::identity(8)) > tol * std::sqrt(8.0))
    throw Error(ErrorCode::kInvalidArgument, "matrix is not unitary within tolerance");
  if (std::abs(determinant_approx(u) - ApproxScalar(1)) > tol * 8)
    throw Error(ErrorCode::kInvalidArgument, "matrix is not in SU(8) within tolerance");

  // Normalised so a unitary block has norm 1.
  std::array<std::array<double, 4>, 4> norms{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) norms[r][c] = frobenius_norm(block_of(u, r, c)) / (std::sqrt(2.0) * scale);

  BlockPermFactorization out;
  const double hi = std::sqrt(1.0 - tol);
  std::array<int, 4> row_hits{};
  for (int c = 0; c < 4; ++c) {
    int found = -1;
    for (int r = 0; r < 4; ++r) {
      if (norms[r][c] >= hi) {
        if (found >= 0) found = -2;
        if (found == -1) found = r;
      } else if (norms[r][c] > tol) {
        found = -2;
        break;
      }
    }
    if (found < 0) throw NotBlockPermutationError("block pattern is not a permutation", norms);
    out.perm[c] = found;
    ++row_hits[found];
  }
  for (int r = 0; r < 4; ++r)
    if (row_hits[r] != 1) throw NotBlockPermutationError("block pattern is not a permutation", norms);

  ApproxScalar prod = 1;
  for (int q = 0; q < 4; ++q) {
    ApproxMatrix b = block_of(u, out.perm[q], q);
    ApproxScalar det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    out.lambda[q] = std::sqrt(det);  // principal branch
    out.blocks[q] = b * (1.0 / out.lambda[q]);
    prod *= out.lambda[q];
  }
  // prod^2 = det U = 1, so prod = +-1; a sign goes into the first factor.
  if (prod.real() < 0) {
    out.lambda[0] = -out.lambda[0];
    out.blocks[0] = -out.blocks[0];
  }
  out.residual = frobenius_norm(out.reassemble() - u);
  return out;
}

/// Factors U into local unitaries, a qubit permutation and a block scalar
/// that acts trivially on the SOV subspace, given that U maps the generic
/// embedded state phi back into that subspace.
inline BlockPermFactorization theorem3_factor(const ApproxMatrix& u, const QubitState<GaussianRational>& phi,
                                              double tol = 1e-8) {
  if (!is_generic(phi)) throw Error(ErrorCode::kNotGeneric, "state is not in the generic set");
  const MultiVector<ApproxScalar> w = to_approx(embed(phi));
  const MultiVector<ApproxScalar> image = compound(u, w);
  if (!is_sov_approx(image, tol)) throw Error(ErrorCode::kNotSOVImage, "image of the state leaves the SOV subspace");
  BlockPermFactorization f = factor_block_perm(u, tol);
  const double gap = norm(compound(f.reassemble(), w) - image) / norm(w);
  f.residual = std::max(f.residual, gap);
  return f;
}

inline BlockPermFactorization theorem3_factor(const ApproxMatrix& u, const QubitState<ExactScalar>& phi,
                                              double tol = 1e-8) {
  return theorem3_factor(u, map_state<GaussianRational>(phi, [](const ExactScalar& x) { return x.to_gaussian(); }),
                         tol);
}

}  // namespace sov
