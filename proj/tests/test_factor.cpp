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


#include <gtest/gtest.h>

#include "support.hpp"

namespace sov {
namespace {

using G = GaussianRational;
using AM = ApproxMatrix;

double max_abs_diff(const AM& a, const AM& b) { return frobenius_norm(a - b); }

TEST(Factor, IsSovApprox) {
  Rng rng(70);
  EXPECT_TRUE(is_sov_approx(to_approx(embed(random_qubit_state(rng))), 1e-12));
  EXPECT_FALSE(is_sov_approx(MultiVector<ApproxScalar>::unit({1, 2, 3, 4}), 1e-12));
  auto w = to_approx(embed(random_qubit_state(rng)));
  EXPECT_FALSE(is_sov_approx(compound(haar_special_unitary(8, rng), w), 1e-8));
  EXPECT_THROW(is_sov_approx(w, 0.0), Error);
}

TEST(Factor, Identity) {
  auto f = factor_block_perm(AM::identity(8));
  EXPECT_EQ(f.perm, (std::array<int, 4>{0, 1, 2, 3}));
  for (int q = 0; q < 4; ++q) {
    EXPECT_LT(max_abs_diff(f.blocks[q], AM::identity(2)), 1e-15);
    EXPECT_EQ(f.lambda[q], ApproxScalar(1));
  }
  EXPECT_EQ(f.residual, 0.0);
}

TEST(Factor, RecoversPerturbedLocalOperator) {
  Rng rng(71);
  std::normal_distribution<double> noise(0.0, 1e-12);
  for (int t = 0; t < 20; ++t) {
    auto l = random_local_su(rng);
    AM u = local_to_matrix8(l);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) u(r, c) += ApproxScalar(noise(rng), noise(rng));
    auto f = factor_block_perm(u);
    EXPECT_EQ(f.perm, l.perm);
    const bool odd = permutation_parity(l.perm) < 0;
    for (int q = 0; q < 4; ++q) {
      AM g = l.g[q] * ApproxScalar(odd && q == 0 ? -1.0 : 1.0);
      AM got = f.blocks[q] * f.lambda[q];
      EXPECT_LT(max_abs_diff(got, g), 1e-10);
      ApproxScalar det = f.blocks[q](0, 0) * f.blocks[q](1, 1) - f.blocks[q](0, 1) * f.blocks[q](1, 0);
      EXPECT_LT(std::abs(det - 1.0), 1e-10);
    }
    ApproxScalar prod = f.lambda[0] * f.lambda[1] * f.lambda[2] * f.lambda[3];
    EXPECT_LT(std::abs(prod - 1.0), 1e-10);
    EXPECT_LT(f.residual, 1e-10);
    EXPECT_LT(max_abs_diff(f.reassemble(), u), 1e-10);
  }
}

TEST(Factor, RejectsHaarUnitary) {
  Rng rng(72);
  for (int t = 0; t < 10; ++t) {
    try {
      factor_block_perm(haar_special_unitary(8, rng));
      FAIL();
    } catch (const NotBlockPermutationError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotBlockPermutation);
      double total = 0;
      for (const auto& row : e.block_norms())
        for (double x : row) total += x * x;
      EXPECT_NEAR(total, 4.0, 1e-9);
    }
  }
}

TEST(Factor, RejectsNonUnitaryInput) {
  AM u = AM::identity(8) * ApproxScalar(2.0);
  EXPECT_THROW(factor_block_perm(u), Error);
  AM v = AM::identity(8);
  v(0, 0) = ApproxScalar(0, 1);
  v(1, 1) = ApproxScalar(0, 1);
  v(2, 2) = ApproxScalar(0, 1);
  EXPECT_THROW(factor_block_perm(v), Error);
}

TEST(Factor, GenericStateRoundTrip) {
  Rng rng(73);
  auto phi = a_state(G(1), G(2), G(3), G(4));
  auto w = to_approx(embed(phi));
  for (int t = 0; t < 10; ++t) {
    auto l = random_local_su(rng);
    AM u = local_to_matrix8(l);
    auto f = theorem3_factor(u, phi);
    EXPECT_LT(f.residual, 1e-10);
    // S = diag(lambda_k I2) acts trivially on the SOV subspace.
    EXPECT_LT(norm(compound(f.scalar_part(), w) - w), 1e-12);
  }
  auto f = theorem3_factor(AM::identity(8), phi);
  EXPECT_EQ(f.residual, 0.0);
}

TEST(Factor, GenericStateErrors) {
  try {
    theorem3_factor(AM::identity(8), a_state(G(1), G(1), G(2), G(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotGeneric);
  }
  Rng rng(74);
  try {
    theorem3_factor(haar_special_unitary(8, rng), a_state(G(1), G(2), G(3), G(4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSOVImage);
  }
}

TEST(Factor, MinorEquationsOnConstructedOperators) {
  // X = U g with g local. For each block row, the 24 minors D_ij taken on
  // its two rows with columns i < j from different column blocks vanish.
  Rng rng(75);
  auto l = random_local_su(rng);
  AM x = local_to_matrix8(l) * local_to_matrix8(random_local_su(rng, false));
  for (int rb = 0; rb < 4; ++rb)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = c1 + 1; c2 < 4; ++c2)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            ApproxScalar d = x(2 * rb, 2 * c1 + a) * x(2 * rb + 1, 2 * c2 + b) -
                             x(2 * rb, 2 * c2 + b) * x(2 * rb + 1, 2 * c1 + a);
            EXPECT_LT(std::abs(d), 1e-12);
          }
}

}  // namespace
}  // namespace sov
