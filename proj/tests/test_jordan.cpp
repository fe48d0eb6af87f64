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
using MV = MultiVector<G>;

void expect_commuting(const JordanSplit<G>& s) {
  EXPECT_TRUE(odd_bracket(s.semisimple, s.nilpotent).is_zero());
}

TEST(Jordan, CartanElementIsSemisimple) {
  auto psi = embed(a_state(G(1), G(2), G(3), G(4)));
  auto s = jordan_decompose(psi);
  EXPECT_EQ(s.semisimple, psi);
  EXPECT_TRUE(s.nilpotent.is_zero());
  for (const auto& p : cartan_basis<G>()) EXPECT_TRUE(is_semisimple(p));
}

TEST(Jordan, NilpotentInput) {
  auto e = MV::unit({1, 2, 3, 4});
  EXPECT_TRUE(is_nilpotent(e));
  auto w = embed(testing::nilpotent_witness(9));
  auto s = jordan_decompose(w);
  EXPECT_TRUE(s.semisimple.is_zero());
  EXPECT_EQ(s.nilpotent, w);
}

TEST(Jordan, FamilySplitsMatchZeroParameterPattern) {
  Rng rng(50);
  int max_index = 0;
  for (int fam : {2, 3, 6, 9, 10}) {
    for (int t = 0; t < 3; ++t) {
      auto p = testing::random_params(rng, fam);
      auto psi = embed(testing::rep(fam, p));
      auto nil = embed(testing::rep(fam, testing::Params(p.size(), G(0))));
      auto s = jordan_decompose(psi);
      EXPECT_EQ(s.nilpotent, nil) << fam;
      EXPECT_EQ(s.semisimple, psi - nil) << fam;
      expect_commuting(s);
      max_index = std::max(max_index, s.nilpotency_index);
    }
  }
  EXPECT_LE(max_index, 8);
}

TEST(Jordan, NeitherSemisimpleNorNilpotent) {
  auto psi = embed(testing::rep(9, {G(3)}));
  EXPECT_FALSE(is_semisimple(psi));
  EXPECT_FALSE(is_nilpotent(psi));
}

TEST(Jordan, Idempotent) {
  auto psi = embed(testing::rep(6, {G(2), G(make_rational(-1, 3))}));
  auto s = jordan_decompose(psi);
  auto ss = jordan_decompose(s.semisimple);
  EXPECT_EQ(ss.semisimple, s.semisimple);
  EXPECT_TRUE(ss.nilpotent.is_zero());
  auto nn = jordan_decompose(s.nilpotent);
  EXPECT_TRUE(nn.semisimple.is_zero());
  EXPECT_EQ(nn.nilpotent, s.nilpotent);
}

TEST(Jordan, Equivariance) {
  Rng rng(51);
  auto psi = embed(testing::rep(10, {G(make_rational(5, 2))}));
  auto g = local_to_matrix8(random_local_sl(rng));
  auto s = jordan_decompose(psi);
  auto sg = jordan_decompose(compound(g, psi));
  EXPECT_EQ(sg.semisimple, compound(g, s.semisimple));
  EXPECT_EQ(sg.nilpotent, compound(g, s.nilpotent));
}

TEST(Jordan, GenericRandomStateIsSemisimple) {
  Rng rng(52);
  auto psi = embed(random_qubit_state(rng));
  auto s = jordan_decompose(psi);
  EXPECT_EQ(s.semisimple, psi);
}

TEST(Jordan, CharacteristicPolynomialSeesOnlySemisimplePart) {
  auto psi = embed(testing::rep(3, {G(2), G(7)}));
  auto s = jordan_decompose(psi);
  EXPECT_EQ(ad_charpoly(psi), ad_charpoly(s.semisimple));
  auto cn = ad_charpoly(s.nilpotent);
  for (std::size_t k = 0; k + 1 < cn.size(); ++k) EXPECT_TRUE(cn[k].is_zero());
}

TEST(Jordan, FieldRestriction) {
  auto e = nilpotent_triple(50).e;
  try {
    jordan_decompose(e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kFieldRestriction);
  }
}

}  // namespace
}  // namespace sov
