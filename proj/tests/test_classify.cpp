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
using testing::Params;
using testing::rep;

TEST(Classify, ZeroAndOrbitOne) {
  auto z = fingerprint(MV(4));
  for (int r : z.ranks) EXPECT_EQ(r, 0);
  EXPECT_EQ(identify_class(MV(4)).label, 0);
  EXPECT_EQ(identify_class(MV(4)).family, 1);
  EXPECT_EQ(fingerprint(MV::unit({1, 2, 3, 4})), nilpotent_class_table()[1].fingerprint);
  EXPECT_EQ(fingerprint(MV::unit({1, 2, 3, 4})).ranks[0], 34);
}

TEST(Classify, TableRederivedFromTriples) {
  const auto& table = nilpotent_class_table();
  for (std::size_t k = 1; k < table.size(); ++k) {
    const auto& c = table[k];
    EXPECT_EQ(fingerprint(nilpotent_triple(c.label).e), c.fingerprint) << c.label;
    EXPECT_EQ(family_of_label(c.label), c.family);
  }
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = a + 1; b < table.size(); ++b) EXPECT_NE(table[a].fingerprint, table[b].fingerprint);
}

TEST(Classify, FingerprintInvariantUnderLocalOperators) {
  Rng rng(60);
  auto n = embed(testing::nilpotent_witness(44));
  auto g = local_to_matrix8(random_local_sl(rng));
  EXPECT_EQ(fingerprint(compound(g, n)), fingerprint(n));
}

TEST(Classify, NotNilpotent) {
  try {
    fingerprint(cartan_basis<G>()[1]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNilpotent);
  }
}

TEST(Classify, FamiliesAtZeroParameters) {
  const std::map<int, int> want = {{2, 1}, {3, 2}, {6, 6}, {9, 20}, {10, 5}};
  for (auto [fam, label] : want) {
    auto c = identify_class(embed(rep(fam, Params(family_arity(fam), G(0)))));
    EXPECT_EQ(c.label, label) << fam;
    EXPECT_EQ(c.family, fam);
  }
  for (int label : {9, 44, 50}) EXPECT_EQ(identify_class(embed(testing::nilpotent_witness(label))).label, label);
}

TEST(Classify, FamilyNineNilpotentPart) {
  auto s = jordan_decompose(embed(rep(9, {G(4)})));
  auto c = identify_class(s.nilpotent);
  EXPECT_EQ(c.label, 20);
  EXPECT_EQ(c.family, 9);
}

TEST(Classify, DecisionExamples) {
  Rng rng(61);
  G a(random_rational(rng)), b(random_rational(rng));
  EXPECT_TRUE(slocc_equivalent(rep(3, {a, b}), rep(3, {b, a})).equivalent);
  G h(make_rational(1, 2));
  EXPECT_TRUE(slocc_equivalent(rep(6, {a, b}), rep(6, {h * (a + G(3) * b), h * (a - b)})).equivalent);
  auto r = slocc_equivalent(rep(9, {G(1)}), rep(9, {G(2)}));
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.fingerprints[0], r.fingerprints[1]);
  EXPECT_NE(r.quadruples[0], r.quadruples[1]);
  EXPECT_EQ(r.labels[0], 20);
  EXPECT_NE(to_text(r).find("equivalent: no"), std::string::npos);
}

TEST(Classify, ReflexiveSymmetricAndDressingInvariant) {
  Rng rng(62);
  auto phi = rep(2, testing::random_params(rng, 2));
  auto psi = rep(2, testing::random_params(rng, 2));
  EXPECT_TRUE(slocc_equivalent(phi, phi).equivalent);
  bool v = slocc_equivalent(phi, psi).equivalent;
  EXPECT_EQ(slocc_equivalent(psi, phi).equivalent, v);
  auto dressed = apply(random_local_sl(rng), phi);
  EXPECT_TRUE(slocc_equivalent(phi, dressed).equivalent);
  EXPECT_EQ(slocc_equivalent(dressed, psi).equivalent, v);
}

TEST(Classify, FamilyThreeVerdictMatchesGroupOrbit) {
  // (a',b') in the D4 orbit of (a,b): all sign changes and the swap.
  Rng rng(63);
  for (int t = 0; t < 3; ++t) {
    G a(random_rational(rng)), b(random_rational(rng));
    std::vector<Params> orbit;
    for (G sa : {G(1), G(-1)})
      for (G sb : {G(1), G(-1)}) {
        orbit.push_back({sa * a, sb * b});
        orbit.push_back({sb * b, sa * a});
      }
    // A rotation by a Pythagorean angle keeps a^2 + b^2, hence f2, but in
    // general leaves the orbit.
    Params same_f2{G(make_rational(3, 5)) * a + G(make_rational(4, 5)) * b,
                   G(make_rational(4, 5)) * a - G(make_rational(3, 5)) * b};
    for (const auto& q : orbit) EXPECT_TRUE(slocc_equivalent(rep(3, {a, b}), rep(3, q)).equivalent);
    bool in_orbit = false;
    for (const auto& q : orbit) in_orbit |= (q == same_f2);
    auto r = slocc_equivalent(rep(3, {a, b}), rep(3, same_f2));
    EXPECT_EQ(r.equivalent, in_orbit);
  }
}

TEST(Classify, ZeroState) {
  try {
    slocc_equivalent(QubitState<G>(), rep(9, {G(1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroState);
  }
}

}  // namespace
}  // namespace sov
