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
using E = E7Element<G>;

E random_element(Rng& rng, bool even, bool odd) {
  Matrix<G> x(8, 8);
  MV psi(4);
  if (even) {
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (rng() % 3 == 0) x(r, c) = random_gaussian(rng, 3);
    x = traceless(x);
  }
  if (odd)
    for (std::size_t k = 0; k < psi.size(); ++k)
      if (rng() % 3 == 0) psi[k] = random_gaussian(rng, 3);
  return E(x, psi);
}

Matrix<G> h1() {
  Matrix<G> h(8, 8);
  for (int k = 0; k < 8; ++k) h(k, k) = G(make_rational(k < 4 ? 1 : -1, 2));
  return h;
}

TEST(E7, BracketExamples) {
  EXPECT_EQ(bracket(E::from_even(h1()), E::from_odd(MV::unit({1, 2, 3, 4}))), E::from_odd(MV::unit({1, 2, 3, 4}, G(2))));
  EXPECT_EQ(bracket(E::from_odd(MV::unit({1, 2, 3, 4})), E::from_odd(MV::unit({5, 6, 7, 8}))), E::from_even(h1()));
  auto p = cartan_basis<G>();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) EXPECT_TRUE(odd_bracket(p[i], p[j]).is_zero()) << i << "," << j;
}

TEST(E7, Antisymmetry) {
  Rng rng(20);
  for (int t = 0; t < 10; ++t) {
    E a = random_element(rng, true, true), b = random_element(rng, true, true);
    EXPECT_EQ(bracket(a, b), -bracket(b, a));
  }
}

TEST(E7, JacobiAcrossGradedCombinations) {
  Rng rng(21);
  for (int t = 0; t < 24; ++t) {
    E a = random_element(rng, t & 1, true), b = random_element(rng, t & 2, !(t & 1)),
      c = random_element(rng, true, t & 4);
    E j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_TRUE(j.is_zero()) << "triple " << t;
  }
}

TEST(E7, PairingTraceIdentity) {
  Rng rng(22);
  G ratio(0);
  for (int t = 0; t < 6; ++t) {
    MV phi = random_element(rng, false, true).odd, psi = random_element(rng, false, true).odd;
    Matrix<G> s = pairing_endomorphism(phi, psi) + pairing_endomorphism(psi, phi);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (r != c) EXPECT_TRUE(s(r, c).is_zero());
    for (int r = 1; r < 8; ++r) EXPECT_EQ(s(r, r), s(0, 0));
    G vp = vol_pairing(phi, psi);
    ASSERT_FALSE(vp.is_zero());
    G q = s.trace() * vp.inverse();
    if (t == 0) ratio = q;
    EXPECT_EQ(q, ratio);
  }
}

TEST(E7, ThetaAndSigma) {
  Rng rng(23);
  E a = random_element(rng, true, true);
  EXPECT_EQ(theta(E::from_even(a.even)), E::from_even(a.even));
  EXPECT_EQ(theta(E::from_odd(a.odd)), E::from_odd(-a.odd));
  EXPECT_EQ(theta(theta(a)), a);
  EXPECT_EQ(sigma(sigma(a)), a);
  EXPECT_EQ(sigma(MV::unit({1, 2, 3, 4})), MV::unit({5, 6, 7, 8}));
  Matrix<G> h(8, 8);
  h(0, 0) = G(2);
  h(7, 7) = G(-2);
  EXPECT_EQ(sigma(E::from_even(h)), E::from_even(-h));
  EXPECT_EQ(sigma(theta(a)), theta(sigma(a)));
  for (int t = 0; t < 8; ++t) {
    E x = random_element(rng, true, true), y = random_element(rng, true, true);
    EXPECT_EQ(theta(bracket(x, y)), bracket(theta(x), theta(y)));
    EXPECT_EQ(sigma(bracket(x, y)), bracket(sigma(x), sigma(y)));
  }
}

TEST(E7, AdMatrixMatchesBracket) {
  EXPECT_TRUE(ad_matrix(E(Matrix<G>(8, 8), MV(4))).is_zero());
  Rng rng(24);
  E a = random_element(rng, true, true);
  Matrix<G> ad = ad_matrix(a);
  for (int t = 0; t < 4; ++t) {
    E b = random_element(rng, true, true);
    EXPECT_EQ(ad * coords(b), coords(bracket(a, b)));
  }
  MV psi = random_element(rng, false, true).odd;
  EXPECT_EQ(ad_matrix(psi), ad_matrix(E::from_odd(psi)));
  auto e = MV::unit({1, 2, 3, 4});
  EXPECT_EQ(ad_matrix(e) * coords(E::from_odd(MV::unit({5, 6, 7, 8}))), coords(E::from_even(h1())));
  EXPECT_EQ(rank(ad_matrix(e)), 34u);
}

TEST(E7, CoordinatesRoundTrip) {
  Rng rng(25);
  E a = random_element(rng, true, true);
  EXPECT_EQ(from_coords<G>(coords(a)), a);
  EXPECT_EQ(coords(a).size(), kE7Dim);
}

TEST(E7, TableOneTriplesExact) {
  for (int label : nilpotent_labels()) {
    auto t = nilpotent_triple(label);
    using X = E7Element<ExactScalar>;
    X h = X::from_even(t.h), e = X::from_odd(t.e), f = X::from_odd(t.f);
    EXPECT_EQ(t.f, sigma(t.e));
    EXPECT_EQ(bracket(h, e), ExactScalar(2) * e) << label;
    EXPECT_EQ(bracket(h, f), ExactScalar(-2) * f) << label;
    EXPECT_EQ(bracket(e, f), h) << label;
  }
}

TEST(E7, InvariantFormIsInvariant) {
  Rng rng(26);
  for (int t = 0; t < 4; ++t) {
    E a = random_element(rng, true, true), b = random_element(rng, true, true), c = random_element(rng, true, true);
    EXPECT_EQ(invariant_form(bracket(a, b), c), invariant_form(a, bracket(b, c)));
    EXPECT_EQ(invariant_form(a, b), invariant_form(b, a));
  }
}

TEST(E7, CharacteristicPolynomialOfAd) {
  Rng rng(27);
  MV psi = random_element(rng, false, true).odd;
  auto cp = ad_charpoly(psi);
  ASSERT_EQ(cp.size(), kE7Dim + 1);
  EXPECT_EQ(cp.back(), G(1));
  // ad(psi) anticommutes with theta, so only odd powers of x survive.
  for (std::size_t k = 0; k < cp.size(); ++k)
    if (k % 2 == 0) EXPECT_TRUE(cp[k].is_zero()) << k;
  // The nilpotent e_1234 has characteristic polynomial x^133.
  auto cn = ad_charpoly(MV::unit({1, 2, 3, 4}));
  for (std::size_t k = 0; k + 1 < cn.size(); ++k) EXPECT_TRUE(cn[k].is_zero());
}

}  // namespace
}  // namespace sov
