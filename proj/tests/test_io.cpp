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

#include <sstream>

#include "support.hpp"

namespace sov {
namespace {

using S = ExactScalar;

TEST(Io, ParsesSpecExample) {
  S x = parse_exact("(1/2 + 3/4*i)*r6 - 2");
  S want = (S(make_rational(1, 2)) + S(make_rational(3, 4)) * S::imaginary_unit()) * S::radical(6) - S(2);
  EXPECT_EQ(x, want);
  EXPECT_EQ(to_string(x), "-2 + 1/2*r6 + 3/4*i*r6");
  EXPECT_EQ(to_string(S(0)), "0");
}

TEST(Io, ParseErrors) {
  for (const char* bad : {"", "1 +", "r7", "(1", "2 ** 3", "x"}) {
    try {
      parse_exact(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParse || e.code() == ErrorCode::kUnsupportedRadical) << bad;
    }
  }
  EXPECT_THROW(parse_scalar<GaussianRational>("r2"), Error);
}

TEST(Io, PrintParseRoundTrip) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    S x;
    for (int m = 0; m < S::kBasisSize; ++m)
      if (rng() % 2) x.component(m) = random_gaussian(rng);
    EXPECT_EQ(parse_exact(to_string(x)), x) << to_string(x);
  }
}

TEST(Io, FermionicFileRoundTrip) {
  Rng rng(13);
  MultiVector<S> v(4);
  for (std::size_t k = 0; k < v.size(); k += 3) v[k] = S(random_gaussian(rng)) * S::radical(5);
  std::stringstream ss;
  write_fermionic(ss, v);
  EXPECT_EQ(read_fermionic<S>(ss), v);
}

TEST(Io, FermionicFileSemantics) {
  std::istringstream in("# comment\ngrade=4\n\n2 1 3 4 : 3\n5 6 7 8 : i\n");
  auto v = read_fermionic<GaussianRational>(in);
  EXPECT_EQ(v, MultiVector<GaussianRational>::unit({1, 2, 3, 4}, GaussianRational(-3)) +
                   MultiVector<GaussianRational>::unit({5, 6, 7, 8}, GaussianRational::i()));
  std::istringstream bad("grade=4\n1 2 3 : 1\n");
  try {
    read_fermionic<GaussianRational>(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Io, QubitFileRoundTrip) {
  Rng rng(14);
  auto s = random_qubit_state(rng);
  std::stringstream ss;
  write_qubit_amplitudes(ss, s.amp);
  EXPECT_EQ(read_qubit_amplitudes<GaussianRational>(ss), s.amp);
  std::istringstream dup("0000 : 1\n0000 : 2\n");
  EXPECT_THROW(read_qubit_amplitudes<GaussianRational>(dup), Error);
}

TEST(Io, UnitaryFileRoundTrip) {
  Rng rng(15);
  auto u = haar_unitary(8, rng);
  std::stringstream ss;
  write_unitary(ss, u);
  auto w = read_unitary(ss);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) EXPECT_EQ(w(r, c), u(r, c));
  std::istringstream short_rows("1,0 0,0\n");
  EXPECT_THROW(read_unitary(short_rows), Error);
}

}  // namespace
}  // namespace sov
