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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "sov4/canonical.hpp"

namespace sov {

using Rng = std::mt19937_64;

/// Random rationals p/q with |p| <= bound and 1 <= q <= bound.
inline Rational random_rational(Rng& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int bound = 9) {
  for (;;) {
    Rational r = random_rational(rng, bound);
    if (r != 0) return r;
  }
}

inline GaussianRational random_gaussian(Rng& rng, int bound = 9) {
  Rational re = random_rational(rng, bound);
  return {re, random_rational(rng, bound)};
}

inline QubitState<GaussianRational> random_qubit_state(Rng& rng, int bound = 9) {
  QubitState<GaussianRational> s;
  for (auto& a : s.amp) a = random_gaussian(rng, bound);
  return s;
}

inline std::array<int, 4> random_permutation4(Rng& rng) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Exact SL2(Q(i)) element as a product of elementary shears.
inline Matrix<GaussianRational> random_sl2(Rng& rng, int bound = 3) {
  using G = GaussianRational;
  Matrix<G> m = Matrix<G>::identity(2);
  for (int k = 0; k < 3; ++k) {
    G t = random_gaussian(rng, bound);
    m = m * mat2(G(1), t, G(0), G(1));
    G u = random_gaussian(rng, bound);
    m = m * mat2(G(1), G(0), u, G(1));
  }
  return m;
}

inline LocalOperator<GaussianRational> random_local_sl(Rng& rng, bool permute = true) {
  auto l = LocalOperator<GaussianRational>::tensor(random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng));
  if (permute) l.perm = random_permutation4(rng);
  return l;
}

// ------------------------------------------------------------ float side

inline ApproxScalar complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double re = n(rng);
  return {re, n(rng)};
}

/// Haar-distributed U(n): QR of a complex Ginibre matrix (modified
/// Gram-Schmidt on columns), with R's diagonal phases absorbed.
inline Matrix<ApproxScalar> haar_unitary(std::size_t n, Rng& rng) {
  Matrix<ApproxScalar> z(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) z(r, c) = complex_gaussian(rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      ApproxScalar dot = 0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(z(r, p)) * z(r, c);
      for (std::size_t r = 0; r < n; ++r) z(r, c) -= dot * z(r, p);
    }
    double nrm = 0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(z(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < n; ++r) z(r, c) /= nrm;
  }
  return z;
}

inline ApproxScalar determinant_approx(Matrix<ApproxScalar> m) {
  const std::size_t n = m.rows();
  ApproxScalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (std::abs(m(piv, c)) == 0.0) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      ApproxScalar f = m(r, c) / m(c, c);
      if (f == ApproxScalar(0)) continue;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Haar SU(n): Haar U(n) divided by an n-th root of its determinant.
inline Matrix<ApproxScalar> haar_special_unitary(std::size_t n, Rng& rng) {
  Matrix<ApproxScalar> u = haar_unitary(n, rng);
  ApproxScalar root = std::pow(determinant_approx(u), 1.0 / static_cast<double>(n));
  return u * (1.0 / root);
}

inline LocalOperator<ApproxScalar> random_local_su(Rng& rng, bool permute = true) {
  auto l = LocalOperator<ApproxScalar>::tensor(haar_special_unitary(2, rng), haar_special_unitary(2, rng),
                                               haar_special_unitary(2, rng), haar_special_unitary(2, rng));
  if (permute) l.perm = random_permutation4(rng);
  return l;
}

}  // namespace sov
