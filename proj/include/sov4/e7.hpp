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

#include <cstdint>
#include <vector>

#include "sov4/exterior.hpp"
#include "sov4/linalg.hpp"

namespace sov {

/// e7 = sl8 + wedge^4 C^8. `even` is a traceless 8x8 matrix, `odd` a grade-4
/// multivector.
template <class T>
struct E7Element {
  Matrix<T> even{8, 8};
  MultiVector<T> odd{4};

  E7Element() = default;
  E7Element(Matrix<T> x, MultiVector<T> psi) : even(std::move(x)), odd(std::move(psi)) {
    if (even.rows() != 8 || even.cols() != 8) throw Error(ErrorCode::kInvalidArgument, "even part must be 8x8");
    if (odd.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "odd part must have grade 4");
  }
  static E7Element from_even(Matrix<T> x) { return E7Element(std::move(x), MultiVector<T>(4)); }
  static E7Element from_odd(MultiVector<T> psi) { return E7Element(Matrix<T>(8, 8), std::move(psi)); }

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }

  E7Element& operator+=(const E7Element& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  E7Element& operator-=(const E7Element& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
  }
  friend E7Element operator+(E7Element a, const E7Element& b) { return a += b; }
  friend E7Element operator-(E7Element a, const E7Element& b) { return a -= b; }
  friend E7Element operator*(const T& s, const E7Element& a) { return E7Element(a.even * s, a.odd * s); }
  E7Element operator-() const { return E7Element(-even, -odd); }
  friend bool operator==(const E7Element& a, const E7Element& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

inline constexpr std::size_t kSl8Dim = 63;
inline constexpr std::size_t kOddDim = 70;
inline constexpr std::size_t kE7Dim = kSl8Dim + kOddDim;

template <class T>
Matrix<T> traceless(Matrix<T> m) {
  T t = m.trace() * (T(1) / T(8));
  for (int i = 0; i < 8; ++i) m(i, i) -= t;
  return m;
}

/// L(phi, psi)_{rc} = vol coefficient of phi ^ (e_r into psi) ^ e_c.
template <class T>
Matrix<T> pairing_endomorphism(const MultiVector<T>& phi, const MultiVector<T>& psi) {
  Matrix<T> l(8, 8);
  for (std::size_t a = 0; a < phi.size(); ++a) {
    if (is_zero(phi[a])) continue;
    const std::uint8_t s = basis::mask(4, a);
    for (std::size_t b = 0; b < psi.size(); ++b) {
      if (is_zero(psi[b])) continue;
      const std::uint8_t t = basis::mask(4, b);
      const std::uint8_t common = s & t;
      // U = T \ {r} must miss S, so T meets S in at most r.
      if (std::popcount(static_cast<unsigned>(common)) > 1) continue;
      T prod = phi[a] * psi[b];
      for (int r = 0; r < 8; ++r) {
        if (!(t & (1u << r))) continue;
        if (common && common != (1u << r)) continue;
        const std::uint8_t u = t & static_cast<std::uint8_t>(~(1u << r));
        const std::uint8_t su = s | u;
        const int c = std::countr_zero(static_cast<unsigned>(static_cast<std::uint8_t>(~su)));
        const int sg = basis::wedge_sign(static_cast<std::uint8_t>(1u << r), u) * basis::wedge_sign(s, u) *
                       basis::wedge_sign(su, static_cast<std::uint8_t>(1u << c));
        if (sg > 0) l(r, c) += prod;
        else l(r, c) -= prod;
      }
    }
  }
  return l;
}

/// The odd-odd bracket, normalised so that [e1234, e5678] = diag(1,1,1,1,-1,-1,-1,-1)/2.
template <class T>
Matrix<T> odd_bracket(const MultiVector<T>& phi, const MultiVector<T>& psi) {
  return traceless(pairing_endomorphism(phi, psi));
}

template <class T>
E7Element<T> bracket(const E7Element<T>& a, const E7Element<T>& b) {
  Matrix<T> even = commutator(a.even, b.even) + odd_bracket(a.odd, b.odd);
  MultiVector<T> odd = derivation_action(a.even, b.odd) - derivation_action(b.even, a.odd);
  return E7Element<T>(std::move(even), std::move(odd));
}

template <class T>
E7Element<T> theta(const E7Element<T>& a) {
  return E7Element<T>(a.even, -a.odd);
}

/// Conjugation by the index-reversal permutation i -> 9-i. On the odd part
/// this is e_{ijkl} -> e_{9-l,9-k,9-j,9-i}; on diagonal matrices of the
/// nilpotent triples it gives H -> -H.
template <class T>
E7Element<T> sigma(const E7Element<T>& a) {
  Matrix<T> x(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) x(i, j) = a.even(7 - i, 7 - j);
  MultiVector<T> psi(4);
  for (std::size_t r = 0; r < psi.size(); ++r) {
    const std::uint8_t m = basis::mask(4, r);
    std::uint8_t rev = 0;
    for (int i = 0; i < 8; ++i)
      if (m & (1u << i)) rev |= static_cast<std::uint8_t>(1u << (7 - i));
    psi.at_mask(rev) = a.odd[r];
  }
  return E7Element<T>(std::move(x), std::move(psi));
}

template <class T>
MultiVector<T> sigma(const MultiVector<T>& psi) {
  return sigma(E7Element<T>::from_odd(psi)).odd;
}

/// Coordinates: 63 traceless matrix units in row-major order (off-diagonal
/// E_rc, diagonal E_ii - E_88 for i < 8), then the 70 grade-4 ranks.
template <class T>
std::vector<T> coords(const E7Element<T>& a) {
  std::vector<T> v;
  v.reserve(kE7Dim);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (r == 7 && c == 7) continue;
      v.push_back(a.even(r, c));
    }
  for (const auto& x : a.odd.coeffs()) v.push_back(x);
  return v;
}

template <class T>
E7Element<T> from_coords(const std::vector<T>& v) {
  if (v.size() != kE7Dim) throw Error(ErrorCode::kInvalidArgument, "expected 133 coordinates");
  Matrix<T> x(8, 8);
  std::size_t k = 0;
  T diag(0);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (r == 7 && c == 7) continue;
      x(r, c) = v[k++];
      if (r == c) diag += x(r, c);
    }
  x(7, 7) = -diag;
  MultiVector<T> psi(4, std::vector<T>(v.begin() + kSl8Dim, v.end()));
  return E7Element<T>(std::move(x), std::move(psi));
}

template <class T>
E7Element<T> e7_basis(std::size_t j) {
  std::vector<T> v(kE7Dim, T(0));
  v[j] = T(1);
  return from_coords(v);
}

/// Matrix of ad(a) in the coordinate basis: column j holds coords([a, b_j]).
template <class T>
Matrix<T> ad_matrix(const E7Element<T>& a) {
  Matrix<T> m(kE7Dim, kE7Dim);
  for (std::size_t j = 0; j < kE7Dim; ++j) {
    std::vector<T> col = coords(bracket(a, e7_basis<T>(j)));
    for (std::size_t i = 0; i < kE7Dim; ++i) m(i, j) = col[i];
  }
  return m;
}

namespace detail {

template <class T>
Matrix<T> sub_block(const Matrix<T>& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  Matrix<T> out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

}  // namespace detail

template <class T>
Matrix<T> ad_matrix(const MultiVector<T>& psi) {
  // Only the odd-odd and odd-even blocks are nonzero; build them directly.
  Matrix<T> m(kE7Dim, kE7Dim);
  for (std::size_t j = 0; j < kSl8Dim; ++j) {
    // [psi, X] = -X.psi lands in the odd block.
    MultiVector<T> d = derivation_action(e7_basis<T>(j).even, psi);
    for (std::size_t i = 0; i < kOddDim; ++i)
      if (!is_zero(d[i])) m(kSl8Dim + i, j) = -d[i];
  }
  for (std::size_t j = 0; j < kOddDim; ++j) {
    Matrix<T> l = odd_bracket(psi, MultiVector<T>::from_mask(basis::mask(4, j)));
    std::vector<T> col = coords(E7Element<T>::from_even(std::move(l)));
    for (std::size_t i = 0; i < kSl8Dim; ++i) m(i, kSl8Dim + j) = col[i];
  }
  return m;
}

/// Invariant symmetric form tr(XY) + vol(phi ^ psi).
template <class T>
T invariant_form(const E7Element<T>& a, const E7Element<T>& b) {
  T acc(0);
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      if (is_zero(a.even(i, k)) || is_zero(b.even(k, i))) continue;
      acc += a.even(i, k) * b.even(k, i);
    }
  return acc + vol_pairing(a.odd, b.odd);
}

/// Characteristic polynomial of ad(psi) on e7, ascending and monic. With
/// ad = [[0, B], [C, 0]], det(x - ad) = x^-7 det(x^2 - CB), and CB is 70x70.
template <class T>
std::vector<T> ad_charpoly(const MultiVector<T>& psi) {
  const Matrix<T> ad = ad_matrix(psi);
  const Matrix<T> cb = detail::sub_block(ad, kSl8Dim, 0, kOddDim, kSl8Dim) * detail::sub_block(ad, 0, kSl8Dim, kSl8Dim, kOddDim);
  const std::vector<T> half = charpoly_berkowitz(cb);
  std::vector<T> out(kE7Dim + 1, T(0));
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (2 * k < kOddDim - kSl8Dim) {
      if (!is_zero(half[k])) throw Error(ErrorCode::kInternal, "rank of CB exceeds 63");
      continue;
    }
    out[2 * k - (kOddDim - kSl8Dim)] = half[k];
  }
  return out;
}

}  // namespace sov
