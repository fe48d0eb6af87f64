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
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sov4/matrix.hpp"

namespace sov {

// Subsets of {0..7} are bitmasks. Public APIs that take index lists use the
// 1-based labels 1..8 of the basis vectors of V.
namespace basis {

inline constexpr int kDim = 8;

struct Tables {
  std::array<std::vector<std::uint8_t>, kDim + 1> masks;  // by grade, lex order
  std::array<int, 256> rank{};
};

inline const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    // Lex order of sorted k-subsets: generate recursively.
    for (int k = 0; k <= kDim; ++k) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        std::uint8_t m = 0;
        for (int i : idx) m |= static_cast<std::uint8_t>(1u << i);
        t.rank[m] = static_cast<int>(t.masks[k].size());
        t.masks[k].push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == kDim - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return t;
  }();
  return t;
}

inline std::size_t dim(int grade) { return tables().masks[grade].size(); }
inline std::uint8_t mask(int grade, std::size_t rank) { return tables().masks[grade][rank]; }
inline std::size_t rank_of(std::uint8_t m) { return static_cast<std::size_t>(tables().rank[m]); }
inline int grade_of(std::uint8_t m) { return std::popcount(static_cast<unsigned>(m)); }

/// Sign of e_S ^ e_T relative to e_{S u T}; 0 if they overlap.
inline int wedge_sign(std::uint8_t s, std::uint8_t t) {
  if (s & t) return 0;
  int inv = 0;
  for (unsigned tt = t; tt; tt &= tt - 1) {
    int b = std::countr_zero(tt);
    inv += std::popcount(static_cast<unsigned>(s) >> (b + 1));
  }
  return (inv & 1) ? -1 : 1;
}

/// 0-based sorted indices of a mask.
inline std::vector<int> indices(std::uint8_t m) {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

/// Parity of an index sequence (0-based, distinct).
inline int permutation_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

inline std::uint8_t full_mask() { return 0xFF; }

}  // namespace basis

/// Homogeneous element of the exterior algebra of C^8, dense over ranked
/// k-subsets.
template <class T>
class MultiVector {
 public:
  MultiVector() : MultiVector(0) {}
  explicit MultiVector(int grade) : grade_(grade) {
    if (grade < 0 || grade > basis::kDim) {
      throw Error(ErrorCode::kInvalidArgument, "grade out of range");
    }
    c_.assign(basis::dim(grade), T(0));
  }
  MultiVector(int grade, std::vector<T> coeffs) : grade_(grade), c_(std::move(coeffs)) {
    if (c_.size() != basis::dim(grade)) {
      throw Error(ErrorCode::kInvalidArgument, "coefficient count does not match grade");
    }
  }

  /// c * e_{i1 ... ik} with 1-based labels in any order; sorting is absorbed
  /// into the sign, a repeated label gives zero.
  static MultiVector unit(std::initializer_list<int> labels, const T& c = T(1)) {
    return unit(std::vector<int>(labels), c);
  }
  static MultiVector unit(const std::vector<int>& labels, const T& c = T(1)) {
    MultiVector v(static_cast<int>(labels.size()));
    std::vector<int> idx;
    std::uint8_t m = 0;
    for (int l : labels) {
      if (l < 1 || l > basis::kDim) throw Error(ErrorCode::kInvalidArgument, "basis label out of range");
      idx.push_back(l - 1);
      if (m & (1u << (l - 1))) return v;
      m |= static_cast<std::uint8_t>(1u << (l - 1));
    }
    T val = c;
    if (basis::permutation_sign(idx) < 0) val = -val;
    v.c_[basis::rank_of(m)] = val;
    return v;
  }
  static MultiVector from_mask(std::uint8_t m, const T& c = T(1)) {
    MultiVector v(basis::grade_of(m));
    v.c_[basis::rank_of(m)] = c;
    return v;
  }

  int grade() const { return grade_; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t r) const { return c_[r]; }
  T& operator[](std::size_t r) { return c_[r]; }
  const T& at_mask(std::uint8_t m) const { return c_[basis::rank_of(m)]; }
  T& at_mask(std::uint8_t m) { return c_[basis::rank_of(m)]; }
  const std::vector<T>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!sov::is_zero(x)) return false;
    return true;
  }

  MultiVector operator-() const {
    MultiVector r(grade_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  MultiVector& operator+=(const MultiVector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  MultiVector& operator-=(const MultiVector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  MultiVector& operator*=(const T& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const T& s) { return a *= s; }
  friend MultiVector operator*(const T& s, MultiVector a) { return a *= s; }
  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.grade_ == b.grade_ && a.c_ == b.c_;
  }

 private:
  void check(const MultiVector& o) const {
    if (o.grade_ != grade_) {
      throw Error(ErrorCode::kGradeMismatch, "cannot add grade " + std::to_string(o.grade_) +
                                                 " to grade " + std::to_string(grade_));
    }
  }

  int grade_;
  std::vector<T> c_;
};

template <class T>
MultiVector<T> wedge(const MultiVector<T>& u, const MultiVector<T>& v) {
  const int g = u.grade() + v.grade();
  if (g > basis::kDim) throw Error(ErrorCode::kGradeOverflow, "wedge exceeds grade 8");
  MultiVector<T> out(g);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (is_zero(u[a])) continue;
    const std::uint8_t s = basis::mask(u.grade(), a);
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (is_zero(v[b])) continue;
      const std::uint8_t t = basis::mask(v.grade(), b);
      int sg = basis::wedge_sign(s, t);
      if (sg == 0) continue;
      T term = u[a] * v[b];
      if (sg > 0) out.at_mask(s | t) += term;
      else out.at_mask(s | t) -= term;
    }
  }
  return out;
}

/// Bilinear contraction: e_S into e_T gives sign(S, T\S) e_{T\S} when S is
/// contained in T. The public interior() conjugates the first argument.
template <class T>
MultiVector<T> contract(const MultiVector<T>& a, const MultiVector<T>& psi) {
  if (a.grade() > psi.grade()) throw Error(ErrorCode::kGradeUnderflow, "interior by a higher grade");
  MultiVector<T> out(psi.grade() - a.grade());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (is_zero(a[x])) continue;
    const std::uint8_t s = basis::mask(a.grade(), x);
    for (std::size_t y = 0; y < psi.size(); ++y) {
      if (is_zero(psi[y])) continue;
      const std::uint8_t t = basis::mask(psi.grade(), y);
      if ((s & t) != s) continue;
      const std::uint8_t rest = t & static_cast<std::uint8_t>(~s);
      T term = a[x] * psi[y];
      if (basis::wedge_sign(s, rest) > 0) out.at_mask(rest) += term;
      else out.at_mask(rest) -= term;
    }
  }
  return out;
}

template <class T>
MultiVector<T> interior(const MultiVector<T>& a, const MultiVector<T>& psi) {
  MultiVector<T> ca(a.grade());
  for (std::size_t i = 0; i < a.size(); ++i) ca[i] = conjugate(a[i]);
  return contract(ca, psi);
}

/// Hermitian pairing, conjugate-linear in the first argument.
template <class T>
T inner(const MultiVector<T>& a, const MultiVector<T>& b) {
  if (a.grade() != b.grade()) throw Error(ErrorCode::kGradeMismatch, "inner product across grades");
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i]) || is_zero(b[i])) continue;
    acc += conjugate(a[i]) * b[i];
  }
  return acc;
}

/// y with x ^ e_S = y_S vol, returned as a grade 8-k vector.
template <class T>
MultiVector<T> vol_dual(const MultiVector<T>& x) {
  MultiVector<T> y(basis::kDim - x.grade());
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (is_zero(x[r])) continue;
    const std::uint8_t s = basis::mask(x.grade(), r);
    const std::uint8_t c = static_cast<std::uint8_t>(~s);
    if (basis::wedge_sign(s, c) > 0) y.at_mask(c) = x[r];
    else y.at_mask(c) = -x[r];
  }
  return y;
}

/// Coefficient of e_{12345678} in u ^ v (grades must sum to 8).
template <class T>
T vol_pairing(const MultiVector<T>& u, const MultiVector<T>& v) {
  if (u.grade() + v.grade() != basis::kDim) {
    throw Error(ErrorCode::kGradeMismatch, "volume pairing needs complementary grades");
  }
  T acc(0);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (is_zero(u[a])) continue;
    const std::uint8_t s = basis::mask(u.grade(), a);
    const std::uint8_t c = static_cast<std::uint8_t>(~s);
    const T& vc = v.at_mask(c);
    if (is_zero(vc)) continue;
    if (basis::wedge_sign(s, c) > 0) acc += u[a] * vc;
    else acc -= u[a] * vc;
  }
  return acc;
}

/// Matrix of the k-th exterior power of g in the ranked basis:
/// entry (S, T) is the minor det g[S, T]. Built grade by grade from
/// expansion along the largest column of T.
template <class T>
Matrix<T> compound_matrix(const Matrix<T>& g, int k) {
  if (g.rows() != 8 || g.cols() != 8) throw Error(ErrorCode::kInvalidArgument, "expected an 8x8 matrix");
  Matrix<T> prev(1, 1);
  prev(0, 0) = T(1);
  for (int j = 1; j <= k; ++j) {
    const std::size_t n = basis::dim(j);
    Matrix<T> cur(n, n);
    for (std::size_t ci = 0; ci < n; ++ci) {
      const std::uint8_t tm = basis::mask(j, ci);
      const int top = 31 - std::countl_zero(static_cast<unsigned>(tm));
      const std::uint8_t trest = tm & static_cast<std::uint8_t>(~(1u << top));
      const std::size_t tr = basis::rank_of(trest);
      for (std::size_t ri = 0; ri < n; ++ri) {
        const std::uint8_t sm = basis::mask(j, ri);
        T acc(0);
        // Column `top` sits last in T; row s sits at position p in S.
        int pos = 0;
        for (int s = 0; s < 8; ++s) {
          if (!(sm & (1u << s))) continue;
          const T& gst = g(s, top);
          if (!is_zero(gst)) {
            const std::uint8_t srest = sm & static_cast<std::uint8_t>(~(1u << s));
            const T& minor = prev(basis::rank_of(srest), tr);
            if (!is_zero(minor)) {
              // Laplace sign (-1)^{pos + (j-1)}.
              if (((pos + j - 1) & 1) == 0) acc += gst * minor;
              else acc -= gst * minor;
            }
          }
          ++pos;
        }
        cur(ri, ci) = acc;
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

template <class T>
MultiVector<T> compound(const Matrix<T>& g, const MultiVector<T>& psi) {
  Matrix<T> c = compound_matrix(g, psi.grade());
  return MultiVector<T>(psi.grade(), c * psi.coeffs());
}

/// Leibniz extension of X acting on V.
template <class T>
MultiVector<T> derivation_action(const Matrix<T>& x, const MultiVector<T>& psi) {
  MultiVector<T> out(psi.grade());
  for (std::size_t y = 0; y < psi.size(); ++y) {
    if (is_zero(psi[y])) continue;
    const std::uint8_t t = basis::mask(psi.grade(), y);
    for (int slot = 0; slot < 8; ++slot) {
      if (!(t & (1u << slot))) continue;
      const std::uint8_t rest = t & static_cast<std::uint8_t>(~(1u << slot));
      const int s0 = basis::wedge_sign(static_cast<std::uint8_t>(1u << slot), rest);
      for (int i = 0; i < 8; ++i) {
        const T& xi = x(i, slot);
        if (is_zero(xi)) continue;
        const int s1 = basis::wedge_sign(static_cast<std::uint8_t>(1u << i), rest);
        if (s1 == 0) continue;
        T term = xi * psi[y];
        const std::uint8_t dest = rest | static_cast<std::uint8_t>(1u << i);
        if (s0 * s1 > 0) out.at_mask(dest) += term;
        else out.at_mask(dest) -= term;
      }
    }
  }
  return out;
}

template <class U, class T, class F>
MultiVector<U> map_coeffs(const MultiVector<T>& v, F&& f) {
  MultiVector<U> out(v.grade());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f(v[i]);
  return out;
}

}  // namespace sov
