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

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "sov4/errors.hpp"

namespace sov {

using Rational = mpq_class;
using ApproxScalar = std::complex<double>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize.
inline Rational make_rational(long n, long d = 1) {
  if (d == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Element of Q(i). Both parts are kept canonical by GMP, so equality is
/// structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(runtime/explicit)
  GaussianRational(int v) : re_(v) {}   // NOLINT(runtime/explicit)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational inverse() const {
    if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in Q(i)");
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real_fast() && b.is_real_fast()) return GaussianRational(Rational(a.re_ * b.re_));
    Rational re = a.re_ * b.re_ - a.im_ * b.im_;
    Rational im = a.re_ * b.im_ + a.im_ * b.re_;
    return {std::move(re), std::move(im)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  ApproxScalar to_approx() const { return {re_.get_d(), im_.get_d()}; }

 private:
  bool is_real_fast() const { return sgn(im_) == 0; }

  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline GaussianRational conjugate(const GaussianRational& x) { return x.conj(); }
inline ApproxScalar to_approx(const GaussianRational& x) { return x.to_approx(); }

/// Element of the field Q(i, sqrt2, sqrt3, sqrt5).
///
/// Stored as eight Gaussian-rational coordinates against the radical basis
/// sqrt(r), r a square-free product of {2,3,5}. Internally the basis element
/// sqrt(r) is addressed by a 3-bit mask (bit0 = 2, bit1 = 3, bit2 = 5), so a
/// product of two basis elements is sqrt(m1 & m2)^2 * sqrt(m1 ^ m2).
class ExactScalar {
 public:
  static constexpr int kBasisSize = 8;

  ExactScalar() = default;
  ExactScalar(long v) { c_[0] = GaussianRational(v); }  // NOLINT
  ExactScalar(int v) { c_[0] = GaussianRational(v); }   // NOLINT
  ExactScalar(const Rational& v) { c_[0] = GaussianRational(v); }  // NOLINT
  ExactScalar(const GaussianRational& v) { c_[0] = v; }            // NOLINT

  /// Positive square root of m, m in {2,3,5,6,10,15,30}.
  static ExactScalar radical(int m) {
    int mask = mask_of_radicand(m);
    if (mask <= 0) {
      throw Error(ErrorCode::kUnsupportedRadical,
                  "sqrt(" + std::to_string(m) + ") is not in Q(i,sqrt2,sqrt3,sqrt5)");
    }
    ExactScalar r;
    r.c_[mask] = GaussianRational(1);
    return r;
  }
  static ExactScalar imaginary_unit() { return ExactScalar(GaussianRational::i()); }

  /// Radicand of basis mask: 1, 2, 3, 6, 5, 10, 15, 30 for masks 0..7.
  static constexpr int radicand(int mask) {
    return (mask & 1 ? 2 : 1) * (mask & 2 ? 3 : 1) * (mask & 4 ? 5 : 1);
  }
  /// Inverse of radicand(); -1 for values outside the basis.
  static constexpr int mask_of_radicand(int m) {
    for (int mask = 0; mask < kBasisSize; ++mask) {
      if (radicand(mask) == m) return mask;
    }
    return -1;
  }

  const GaussianRational& component(int mask) const { return c_[mask]; }
  GaussianRational& component(int mask) { return c_[mask]; }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  /// True when every radical coordinate other than 1 vanishes.
  bool is_gaussian() const {
    for (int m = 1; m < kBasisSize; ++m) {
      if (!c_[m].is_zero()) return false;
    }
    return true;
  }
  GaussianRational to_gaussian() const {
    if (!is_gaussian()) {
      throw Error(ErrorCode::kFieldRestriction, "value carries radicals outside Q(i)");
    }
    return c_[0];
  }

  ExactScalar conj() const {
    ExactScalar r;
    for (int m = 0; m < kBasisSize; ++m) r.c_[m] = c_[m].conj();
    return r;
  }

  ExactScalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of 0");
    // Multiply by the Galois conjugate that flips sqrt(p); the product lies
    // in the subfield without sqrt(p). Peel p = 5, 3, 2 in turn.
    ExactScalar num(1);
    ExactScalar x = *this;
    for (int bit : {4, 2, 1}) {
      ExactScalar flipped = x.flip(bit);
      num = num * flipped;
      x = x * flipped;
    }
    return num * ExactScalar(x.c_[0].inverse());
  }

  ExactScalar operator-() const {
    ExactScalar r;
    for (int m = 0; m < kBasisSize; ++m) r.c_[m] = -c_[m];
    return r;
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    for (int m = 0; m < kBasisSize; ++m) {
      if (!o.c_[m].is_zero()) c_[m] += o.c_[m];
    }
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    for (int m = 0; m < kBasisSize; ++m) {
      if (!o.c_[m].is_zero()) c_[m] -= o.c_[m];
    }
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    *this = *this * o;
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) {
    a += b;
    return a;
  }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) {
    a -= b;
    return a;
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r;
    for (int m1 = 0; m1 < kBasisSize; ++m1) {
      if (a.c_[m1].is_zero()) continue;
      for (int m2 = 0; m2 < kBasisSize; ++m2) {
        if (b.c_[m2].is_zero()) continue;
        GaussianRational term = a.c_[m1] * b.c_[m2];
        int shared = m1 & m2;
        if (shared != 0) term *= GaussianRational(radicand(shared));
        r.c_[m1 ^ m2] += term;
      }
    }
    return r;
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.c_ == b.c_;
  }

  ApproxScalar to_approx() const {
    ApproxScalar acc{0.0, 0.0};
    for (int m = 0; m < kBasisSize; ++m) {
      if (c_[m].is_zero()) continue;
      double root = std::sqrt(static_cast<double>(radicand(m)));
      acc += c_[m].to_approx() * root;
    }
    return acc;
  }

 private:
  // Galois automorphism negating every coordinate whose mask contains bit.
  ExactScalar flip(int bit) const {
    ExactScalar r = *this;
    for (int m = 0; m < kBasisSize; ++m) {
      if (m & bit) r.c_[m] = -r.c_[m];
    }
    return r;
  }

  std::array<GaussianRational, kBasisSize> c_{};
};

inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline ExactScalar conjugate(const ExactScalar& x) { return x.conj(); }
inline ApproxScalar to_approx(const ExactScalar& x) { return x.to_approx(); }

inline bool is_zero(const ApproxScalar& x) { return x.real() == 0.0 && x.imag() == 0.0; }
inline ApproxScalar conjugate(const ApproxScalar& x) { return std::conj(x); }
inline ApproxScalar to_approx(const ApproxScalar& x) { return x; }

/// The scalar types every algebra template accepts.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { conjugate(a) } -> std::convertible_to<T>;
  T(1);
};

/// Exact scalars admit division and structural equality.
template <class T>
inline constexpr bool is_exact_v =
    std::is_same_v<T, GaussianRational> || std::is_same_v<T, ExactScalar>;

inline ExactScalar to_exact(const GaussianRational& x) { return ExactScalar(x); }
inline ExactScalar to_exact(const ExactScalar& x) { return x; }

}  // namespace sov
