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

#include <cstdint>
#include <optional>
#include <vector>

#include "sov4/matrix.hpp"
#include "sov4/scalar.hpp"

// Word-size prime field arithmetic, Chinese remaindering and rational
// reconstruction. Nothing here is trusted on its own: every result that leaves
// this layer is re-checked exactly by the caller.
namespace sov::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 pow(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1;
  }
  return r;
}
inline u64 inv(u64 a, u64 p) {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 mod p");
  return pow(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

/// A prime p = 1 mod 4 together with a square root of -1.
struct Prime {
  u64 p;
  u64 iota;
};

/// The k-th prime below 2^62 congruent to 1 mod 4 (cached, deterministic).
inline const Prime& prime(std::size_t k) {
  static std::vector<Prime> cache;
  static u64 next = (u64{1} << 62) - 3;  // = 1 mod 4
  while (cache.size() <= k) {
    while (!is_prime(next)) next -= 4;
    u64 p = next;
    next -= 4;
    u64 iota = 0;
    for (u64 g = 2;; ++g) {
      // g is a non-residue iff g^((p-1)/2) = -1; then g^((p-1)/4)^2 = -1.
      if (pow(g, (p - 1) / 2, p) == p - 1) {
        iota = pow(g, (p - 1) / 4, p);
        break;
      }
    }
    cache.push_back({p, iota});
  }
  return cache[k];
}

inline u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

/// Image of a rational; nullopt when p divides the denominator.
inline std::optional<u64> reduce(const Rational& q, u64 p) {
  u64 d = reduce(q.get_den(), p);
  if (d == 0) return std::nullopt;
  return mul(reduce(q.get_num(), p), inv(d, p), p);
}

/// Image of a+bi under i -> iota.
inline std::optional<u64> reduce(const GaussianRational& z, const Prime& pr, bool conj) {
  auto a = reduce(z.re(), pr.p);
  auto b = reduce(z.im(), pr.p);
  if (!a || !b) return std::nullopt;
  u64 io = conj ? neg(pr.iota, pr.p) : pr.iota;
  return add(*a, mul(*b, io, pr.p), pr.p);
}

// ---------------------------------------------------------------- matrices

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline std::optional<Mat> reduce(const Matrix<GaussianRational>& m, const Prime& pr, bool conj) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      if (x.is_zero()) continue;
      auto v = reduce(x, pr, conj);
      if (!v) return std::nullopt;
      out(r, c) = *v;
    }
  return out;
}

inline std::vector<u64> apply(const Mat& m, const std::vector<u64>& v, u64 p) {
  std::vector<u64> out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    u128 acc = 0;
    const u64* row = &m.a[r * m.cols];
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (row[c] == 0 || v[c] == 0) continue;
      acc += static_cast<u128>(row[c]) * v[c];
      acc %= p;
    }
    out[r] = static_cast<u64>(acc);
  }
  return out;
}

struct Echelon {
  Mat rref;
  std::vector<std::size_t> pivots;
};

inline Echelon reduced_echelon(Mat m, u64 p) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(piv, c), m(row, c));
    u64 iv = inv(m(row, col), p);
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) = mul(m(row, c), iv, p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      u64 f = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c) {
        if (m(row, c)) m(r, c) = sub(m(r, c), mul(f, m(row, c), p), p);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

inline std::size_t rank(const Mat& m, u64 p) { return reduced_echelon(m, p).pivots.size(); }

inline u64 determinant(Mat m, u64 p) {
  const std::size_t n = m.rows;
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = neg(det, p);
    }
    det = mul(det, m(col, col), p);
    u64 iv = inv(m(col, col), p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      u64 f = mul(m(r, col), iv, p);
      for (std::size_t c = col; c < n; ++c)
        if (m(col, c)) m(r, c) = sub(m(r, c), mul(f, m(col, c), p), p);
    }
  }
  return det;
}

// ------------------------------------------------------------- polynomials
// Ascending coefficients, no trailing zeros (the zero polynomial is empty).

using Poly = std::vector<u64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly sub(const Poly& f, const Poly& g, u64 p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = sub(r[i], g[i], p);
  trim(r);
  return r;
}

inline Poly mul(const Poly& f, const Poly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  std::vector<u128> acc(f.size() + g.size() - 1, 0);
  Poly r(acc.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] += static_cast<u128>(f[i]) * g[j];
      // Keep the accumulator below 2^127.
      if (acc[i + j] >> 126) acc[i + j] %= p;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p);
  trim(r);
  return r;
}

/// f = q g + r.
inline void divmod(const Poly& f, const Poly& g, u64 p, Poly* q, Poly* r) {
  if (g.empty()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by 0");
  Poly rem = f;
  trim(rem);
  Poly quo(rem.size() >= g.size() ? rem.size() - g.size() + 1 : 0, 0);
  u64 lead_inv = inv(g.back(), p);
  while (rem.size() >= g.size()) {
    std::size_t shift = rem.size() - g.size();
    u64 c = mul(rem.back(), lead_inv, p);
    quo[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] = sub(rem[shift + i], mul(c, g[i], p), p);
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

inline Poly mod(const Poly& f, const Poly& g, u64 p) {
  Poly r;
  divmod(f, g, p, nullptr, &r);
  return r;
}

inline Poly monic(Poly f, u64 p) {
  if (f.empty()) return f;
  u64 iv = inv(f.back(), p);
  for (auto& c : f) c = mul(c, iv, p);
  return f;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

inline Poly derivative(const Poly& f, u64 p) {
  Poly d(f.size() > 1 ? f.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p, p);
  trim(d);
  return d;
}

/// Inverse of a modulo m; nullopt if they share a factor.
inline std::optional<Poly> inverse_mod(const Poly& a, const Poly& m, u64 p) {
  Poly r0 = m, r1 = mod(a, m, p);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, &q, &r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  u64 iv = inv(r0[0], p);
  for (auto& c : s0) c = mul(c, iv, p);
  return mod(s0, m, p);
}

/// g(x) modulo m, Horner.
inline Poly compose_mod(const Poly& g, const Poly& x, const Poly& m, u64 p) {
  Poly acc;
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = mod(mul(acc, x, p), m, p);
    if (g[i]) {
      if (acc.empty()) acc.push_back(0);
      acc[0] = add(acc[0], g[i], p);
      trim(acc);
    }
  }
  return acc;
}

/// Minimal polynomial of v relative to m, with the Krylov vectors v, mv, ...
struct Krylov {
  Poly minpoly;                         // monic
  std::vector<std::vector<u64>> powers;  // m^j v for j < deg
};

inline Krylov krylov(const Mat& m, const std::vector<u64>& v, u64 p) {
  const std::size_t n = v.size();
  Krylov out;
  // Incremental elimination: reduced rows plus the combination that made each.
  std::vector<std::vector<u64>> red;
  std::vector<std::size_t> piv;
  std::vector<Poly> combo;
  std::vector<u64> cur = v;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<u64> w = cur;
    Poly c(j + 1, 0);
    c[j] = 1;
    for (std::size_t k = 0; k < red.size(); ++k) {
      u64 f = w[piv[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (red[k][i]) w[i] = sub(w[i], mul(f, red[k][i], p), p);
      for (std::size_t i = 0; i < combo[k].size(); ++i) c[i] = sub(c[i], mul(f, combo[k][i], p), p);
    }
    std::size_t pv = 0;
    while (pv < n && w[pv] == 0) ++pv;
    if (pv == n) {
      trim(c);
      out.minpoly = monic(c, p);
      return out;
    }
    u64 iv = inv(w[pv], p);
    for (auto& x : w) x = mul(x, iv, p);
    for (auto& x : c) x = mul(x, iv, p);
    red.push_back(std::move(w));
    piv.push_back(pv);
    combo.push_back(std::move(c));
    out.powers.push_back(cur);
    cur = apply(m, cur, p);
  }
  throw Error(ErrorCode::kInternal, "Krylov sequence did not terminate");
}

// ------------------------------------------------- CRT and reconstruction

/// Running Chinese remainder state for a vector of residues.
struct Crt {
  mpz_class modulus = 1;
  std::vector<mpz_class> values;

  void add(const std::vector<u64>& residues, u64 p) {
    mpz_class P(static_cast<unsigned long>(p));
    if (values.empty()) {
      values.reserve(residues.size());
      for (u64 r : residues) values.emplace_back(static_cast<unsigned long>(r));
      modulus = P;
      return;
    }
    // x = v + modulus * t, t = (r - v) / modulus mod p.
    u64 minv = inv(reduce(modulus, p), p);
    for (std::size_t i = 0; i < values.size(); ++i) {
      u64 t = mul(sub(residues[i], reduce(values[i], p), p), minv, p);
      values[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= P;
  }
};

/// a/b = x mod m with |a|, b <= sqrt(m/2); nullopt if none exists.
inline std::optional<Rational> rational_reconstruct(const mpz_class& x, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace sov::modp
