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

#include <optional>
#include <vector>

#include "sov4/e7.hpp"
#include "sov4/linalg.hpp"
#include "sov4/modular.hpp"

namespace sov {

template <class T>
struct JordanSplit {
  MultiVector<T> semisimple{4};
  MultiVector<T> nilpotent{4};
  // Smallest k >= 1 with ad(nilpotent)^k = 0.
  int nilpotency_index = 1;
};

/// Drops to Q(i), or throws FieldRestriction when a radical is present.
inline MultiVector<GaussianRational> to_gaussian(const MultiVector<ExactScalar>& v) {
  MultiVector<GaussianRational> out(v.grade());
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!v[r].is_gaussian()) {
      throw Error(ErrorCode::kFieldRestriction, "coefficients must lie in Q(i) for this operation");
    }
    out[r] = v[r].component(0);
  }
  return out;
}
inline const MultiVector<GaussianRational>& to_gaussian(const MultiVector<GaussianRational>& v) { return v; }

inline MultiVector<ExactScalar> to_exact(const MultiVector<GaussianRational>& v) {
  return map_coeffs<ExactScalar>(v, [](const GaussianRational& x) { return ExactScalar(x); });
}

namespace detail {

using modp::u64;

// diag(1, 2, 4, ..., 64, -127): every 4-subset sum is nonzero, so [x, H]
// determines the odd element x.
inline const std::array<long, 8>& probe_diagonal() {
  static const std::array<long, 8> d = {1, 2, 4, 8, 16, 32, 64, -127};
  return d;
}

inline long probe_weight(std::uint8_t m) {
  long s = 0;
  for (int i = 0; i < 8; ++i)
    if (m & (1u << i)) s += probe_diagonal()[i];
  return s;
}

struct ModularImage {
  int degree;               // degree of the local minimal polynomial of H
  std::vector<u64> values;  // 70 coordinates of the semisimple part
};

// Semisimple part of psi modulo p under one embedding of i. nullopt for an
// unusable prime.
inline std::optional<ModularImage> semisimple_mod_p(const Matrix<GaussianRational>& ad, const modp::Prime& pr,
                                                    bool conj) {
  const u64 p = pr.p;
  auto m = modp::reduce(ad, pr, conj);
  if (!m) return std::nullopt;
  std::vector<u64> h(kE7Dim, 0);
  // Diagonal coordinates sit at row-major positions r*8+r for r < 7.
  for (int r = 0; r < 7; ++r) {
    long d = probe_diagonal()[r];
    h[r * 8 + r] = d >= 0 ? static_cast<u64>(d) : p - static_cast<u64>(-d);
  }
  modp::Krylov kr = modp::krylov(*m, h, p);
  const modp::Poly& mu = kr.minpoly;
  modp::Poly g;
  modp::divmod(mu, modp::gcd(mu, modp::derivative(mu, p), p), p, &g, nullptr);
  const modp::Poly dg = modp::derivative(g, p);
  // Newton iteration x <- x - g(x)/g'(x) modulo mu, starting at x = t.
  modp::Poly x = modp::mod(modp::Poly{0, 1}, mu, p);
  bool converged = false;
  for (int it = 0; it < 64; ++it) {
    modp::Poly gx = modp::compose_mod(g, x, mu, p);
    if (gx.empty()) {
      converged = true;
      break;
    }
    auto inv = modp::inverse_mod(modp::compose_mod(dg, x, mu, p), mu, p);
    if (!inv) return std::nullopt;
    x = modp::sub(x, modp::mod(modp::mul(gx, *inv, p), mu, p), p);
  }
  if (!converged) return std::nullopt;
  std::vector<u64> v(kE7Dim, 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < kE7Dim; ++i)
      v[i] = modp::add(v[i], modp::mul(x[j], kr.powers[j][i], p), p);
  }
  for (std::size_t i = 0; i < kSl8Dim; ++i)
    if (v[i] != 0) return std::nullopt;
  ModularImage out{modp::degree(mu), std::vector<u64>(kOddDim)};
  // v = [s, H] = -h_S s_S.
  for (std::size_t r = 0; r < kOddDim; ++r) {
    long w = probe_weight(basis::mask(4, r));
    u64 wp = w >= 0 ? static_cast<u64>(w) : p - static_cast<u64>(-w);
    out.values[r] = modp::mul(modp::neg(v[kSl8Dim + r], p), modp::inv(wp, p), p);
  }
  return out;
}

// Re-assembles Gaussian rationals from images under i -> +iota and -iota.
inline void split_embeddings(const std::vector<u64>& plus, const std::vector<u64>& minus, const modp::Prime& pr,
                             std::vector<u64>* re, std::vector<u64>* im) {
  const u64 p = pr.p;
  const u64 inv2 = modp::inv(2, p);
  const u64 inv2iota = modp::inv(modp::mul(2, pr.iota, p), p);
  re->resize(plus.size());
  im->resize(plus.size());
  for (std::size_t k = 0; k < plus.size(); ++k) {
    (*re)[k] = modp::mul(modp::add(plus[k], minus[k], p), inv2, p);
    (*im)[k] = modp::mul(modp::sub(plus[k], minus[k], p), inv2iota, p);
  }
}

inline std::optional<std::vector<GaussianRational>> reconstruct(const modp::Crt& re, const modp::Crt& im) {
  std::vector<GaussianRational> out;
  out.reserve(re.values.size());
  for (std::size_t k = 0; k < re.values.size(); ++k) {
    auto a = modp::rational_reconstruct(re.values[k], re.modulus);
    auto b = modp::rational_reconstruct(im.values[k], im.modulus);
    if (!a || !b) return std::nullopt;
    out.emplace_back(*a, *b);
  }
  return out;
}

/// Smallest k >= 1 with m^k = 0, or 0 if m is not nilpotent.
template <class T>
int nilpotency_index(const Matrix<T>& m) {
  if (m.is_zero()) return 1;
  Matrix<T> pw = m;
  for (int k = 2; k <= static_cast<int>(m.rows()) + 1; ++k) {
    pw = pw * m;
    if (pw.is_zero()) return k;
  }
  return 0;
}

/// Exact basis of ker(m) for a Q(i) matrix, reconstructed from residues and
/// verified. nullopt if the modular data never stabilises.
inline std::optional<std::vector<std::vector<GaussianRational>>> exact_kernel(const Matrix<GaussianRational>& m) {
  std::size_t best_rank = 0;
  std::vector<std::size_t> best_pivots;
  modp::Crt cre, cim;
  std::optional<std::vector<GaussianRational>> last;
  for (std::size_t k = 0; k < 48; ++k) {
    const modp::Prime& pr = modp::prime(k);
    std::vector<std::vector<u64>> imgs;
    std::vector<std::size_t> pivots;
    bool ok = true;
    for (bool conj : {false, true}) {
      auto mm = modp::reduce(m, pr, conj);
      if (!mm) {
        ok = false;
        break;
      }
      modp::Echelon e = modp::reduced_echelon(*mm, pr.p);
      if (!imgs.empty() && e.pivots != pivots) {
        ok = false;
        break;
      }
      pivots = e.pivots;
      // Kernel basis in the standard form, flattened.
      std::vector<u64> flat;
      std::vector<bool> is_pivot(m.cols(), false);
      for (auto pc : e.pivots) is_pivot[pc] = true;
      for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<u64> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = modp::neg(e.rref(r, f), pr.p);
        flat.insert(flat.end(), v.begin(), v.end());
      }
      imgs.push_back(std::move(flat));
    }
    if (!ok) continue;
    if (pivots.size() < best_rank) continue;
    if (pivots.size() > best_rank || pivots != best_pivots) {
      best_rank = pivots.size();
      best_pivots = pivots;
      cre = modp::Crt{};
      cim = modp::Crt{};
      last.reset();
    }
    std::vector<u64> re, im;
    split_embeddings(imgs[0], imgs[1], pr, &re, &im);
    cre.add(re, pr.p);
    cim.add(im, pr.p);
    auto cur = reconstruct(cre, cim);
    if (!cur) continue;
    if (last && *last == *cur) {
      const std::size_t dim = m.cols() - best_rank;
      std::vector<std::vector<GaussianRational>> basis(dim);
      for (std::size_t b = 0; b < dim; ++b) {
        basis[b].assign(cur->begin() + b * m.cols(), cur->begin() + (b + 1) * m.cols());
        for (const auto& x : m * basis[b])
          if (!x.is_zero()) goto next_prime;
      }
      return basis;
    }
  next_prime:
    last = std::move(cur);
  }
  return std::nullopt;
}

// The invariant form on coordinate vectors.
inline GaussianRational form_on_coords(const std::vector<GaussianRational>& a,
                                       const std::vector<GaussianRational>& b) {
  return invariant_form(from_coords(a), from_coords(b));
}

/// s is semisimple iff the invariant form is nondegenerate on ker ad(s).
inline bool certify_semisimple(const MultiVector<GaussianRational>& s) {
  if (s.is_zero()) return true;
  auto ker = exact_kernel(ad_matrix(s));
  if (!ker) return false;
  const std::size_t n = ker->size();
  Matrix<GaussianRational> gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      gram(a, b) = form_on_coords((*ker)[a], (*ker)[b]);
      gram(b, a) = gram(a, b);
    }
  for (std::size_t k = 0; k < 4; ++k) {
    auto gm = modp::reduce(gram, modp::prime(k), false);
    if (gm && modp::determinant(*gm, modp::prime(k).p) != 0) return true;
  }
  return !is_zero(determinant(gram));
}

}  // namespace detail

/// Jordan decomposition of an odd element inside e7, exact over Q(i).
///
/// The semisimple part is computed modulo word-size primes (Krylov minimal
/// polynomial of a probe vector, Newton lifting of its squarefree part) and
/// rebuilt by Chinese remaindering. The result is then certified exactly:
/// the parts commute, ad of the nilpotent part is nilpotent and the
/// semisimple part has nondegenerate centraliser. Uniqueness of the
/// decomposition makes the certificate complete.
inline JordanSplit<GaussianRational> jordan_decompose(const MultiVector<GaussianRational>& psi) {
  if (psi.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "Jordan decomposition needs a grade-4 vector");
  JordanSplit<GaussianRational> out;
  if (psi.is_zero()) return out;
  const Matrix<GaussianRational> ad = ad_matrix(psi);
  int degree = -1;
  modp::Crt cre, cim;
  std::optional<std::vector<GaussianRational>> last;
  for (std::size_t k = 0; k < 64; ++k) {
    const modp::Prime& pr = modp::prime(k);
    auto plus = detail::semisimple_mod_p(ad, pr, false);
    auto minus = detail::semisimple_mod_p(ad, pr, true);
    if (!plus || !minus || plus->degree != minus->degree) continue;
    if (plus->degree < degree) continue;  // unlucky prime
    if (plus->degree > degree) {
      degree = plus->degree;
      cre = modp::Crt{};
      cim = modp::Crt{};
      last.reset();
    }
    std::vector<modp::u64> re, im;
    detail::split_embeddings(plus->values, minus->values, pr, &re, &im);
    cre.add(re, pr.p);
    cim.add(im, pr.p);
    auto cur = detail::reconstruct(cre, cim);
    if (!cur) continue;
    if (last && *last == *cur) {
      MultiVector<GaussianRational> s(4, *cur);
      MultiVector<GaussianRational> n = psi - s;
      if (odd_bracket(s, n).is_zero()) {
        int idx = detail::nilpotency_index(ad_matrix(n));
        if (idx > 0 && detail::certify_semisimple(s)) {
          out.semisimple = std::move(s);
          out.nilpotent = std::move(n);
          out.nilpotency_index = idx;
          return out;
        }
      }
    }
    last = std::move(cur);
  }
  throw Error(ErrorCode::kInternal, "Jordan decomposition failed to certify");
}

inline JordanSplit<ExactScalar> jordan_decompose(const MultiVector<ExactScalar>& psi) {
  auto split = jordan_decompose(to_gaussian(psi));
  return {to_exact(split.semisimple), to_exact(split.nilpotent), split.nilpotency_index};
}

template <class T>
bool is_semisimple(const MultiVector<T>& psi) {
  return jordan_decompose(psi).nilpotent.is_zero();
}

template <class T>
bool is_nilpotent(const MultiVector<T>& psi) {
  return jordan_decompose(psi).semisimple.is_zero();
}

}  // namespace sov
