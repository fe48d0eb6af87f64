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

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sov4/canonical.hpp"
#include "sov4/jordan.hpp"

namespace sov {

inline constexpr std::array<int, 7> kInvariantDegrees = {2, 6, 8, 10, 12, 14, 18};

/// The 28x28 quadratic matrix on wedge^2 V: x -> sum_T y_T (e_T into psi),
/// where y_T is the volume coefficient of x ^ psi ^ e_T.
template <class T>
Matrix<T> katanova_matrix(const MultiVector<T>& psi) {
  if (psi.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "Katanova matrix needs a grade-4 vector");
  const std::size_t n = basis::dim(2);
  Matrix<T> a(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    MultiVector<T> w = wedge(MultiVector<T>::from_mask(basis::mask(2, s)), psi);
    MultiVector<T> y = vol_dual(w);
    MultiVector<T> col(2);
    for (std::size_t t = 0; t < n; ++t) {
      if (is_zero(y[t])) continue;
      col += contract(MultiVector<T>::from_mask(basis::mask(2, t)), psi) * y[t];
    }
    for (std::size_t r = 0; r < n; ++r) a(r, s) = col[r];
  }
  return a;
}

/// f_d = tr A^{d/2} for every even d up to max_degree, keyed by d.
template <class T>
std::map<int, T> trace_powers(const MultiVector<T>& psi, int max_degree) {
  Matrix<T> a = katanova_matrix(psi);
  std::map<int, T> out;
  Matrix<T> pw = a;
  for (int k = 1; 2 * k <= max_degree; ++k) {
    if (k > 1) pw = pw * a;
    out[2 * k] = pw.trace();
  }
  return out;
}

template <class T>
T invariant(const MultiVector<T>& psi, int d) {
  bool known = false;
  for (int x : kInvariantDegrees) known |= (x == d);
  if (!known) throw Error(ErrorCode::kInvalidArgument, "invariant degree must be one of 2,6,8,10,12,14,18");
  return trace_powers(psi, d).at(d);
}

template <class T>
struct InvariantQuadruple {
  T f2{0}, f6{0}, f8{0}, f12{0};
  friend bool operator==(const InvariantQuadruple& a, const InvariantQuadruple& b) {
    return a.f2 == b.f2 && a.f6 == b.f6 && a.f8 == b.f8 && a.f12 == b.f12;
  }
};

template <class T>
InvariantQuadruple<T> quadruple(const MultiVector<T>& psi) {
  auto f = trace_powers(psi, 12);
  return {f.at(2), f.at(6), f.at(8), f.at(12)};
}

template <class T>
InvariantQuadruple<T> restricted_invariants(const QubitState<T>& phi) {
  return quadruple(embed(phi));
}

// ------------------------------------------------------ identity verifier

struct IdentityCheck {
  std::string name;
  bool holds = false;
  ExactScalar lhs, rhs, residual;
};

namespace detail {

// Monomials f2^a f6^b f8^c f12^d of one weighted degree.
struct Monomial {
  int e2, e6, e8, e12;
};

template <class T>
T power(const T& x, int e) {
  T r(1);
  for (int k = 0; k < e; ++k) r = r * x;
  return r;
}

template <class T>
T eval_monomial(const Monomial& m, const T& f2, const T& f6, const T& f8, const T& f12) {
  return power(f2, m.e2) * power(f6, m.e6) * power(f8, m.e8) * power(f12, m.e12);
}

inline mpz_class z(const char* s) { return mpz_class(s); }

struct Relation {
  const char* name;
  int degree;
  mpz_class lhs_coeff;
  std::vector<std::pair<Monomial, mpz_class>> terms;
};

// The relations expressing the restricted f10, f14, f18 through the
// generators, with integer coefficients as published.
inline const std::vector<Relation>& published_relations() {
  static const std::vector<Relation> rel = [] {
    auto p = [](long b, int e) {
      mpz_class r = 1;
      for (int k = 0; k < e; ++k) r *= b;
      return r;
    };
    std::vector<Relation> r;
    r.push_back({"f10", 10, p(2, 9) * p(3, 4),
                 {{{5, 0, 0, 0}, mpz_class(7)},
                  {{2, 1, 0, 0}, -p(2, 5) * 7 * 9},
                  {{1, 0, 1, 0}, p(2, 6) * p(3, 5)}}});
    r.push_back({"f14", 14, p(2, 14) * p(3, 7) * 5,
                 {{{4, 1, 0, 0}, p(2, 5) * 7 * 11 * 317},
                  {{7, 0, 0, 0}, mpz_class(-11 * 251)},
                  {{1, 2, 0, 0}, -p(2, 10) * p(3, 2) * 7 * 11 * 13},
                  {{1, 0, 0, 1}, p(2, 11) * p(3, 4) * 7 * 71},
                  {{0, 1, 1, 0}, p(2, 11) * p(3, 5) * 7 * 11},
                  {{3, 0, 1, 0}, -p(2, 6) * p(3, 2) * 7 * 11 * 103}}});
    r.push_back({"f18", 18, p(2, 19) * p(3, 9) * p(5, 2),
                 {{{9, 0, 0, 0}, -p(5, 2) * 13903},
                  {{6, 1, 0, 0}, p(2, 7) * 5 * 89 * 1609},
                  {{5, 0, 1, 0}, -p(2, 7) * p(3, 2) * 5 * 8989},
                  {{3, 2, 0, 0}, p(2, 12) * p(3, 2) * 37 * 109},
                  {{3, 0, 0, 1}, p(2, 10) * p(5, 2) * p(7, 2) * 13513},
                  {{2, 1, 1, 0}, -p(2, 15) * p(3, 6) * 349},
                  {{1, 0, 2, 0}, p(2, 12) * p(3, 9) * 331},
                  {{0, 3, 0, 0}, -p(2, 21) * p(3, 5) * 5},
                  {{0, 1, 0, 1}, p(2, 12) * 5 * 71 * 127 * 1409}}});
    return r;
  }();
  return rel;
}

// The f18 relation as it actually holds for this construction; differs from
// the published one in the f2^5 f8, f2^3 f12 and f6 f12 coefficients.
inline const Relation& refitted_f18_relation() {
  static const Relation r = [] {
    Relation x = published_relations()[2];
    x.name = "f18 (refitted)";
    x.terms[2].second = z("-517772160");
    x.terms[4].second = z("6950707200");
    x.terms[8].second = z("60197437440");
    return x;
  }();
  return r;
}

template <class T>
IdentityCheck check_relation(const Relation& rel, const std::map<int, T>& f) {
  T rhs(0);
  for (const auto& [m, c] : rel.terms) rhs += T(Rational(c)) * eval_monomial(m, f.at(2), f.at(6), f.at(8), f.at(12));
  T lhs = T(Rational(rel.lhs_coeff)) * f.at(rel.degree);
  IdentityCheck out;
  out.name = rel.name;
  out.lhs = to_exact(lhs);
  out.rhs = to_exact(rhs);
  out.residual = out.lhs - out.rhs;
  out.holds = out.residual.is_zero();
  return out;
}

}  // namespace detail

/// Evaluates both sides of the three published relations; the input must
/// be an embedded qubit state.
template <class T>
std::vector<IdentityCheck> verify_appendix_identities(const MultiVector<T>& psi) {
  (void)unembed(psi);  // throws NotSOV
  auto f = trace_powers(psi, 18);
  std::vector<IdentityCheck> out;
  for (const auto& rel : detail::published_relations()) out.push_back(detail::check_relation(rel, f));
  return out;
}

/// The corrected f18 relation (see published_relations()).
template <class T>
IdentityCheck verify_refitted_f18(const MultiVector<T>& psi) {
  (void)unembed(psi);
  return detail::check_relation(detail::refitted_f18_relation(), trace_powers(psi, 18));
}

// ------------------------------------------------------------- genericity

/// f(a,b,c,d) = prod over pairs of (x^2 - y^2).
template <class T>
T genericity_product(const T& a, const T& b, const T& c, const T& d) {
  std::array<T, 4> sq = {a * a, b * b, c * c, d * d};
  T r(1);
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) r = r * (sq[x] - sq[y]);
  return r;
}

/// P(z1..z4) with P(f2, f6, f8, f12) = f(a,b,c,d)^2 on the GHZ-like subspace.
struct GenericityPolynomial {
  std::vector<detail::Monomial> monomials;  // weighted degree 24
  std::vector<GaussianRational> coeffs;
  std::vector<std::array<GaussianRational, 4>> samples;  // points used to fit

  template <class T>
  T evaluate(const InvariantQuadruple<T>& q) const {
    T acc(0);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      acc += T(coeffs[k]) * detail::eval_monomial(monomials[k], q.f2, q.f6, q.f8, q.f12);
    }
    return acc;
  }
};

inline std::vector<detail::Monomial> weighted_monomials(int degree) {
  std::vector<detail::Monomial> out;
  for (int e12 = 0; 12 * e12 <= degree; ++e12)
    for (int e8 = 0; 12 * e12 + 8 * e8 <= degree; ++e8)
      for (int e6 = 0; 12 * e12 + 8 * e8 + 6 * e6 <= degree; ++e6) {
        int rest = degree - 12 * e12 - 8 * e8 - 6 * e6;
        if (rest % 2 == 0) out.push_back({rest / 2, e6, e8, e12});
      }
  return out;
}

/// Solves for P from random rational points of the GHZ-like subspace. The
/// system is overdetermined; consistency of the extra rows is checked.
inline GenericityPolynomial interpolate_genericity(std::uint64_t seed = 24) {
  GenericityPolynomial poly;
  poly.monomials = weighted_monomials(24);
  const std::size_t n = poly.monomials.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t rows = n + 8;
    Matrix<GaussianRational> sys(rows, n);
    std::vector<GaussianRational> rhs(rows);
    poly.samples.clear();
    for (std::size_t r = 0; r < rows; ++r) {
      std::array<GaussianRational, 4> x;
      for (auto& v : x) v = GaussianRational(make_rational(num(rng), den(rng)));
      poly.samples.push_back(x);
      auto q = restricted_invariants(a_state(x[0], x[1], x[2], x[3]));
      for (std::size_t c = 0; c < n; ++c) sys(r, c) = detail::eval_monomial(poly.monomials[c], q.f2, q.f6, q.f8, q.f12);
      GaussianRational f = genericity_product(x[0], x[1], x[2], x[3]);
      rhs[r] = f * f;
    }
    if (rank(sys) < n) continue;
    auto sol = solve(sys, rhs);
    if (!sol) throw Error(ErrorCode::kInternal, "genericity system is inconsistent");
    poly.coeffs = std::move(*sol);
    return poly;
  }
  throw Error(ErrorCode::kSingularSystem, "degenerate sample points for the genericity polynomial");
}

inline const GenericityPolynomial& genericity_polynomial() {
  static const GenericityPolynomial p = interpolate_genericity();
  return p;
}

/// Sufficient test for membership in the generic set: semisimple and
/// P(invariants) != 0.
template <class T>
bool is_generic(const QubitState<T>& phi) {
  auto psi = embed(phi);
  if (psi.is_zero()) return false;
  auto g = to_gaussian(psi);
  if (!is_semisimple(g)) return false;
  return !is_zero(genericity_polynomial().evaluate(quadruple(g)));
}

}  // namespace sov
