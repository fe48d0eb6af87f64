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
#include <sstream>
#include <string>

#include "sov4/invariants.hpp"
#include "sov4/io.hpp"

namespace sov {

/// Rank data of ad(n) on e7: rank ad(n)^k for k = 1..8, plus the kernel
/// dimensions of ad(n) on the even and odd parts. The totals alone do not
/// separate every SL8 orbit (two orbits share them), so the ranks of
/// ad(n)^k restricted to the even and to the odd subspace are kept too.
struct NilpotentFingerprint {
  std::array<int, 8> ranks{};
  int ker_even = 0;
  int ker_odd = 0;
  std::array<int, 8> even_ranks{};
  std::array<int, 8> odd_ranks{};
  friend bool operator==(const NilpotentFingerprint&, const NilpotentFingerprint&) = default;
};

inline std::string to_string(const NilpotentFingerprint& f) {
  std::ostringstream os;
  os << "ranks=[";
  for (std::size_t k = 0; k < f.ranks.size(); ++k) os << (k ? "," : "") << f.ranks[k];
  os << "] ker_even=" << f.ker_even << " ker_odd=" << f.ker_odd << " even=[";
  for (std::size_t k = 0; k < f.even_ranks.size(); ++k) os << (k ? "," : "") << f.even_ranks[k];
  os << "] odd=[";
  for (std::size_t k = 0; k < f.odd_ranks.size(); ++k) os << (k ? "," : "") << f.odd_ranks[k];
  os << "]";
  return os.str();
}

/// ad(n) = [[0, B], [C, 0]] for odd n, so powers alternate between the
/// two blocks and ranks add over them.
template <class T>
NilpotentFingerprint fingerprint(const MultiVector<T>& n) {
  if (n.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "fingerprint needs a grade-4 vector");
  NilpotentFingerprint fp;
  if (n.is_zero()) {
    fp.ker_even = static_cast<int>(kSl8Dim);
    fp.ker_odd = static_cast<int>(kOddDim);
    return fp;
  }
  const Matrix<T> ad = ad_matrix(n);
  if (detail::nilpotency_index(ad) == 0) throw Error(ErrorCode::kNotNilpotent, "element is not nilpotent");
  const Matrix<T> b = detail::sub_block(ad, 0, kSl8Dim, kSl8Dim, kOddDim);
  const Matrix<T> c = detail::sub_block(ad, kSl8Dim, 0, kOddDim, kSl8Dim);
  // On the even part ad^k is C, BC, CBC, ...; on the odd part B, CB, BCB, ...
  Matrix<T> pe = c, po = b;
  for (int k = 1; k <= 8; ++k) {
    if (k > 1) {
      pe = (k % 2 == 0 ? b : c) * pe;
      po = (k % 2 == 0 ? c : b) * po;
    }
    fp.even_ranks[k - 1] = static_cast<int>(rank(pe));
    fp.odd_ranks[k - 1] = static_cast<int>(rank(po));
    fp.ranks[k - 1] = fp.even_ranks[k - 1] + fp.odd_ranks[k - 1];
    if (fp.ranks[k - 1] == 0) break;
  }
  fp.ker_even = static_cast<int>(kSl8Dim) - fp.even_ranks[0];
  fp.ker_odd = static_cast<int>(kOddDim) - fp.odd_ranks[0];
  return fp;
}

struct NilpotentClass {
  int label;   // 0 for the zero orbit
  int family;  // qubit family whose nilpotent part lies in this orbit
  NilpotentFingerprint fingerprint;
};

/// Fingerprints of zero and of the eight representatives e of the
/// nilpotent_triple() table, computed exactly once and frozen here.
inline const std::array<NilpotentClass, 9>& nilpotent_class_table() {
  static const std::array<NilpotentClass, 9> table = {{
      {0, 1, {{0, 0, 0, 0, 0, 0, 0, 0}, 63, 70, {}, {}}},
      {1, 2, {{34, 1, 0, 0, 0, 0, 0, 0}, 46, 53,
          {17, 0, 0, 0, 0, 0, 0, 0}, {17, 1, 0, 0, 0, 0, 0, 0}}},
      {2, 3, {{52, 10, 0, 0, 0, 0, 0, 0}, 37, 44,
          {26, 4, 0, 0, 0, 0, 0, 0}, {26, 6, 0, 0, 0, 0, 0, 0}}},
      {5, 10, {{64, 19, 2, 0, 0, 0, 0, 0}, 31, 38,
          {32, 8, 1, 0, 0, 0, 0, 0}, {32, 11, 1, 0, 0, 0, 0, 0}}},
      {6, 6, {{66, 34, 2, 1, 0, 0, 0, 0}, 30, 37,
          {33, 16, 1, 0, 0, 0, 0, 0}, {33, 18, 1, 1, 0, 0, 0, 0}}},
      {9, 16, {{66, 34, 2, 1, 0, 0, 0, 0}, 30, 37,
          {33, 14, 1, 1, 0, 0, 0, 0}, {33, 20, 1, 0, 0, 0, 0, 0}}},
      {20, 9, {{84, 59, 34, 10, 2, 1, 0, 0}, 21, 28,
          {42, 28, 17, 4, 1, 0, 0, 0}, {42, 31, 17, 6, 1, 1, 0, 0}}},
      {44, 14, {{94, 64, 34, 19, 4, 2, 0, 0}, 16, 23,
          {47, 30, 17, 9, 2, 0, 0, 0}, {47, 34, 17, 10, 2, 2, 0, 0}}},
      {50, 12, {{96, 80, 64, 49, 34, 19, 4, 3}, 15, 22,
          {48, 38, 32, 23, 17, 8, 2, 1}, {48, 42, 32, 26, 17, 11, 2, 2}}}
  }};
  return table;
}

inline std::string class_name(int label) { return label == 0 ? "zero" : std::to_string(label); }

template <class T>
const NilpotentClass& identify_class(const MultiVector<T>& n) {
  NilpotentFingerprint fp = fingerprint(n);
  for (const auto& c : nilpotent_class_table())
    if (c.fingerprint == fp) return c;
  throw Error(ErrorCode::kUnrecognizedOrbit, "nilpotent orbit is not among the qubit classes: " + to_string(fp));
}

struct DecisionReport {
  bool equivalent = false;
  std::array<NilpotentFingerprint, 2> fingerprints;
  std::array<InvariantQuadruple<GaussianRational>, 2> quadruples;
  std::array<int, 2> labels{};
  std::array<int, 2> families{};
};

inline DecisionReport slocc_equivalent(const QubitState<GaussianRational>& phi, const QubitState<GaussianRational>& psi) {
  DecisionReport rep;
  const std::array<const QubitState<GaussianRational>*, 2> in = {&phi, &psi};
  for (int k = 0; k < 2; ++k) {
    auto e = embed(*in[k]);
    if (e.is_zero()) throw Error(ErrorCode::kZeroState, "state is zero");
    auto split = jordan_decompose(e);
    const NilpotentClass& cls = identify_class(split.nilpotent);
    rep.fingerprints[k] = cls.fingerprint;
    rep.labels[k] = cls.label;
    rep.families[k] = cls.family;
    rep.quadruples[k] = quadruple(e);
  }
  rep.equivalent = rep.fingerprints[0] == rep.fingerprints[1] && rep.quadruples[0] == rep.quadruples[1];
  return rep;
}

inline DecisionReport slocc_equivalent(const QubitState<ExactScalar>& phi, const QubitState<ExactScalar>& psi) {
  auto g = [](const QubitState<ExactScalar>& s) { return map_state<GaussianRational>(s, [](const ExactScalar& x) { return x.to_gaussian(); }); };
  return slocc_equivalent(g(phi), g(psi));
}

inline std::string to_text(const DecisionReport& r) {
  std::ostringstream os;
  os << "equivalent: " << (r.equivalent ? "yes" : "no") << "\n";
  for (int k = 0; k < 2; ++k) {
    const auto& q = r.quadruples[k];
    os << "state " << (k == 0 ? "A" : "B") << ":\n"
       << "  nilpotent class: " << class_name(r.labels[k]) << " (family " << r.families[k] << ")\n"
       << "  fingerprint: " << to_string(r.fingerprints[k]) << "\n"
       << "  f2 = " << to_string(q.f2) << "\n"
       << "  f6 = " << to_string(q.f6) << "\n"
       << "  f8 = " << to_string(q.f8) << "\n"
       << "  f12 = " << to_string(q.f12) << "\n";
  }
  return os.str();
}

}  // namespace sov
