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
#include <functional>
#include <string>
#include <vector>

#include "sov4/e7.hpp"
#include "sov4/linalg.hpp"

namespace sov {

/// Four-qubit amplitudes, index n = 8 i + 4 j + 2 k + l for |ijkl>.
template <class T>
struct QubitState {
  std::array<T, 16> amp;

  QubitState() { amp.fill(T(0)); }
  explicit QubitState(const std::array<T, 16>& a) : amp(a) {}

  static QubitState ket(const std::string& bits, const T& c = T(1)) {
    QubitState s;
    s.amp[index(bits)] = c;
    return s;
  }
  static int index(const std::string& bits) {
    if (bits.size() != 4) throw Error(ErrorCode::kInvalidArgument, "expected four bits");
    int n = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') throw Error(ErrorCode::kInvalidArgument, "expected four bits");
      n = 2 * n + (ch - '0');
    }
    return n;
  }

  T& operator[](int n) { return amp[n]; }
  const T& operator[](int n) const { return amp[n]; }

  bool is_zero() const {
    for (const auto& x : amp)
      if (!sov::is_zero(x)) return false;
    return true;
  }

  QubitState& operator+=(const QubitState& o) {
    for (int n = 0; n < 16; ++n) amp[n] += o.amp[n];
    return *this;
  }
  QubitState& operator-=(const QubitState& o) {
    for (int n = 0; n < 16; ++n) amp[n] -= o.amp[n];
    return *this;
  }
  friend QubitState operator+(QubitState a, const QubitState& b) { return a += b; }
  friend QubitState operator-(QubitState a, const QubitState& b) { return a -= b; }
  friend QubitState operator*(const T& s, QubitState a) {
    for (auto& x : a.amp) x = s * x;
    return a;
  }
  friend bool operator==(const QubitState& a, const QubitState& b) { return a.amp == b.amp; }
};

template <class U, class T, class F>
QubitState<U> map_state(const QubitState<T>& s, F&& f) {
  QubitState<U> out;
  for (int n = 0; n < 16; ++n) out.amp[n] = f(s.amp[n]);
  return out;
}

/// Sum of c * |bits> over a list of kets.
template <class T>
QubitState<T> kets(const T& c, std::initializer_list<const char*> bits) {
  QubitState<T> s;
  for (const char* b : bits) s.amp[QubitState<T>::index(b)] += c;
  return s;
}

// ---------------------------------------------------------------- embedding

/// Mask of the SOV basis subset for qubit index n: {i, 2+j, 4+k, 6+l}.
inline std::uint8_t sov_mask(int n) {
  std::uint8_t m = 0;
  for (int q = 0; q < 4; ++q) {
    int bit = (n >> (3 - q)) & 1;
    m |= static_cast<std::uint8_t>(1u << (2 * q + bit));
  }
  return m;
}

inline bool is_sov_mask(std::uint8_t m) {
  for (int q = 0; q < 4; ++q)
    if (std::popcount(static_cast<unsigned>((m >> (2 * q)) & 3u)) != 1) return false;
  return true;
}

template <class T>
MultiVector<T> embed(const QubitState<T>& phi) {
  MultiVector<T> psi(4);
  for (int n = 0; n < 16; ++n) psi.at_mask(sov_mask(n)) = phi.amp[n];
  return psi;
}

template <class T>
QubitState<T> unembed(const MultiVector<T>& psi) {
  if (psi.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "unembed needs a grade-4 vector");
  std::vector<std::array<int, 4>> bad;
  for (std::size_t r = 0; r < psi.size(); ++r) {
    const std::uint8_t m = basis::mask(4, r);
    if (is_sov_mask(m) || is_zero(psi[r])) continue;
    auto idx = basis::indices(m);
    bad.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1});
  }
  if (!bad.empty()) {
    std::string list;
    for (const auto& b : bad) {
      list += list.empty() ? "" : ", ";
      list += "e" + std::to_string(b[0]) + std::to_string(b[1]) + std::to_string(b[2]) + std::to_string(b[3]);
    }
    throw NotSOVError("support outside the single-occupancy subspace: " + list, std::move(bad));
  }
  QubitState<T> phi;
  for (int n = 0; n < 16; ++n) phi.amp[n] = psi.at_mask(sov_mask(n));
  return phi;
}

// ------------------------------------------------------------ fixed vectors

/// p1 ... p7 spanning the Cartan subspace (index k-1 holds p_k).
template <class T>
std::array<MultiVector<T>, 7> cartan_basis() {
  using MV = MultiVector<T>;
  return {MV::unit({1, 2, 3, 4}) + MV::unit({5, 6, 7, 8}), MV::unit({1, 3, 5, 7}) + MV::unit({6, 8, 2, 4}),
          MV::unit({1, 5, 6, 2}) + MV::unit({8, 4, 3, 7}), MV::unit({1, 6, 8, 3}) + MV::unit({4, 7, 5, 2}),
          MV::unit({1, 8, 4, 5}) + MV::unit({7, 2, 6, 3}), MV::unit({1, 4, 7, 6}) + MV::unit({2, 3, 8, 5}),
          MV::unit({1, 7, 2, 8}) + MV::unit({3, 5, 4, 6})};
}

template <class T>
QubitState<T> a_state(const T& a, const T& b, const T& c, const T& d) {
  return kets(a, {"0000", "1111"}) + kets(b, {"0011", "1100"}) + kets(c, {"0101", "1010"}) +
         kets(d, {"0110", "1001"});
}

inline int family_arity(int family) {
  switch (family) {
    case 1: return 4;
    case 2: return 3;
    case 3:
    case 6: return 2;
    case 9:
    case 10: return 1;
    default:
      throw Error(ErrorCode::kUnknownFamily, "no qubit representative for family " + std::to_string(family));
  }
}

/// Representatives with a non-trivial Jordan decomposition, plus family 1.
template <class T>
QubitState<T> family_representative(int family, const std::vector<T>& params) {
  if (static_cast<int>(params.size()) != family_arity(family)) {
    throw Error(ErrorCode::kInvalidArgument, "family " + std::to_string(family) + " takes " +
                                                 std::to_string(family_arity(family)) + " parameters");
  }
  const T i = T(GaussianRational::i());
  const T half = T(make_rational(1, 2));
  const T one(1);
  switch (family) {
    case 1:
      return a_state(params[0], params[1], params[2], params[3]);
    case 2: {
      const T &a = params[0], &b = params[1], &c = params[2];
      return kets(half * (a + c - i), {"0000", "1111"}) + kets(half * (a - c + i), {"0011", "1100"}) +
             kets(half * (b + c + i), {"0101", "1010"}) + kets(half * (b - c - i), {"0110", "1001"}) +
             kets(half * i, {"0001", "0111", "1000", "1110"}) - kets(half * i, {"0010", "0100", "1011", "1101"});
    }
    case 3: {
      const T &a = params[0], &b = params[1];
      return kets(half * a, {"0000", "1111", "0011", "1100"}) + kets(half * (b + one), {"0101", "1010"}) +
             kets(half * (b - one), {"0110", "1001"}) + kets(half, {"1101", "0010"}) -
             kets(half, {"0001", "1110"});
    }
    case 6: {
      const T &a = params[0], &b = params[1];
      return kets(half * (a + b), {"0000", "1111"}) + kets(b, {"0101", "1010"}) + kets(i, {"1001"}) -
             kets(i, {"0110"}) + kets(half * (a - b), {"0011", "1100"}) +
             kets(half, {"0010", "0100", "1011", "1101"}) - kets(half, {"0001", "0111", "1000", "1110"});
    }
    case 9: {
      const T& a = params[0];
      const T m2i = T(-2) * i;
      return kets(a, {"0000", "0101", "1010", "1111"}) + kets(m2i, {"0100"}) - kets(m2i, {"1001", "1110"});
    }
    case 10: {
      const T& a = params[0];
      return kets(half * (a + i), {"0000", "1111", "0011", "1100"}) +
             kets(half * (a - i + one), {"0101", "1010"}) + kets(half * (a - i - one), {"0110", "1001"}) +
             kets(half * (i + one), {"1101", "0010"}) + kets(half * (i - one), {"0001", "1110"}) -
             kets(half * i, {"0100", "0111", "1000", "1011"});
    }
    default:
      break;
  }
  throw Error(ErrorCode::kUnknownFamily, "unknown family " + std::to_string(family));
}

// --------------------------------------------------------- nilpotent triples

template <class T>
struct NilpotentTriple {
  Matrix<T> h;
  MultiVector<T> e;
  MultiVector<T> f;
};

inline const std::array<int, 8>& nilpotent_labels() {
  static const std::array<int, 8> labels = {1, 2, 5, 6, 9, 20, 44, 50};
  return labels;
}

/// Family tag of the qubit nilpotent orbit inside each labelled orbit.
inline int family_of_label(int label) {
  switch (label) {
    case 0: return 1;
    case 1: return 2;
    case 2: return 3;
    case 5: return 10;
    case 6: return 6;
    case 9: return 16;
    case 20: return 9;
    case 44: return 14;
    case 50: return 12;
    default: throw Error(ErrorCode::kUnknownLabel, "unknown orbit label " + std::to_string(label));
  }
}

inline NilpotentTriple<ExactScalar> nilpotent_triple(int label) {
  using S = ExactScalar;
  using MV = MultiVector<S>;
  const S i = S::imaginary_unit();
  auto diag = [](std::array<long, 8> num, long den) {
    std::vector<S> d;
    for (long x : num) d.emplace_back(make_rational(x, den));
    return Matrix<S>::diagonal(d);
  };
  Matrix<S> h;
  MV e(4);
  switch (label) {
    case 1:
      h = diag({1, 1, 1, 1, -1, -1, -1, -1}, 2);
      e = MV::unit({1, 2, 3, 4});
      break;
    case 2:
      h = diag({1, 1, 0, 0, 0, 0, -1, -1}, 1);
      e = (MV::unit({1, 2, 3, 5}) + MV::unit({1, 2, 4, 6})) * i;
      break;
    case 5:
      h = diag({3, 1, 1, 1, -1, -1, -1, -3}, 2);
      e = (MV::unit({1, 3, 4, 7}) + MV::unit({1, 2, 3, 5}) + MV::unit({1, 2, 4, 6})) * i;
      break;
    case 6:
      h = diag({1, 1, 1, 1, -1, -1, -1, -1}, 1);
      e = (MV::unit({1, 3, 4, 7}) + MV::unit({1, 2, 3, 5}) + MV::unit({2, 3, 4, 8}) + MV::unit({1, 2, 4, 6})) * i;
      break;
    case 9:
      h = diag({2, 0, 0, 0, 0, 0, 0, -2}, 1);
      e = (MV::unit({1, 2, 3, 4}) + MV::unit({1, 5, 6, 7}, i)) * S::radical(2);
      break;
    case 20:
      h = diag({2, 2, 1, 1, -1, -1, -2, -2}, 1);
      e = (MV::unit({1, 3, 4, 7}) + MV::unit({2, 3, 4, 8})) * (i * S::radical(3)) + MV::unit({1, 2, 5, 6}, S(2));
      break;
    case 44:
      h = diag({2, 2, 2, 0, 0, -2, -2, -2}, 1);
      e = MV::unit({1, 3, 5, 7}) + MV::unit({2, 3, 5, 8}, S(2)) + MV::unit({1, 2, 5, 6}) +
          (MV::unit({1, 3, 4, 7}) - MV::unit({1, 2, 4, 6})) * (i * S::radical(3));
      break;
    case 50:
      h = diag({4, 2, 2, 2, -2, -2, -2, -4}, 1);
      e = (MV::unit({1, 3, 5, 7}) + MV::unit({1, 4, 6, 7}) + MV::unit({1, 2, 5, 6})) * S::radical(6) +
          MV::unit({2, 3, 4, 8}, i * S::radical(10));
      break;
    default:
      throw Error(ErrorCode::kUnknownLabel, "unknown orbit label " + std::to_string(label));
  }
  MV f = sigma(e);
  return {std::move(h), std::move(e), std::move(f)};
}

// ---------------------------------------------------------- local operators

/// g_1 x ... x g_4 followed by the qubit permutation: qubit q moves to slot
/// perm[q] (0-based).
template <class T>
struct LocalOperator {
  std::array<Matrix<T>, 4> g{Matrix<T>::identity(2), Matrix<T>::identity(2), Matrix<T>::identity(2),
                             Matrix<T>::identity(2)};
  std::array<int, 4> perm{0, 1, 2, 3};

  static LocalOperator identity() { return {}; }
  static LocalOperator tensor(Matrix<T> g1, Matrix<T> g2, Matrix<T> g3, Matrix<T> g4) {
    LocalOperator l;
    l.g = {std::move(g1), std::move(g2), std::move(g3), std::move(g4)};
    return l;
  }
  /// Swap of two qubits (0-based).
  static LocalOperator swap(int q1, int q2) {
    LocalOperator l;
    std::swap(l.perm[q1], l.perm[q2]);
    return l;
  }
  LocalOperator then_permute(const std::array<int, 4>& p) const {
    LocalOperator l = *this;
    for (int q = 0; q < 4; ++q) l.perm[q] = p[perm[q]];
    return l;
  }
};

inline int permutation_parity(const std::array<int, 4>& p) {
  int inv = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (p[a] > p[b]) ++inv;
  return (inv & 1) ? -1 : 1;
}

template <class T>
QubitState<T> apply(const LocalOperator<T>& l, const QubitState<T>& phi) {
  QubitState<T> cur = phi;
  for (int q = 0; q < 4; ++q) {
    const int shift = 3 - q;
    QubitState<T> next;
    for (int n = 0; n < 16; ++n) {
      if (is_zero(cur.amp[n])) continue;
      const int b = (n >> shift) & 1;
      for (int a = 0; a < 2; ++a) {
        const T& x = l.g[q](a, b);
        if (is_zero(x)) continue;
        const int m = (n & ~(1 << shift)) | (a << shift);
        next.amp[m] += x * cur.amp[n];
      }
    }
    cur = std::move(next);
  }
  QubitState<T> out;
  for (int n = 0; n < 16; ++n) {
    int m = 0;
    for (int q = 0; q < 4; ++q) {
      const int bit = (n >> (3 - q)) & 1;
      m |= bit << (3 - l.perm[q]);
    }
    out.amp[m] = cur.amp[n];
  }
  return out;
}

/// The 8x8 matrix on V: block (perm[q], q) holds g_q. For an odd qubit
/// permutation the block of qubit 1 is negated, which keeps the matrix in
/// SL8 and makes the wedge-4 action match the qubit action exactly (moving
/// one-vectors between pair blocks reorders the wedge factors).
template <class T>
Matrix<T> local_to_matrix8(const LocalOperator<T>& l) {
  Matrix<T> m(8, 8);
  const bool odd = permutation_parity(l.perm) < 0;
  for (int q = 0; q < 4; ++q) {
    const int dst = l.perm[q];
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        T x = l.g[q](a, b);
        if (odd && q == 0) x = -x;
        m(2 * dst + a, 2 * q + b) = x;
      }
  }
  return m;
}

template <class T>
Matrix<T> mat2(const T& a, const T& b, const T& c, const T& d) {
  Matrix<T> m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return k;
}

/// Real Pauli strings X or Z on one tensor factor of V = C2 x C2 x C2
/// (0-based index 4a + 2b + c), plus the central i I8. All have det 1.
template <class T>
std::vector<Matrix<T>> pauli_stabilizer_generators() {
  const Matrix<T> id = Matrix<T>::identity(2);
  const Matrix<T> x = mat2<T>(T(0), T(1), T(1), T(0));
  const Matrix<T> z = mat2<T>(T(1), T(0), T(0), T(-1));
  std::vector<Matrix<T>> gens;
  for (const auto* p : {&x, &z}) {
    gens.push_back(kron(kron(*p, id), id));
    gens.push_back(kron(kron(id, *p), id));
    gens.push_back(kron(kron(id, id), *p));
  }
  gens.push_back(Matrix<T>::identity(8) * T(GaussianRational::i()));
  return gens;
}

// ------------------------------------------------------- intertwiner fixtures

/// A local operator together with the parameter substitution it realizes on
/// a family representative.
struct IntertwinerFixture {
  std::string name;
  LocalOperator<ExactScalar> op;
  std::function<std::vector<ExactScalar>(const std::vector<ExactScalar>&)> map;
};

inline Matrix<ExactScalar> matrix_m() {
  using S = ExactScalar;
  const S i = S::imaginary_unit();
  const S s = S(1) / S::radical(2);
  return mat2<S>(s, i * s, i * s, s);
}

inline std::vector<IntertwinerFixture> appendix_c_fixture(int family) {
  using S = ExactScalar;
  const S i = S::imaginary_unit();
  const S one(1);
  const S half(make_rational(1, 2));
  const S rs = one / S::radical(2);
  const Matrix<S> id = Matrix<S>::identity(2);
  const Matrix<S> isy = mat2<S>(S(0), one, -one, S(0));
  const Matrix<S> isz = mat2<S>(i, S(0), S(0), -i);
  std::vector<IntertwinerFixture> out;
  switch (family) {
    case 2: {
      Matrix<S> u = mat2<S>(one, -i, -i, one) * rs;
      Matrix<S> v = mat2<S>(i, one, -one, -i) * rs;
      Matrix<S> w = mat2<S>(-i, -one, one, i) * rs;
      auto op = LocalOperator<S>::tensor(u, u, v, w).then_permute({0, 1, 3, 2});
      // This operator realizes (a,b,c) -> (-b,a,c); its inverse gives the
      // generator (b,-a,c). Both generate the same cyclic subgroup.
      out.push_back({"tensor then swap(3,4)", op, [](const std::vector<S>& p) {
                       return std::vector<S>{-p[1], p[0], p[2]};
                     }});
      out.push_back({"swap(2,3)", LocalOperator<S>::swap(1, 2), [half](const std::vector<S>& p) {
                       S s = half * (p[0] + p[1]);
                       return std::vector<S>{s + p[2], s - p[2], half * (p[0] - p[1])};
                     }});
      break;
    }
    case 3: {
      out.push_back({"I x I x i sy x i sy", LocalOperator<S>::tensor(id, id, isy, isy),
                     [](const std::vector<S>& p) { return std::vector<S>{p[0], -p[1]}; }});
      Matrix<S> m = matrix_m();
      Matrix<S> mi = inverse(m);
      out.push_back({"M^-1 x M^-1 x M x M", LocalOperator<S>::tensor(mi, mi, m, m),
                     [](const std::vector<S>& p) { return std::vector<S>{p[1], p[0]}; }});
      break;
    }
    case 6: {
      out.push_back({"swap(2,3)", LocalOperator<S>::swap(1, 2), [half](const std::vector<S>& p) {
                       return std::vector<S>{half * (p[0] + S(3) * p[1]), half * (p[0] - p[1])};
                     }});
      auto op = LocalOperator<S>::tensor(id, id, isy, isy).then_permute({1, 0, 2, 3});
      out.push_back({"T1 then swap(1,2)", op,
                     [](const std::vector<S>& p) { return std::vector<S>{p[0], -p[1]}; }});
      break;
    }
    case 9:
      out.push_back({"I x i sz x I x i sz", LocalOperator<S>::tensor(id, isz, id, isz),
                     [](const std::vector<S>& p) { return std::vector<S>{-p[0]}; }});
      break;
    case 10: {
      Matrix<S> m = matrix_m();
      out.push_back({"M x M x M x M", LocalOperator<S>::tensor(m, m, m, m),
                     [](const std::vector<S>& p) { return std::vector<S>{-p[0]}; }});
      break;
    }
    default:
      throw Error(ErrorCode::kUnknownFamily, "no intertwiners recorded for family " + std::to_string(family));
  }
  return out;
}

}  // namespace sov
