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

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sov4/classify.hpp"
#include "sov4/factor.hpp"

namespace sov {

/// One named group of checks. Failures list the exact failing inputs.
struct CheckGroup {
  std::string name;
  int passed = 0;
  int total = 0;
  double seconds = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return passed == total; }

  void record(bool good, const std::string& input) {
    ++total;
    if (good) ++passed;
    else failures.push_back(input);
  }
};

struct VerifyReport {
  std::vector<CheckGroup> groups;
  bool ok() const {
    for (const auto& g : groups)
      if (!g.ok()) return false;
    return true;
  }
};

inline const std::vector<std::string>& verify_group_names() {
  static const std::vector<std::string> names = {"e7-axioms",       "triples",       "appendix-a",
                                                 "stabilizer",      "intertwiners",  "jordan-fixtures",
                                                 "interpolation",   "factor-roundtrip"};
  return names;
}

/// Nonzero amplitudes on one line, e.g. "0000:1 1111:-1/2+i".
template <class T>
std::string compact(const QubitState<T>& s) {
  std::string out;
  for (int n = 0; n < 16; ++n) {
    if (is_zero(s.amp[n])) continue;
    if (!out.empty()) out += ' ';
    for (int b = 3; b >= 0; --b) out += static_cast<char>('0' + ((n >> b) & 1));
    out += ':' + to_string(s.amp[n]);
  }
  return out.empty() ? "0" : out;
}

template <class T>
std::string compact(const std::vector<T>& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + to_string(p[k]);
  return out + ")";
}

namespace detail {

using G = GaussianRational;

inline E7Element<G> random_e7(Rng& rng) {
  Matrix<G> x(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (rng() % 3 == 0) x(r, c) = random_gaussian(rng);
  MultiVector<G> psi(4);
  for (std::size_t k = 0; k < psi.size(); ++k)
    if (rng() % 3 == 0) psi[k] = random_gaussian(rng);
  return E7Element<G>(traceless(x), psi);
}

inline std::string e7_summary(const E7Element<G>& x) {
  std::ostringstream os;
  os << "even:";
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (!x.even(r, c).is_zero()) os << " (" << r + 1 << "," << c + 1 << ")=" << to_string(x.even(r, c));
  os << " odd:";
  for (std::size_t k = 0; k < x.odd.size(); ++k)
    if (!x.odd[k].is_zero()) {
      os << " ";
      for (int i : basis::indices(basis::mask(4, k))) os << i + 1;
      os << "=" << to_string(x.odd[k]);
    }
  return os.str();
}

inline std::vector<G> random_family_params(Rng& rng, int family) {
  std::vector<G> p;
  for (int k = 0; k < family_arity(family); ++k) p.emplace_back(random_rational(rng));
  return p;
}

inline void check_e7_axioms(CheckGroup& g, Rng& rng) {
  for (int t = 0; t < 50; ++t) {
    auto a = random_e7(rng), b = random_e7(rng), c = random_e7(rng);
    auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    g.record(j.is_zero(), "Jacobi triple " + std::to_string(t) + ": [" + e7_summary(a) + "] [" + e7_summary(b) +
                              "] [" + e7_summary(c) + "]");
  }
  for (int t = 0; t < 20; ++t) {
    auto x = random_e7(rng), y = random_e7(rng);
    auto xy = bracket(x, y);
    bool good = theta(xy) == bracket(theta(x), theta(y)) && sigma(xy) == bracket(sigma(x), sigma(y)) &&
                theta(theta(x)) == x && sigma(sigma(x)) == x;
    g.record(good, "automorphism pair " + std::to_string(t) + ": [" + e7_summary(x) + "] [" + e7_summary(y) + "]");
  }
}

inline void check_triples(CheckGroup& g) {
  using X = E7Element<ExactScalar>;
  for (int label : nilpotent_labels()) {
    auto t = nilpotent_triple(label);
    X h = X::from_even(t.h), e = X::from_odd(t.e), f = X::from_odd(t.f);
    bool good = t.f == sigma(t.e) && bracket(h, e) == ExactScalar(2) * e && bracket(h, f) == ExactScalar(-2) * f &&
                bracket(e, f) == h;
    g.record(good, "label " + std::to_string(label));
  }
}

inline void check_appendix_a(CheckGroup& g, Rng& rng) {
  int refit = 0;
  const int n = 50;
  for (int t = 0; t < n; ++t) {
    auto phi = random_qubit_state(rng);
    auto psi = embed(phi);
    for (const auto& c : verify_appendix_identities(psi))
      g.record(c.holds, c.name + " on " + compact(phi) + " (lhs-rhs=" + to_string(c.residual) + ")");
    refit += verify_refitted_f18(psi).holds;
  }
  g.notes.push_back("refitted f18 relation holds on " + std::to_string(refit) + "/" + std::to_string(n));
}

inline std::string matrix_key(const Matrix<G>& m) {
  std::string k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) k += std::to_string(r) + ":" + std::to_string(c) + "=" + to_string(m(r, c)) + ";";
  return k;
}

inline void check_stabilizer(CheckGroup& g) {
  auto gens = pauli_stabilizer_generators<G>();
  auto p = cartan_basis<G>();
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < p.size(); ++i)
      g.record(compound(gens[k], p[i]) == p[i], "generator " + std::to_string(k + 1) + " on p" + std::to_string(i + 1));
  std::vector<Matrix<G>> elems{Matrix<G>::identity(8)};
  std::set<std::string> seen{matrix_key(elems[0])};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& x : gens) {
      Matrix<G> y = x * elems[k];
      if (seen.insert(matrix_key(y)).second) elems.push_back(std::move(y));
    }
  std::set<std::string> induced;
  for (const auto& e : elems) induced.insert(matrix_key(compound_matrix(e, 4)));
  g.record(induced.size() == 64, "induced group order " + std::to_string(induced.size()) + " (expected 64)");
  g.notes.push_back("group order " + std::to_string(elems.size()) + " on V, " + std::to_string(induced.size()) +
                    " on wedge^4");
}

inline void check_intertwiners(CheckGroup& g, Rng& rng) {
  for (int fam : {2, 3, 6, 9, 10})
    for (const auto& fx : appendix_c_fixture(fam))
      for (int t = 0; t < 5; ++t) {
        std::vector<ExactScalar> p;
        for (const auto& x : random_family_params(rng, fam)) p.emplace_back(x);
        bool good = apply(fx.op, family_representative(fam, p)) == family_representative(fam, fx.map(p));
        g.record(good, "family " + std::to_string(fam) + " " + fx.name + " at " + compact(p));
      }
}

inline void check_jordan_fixtures(CheckGroup& g, Rng& rng) {
  for (int fam : {2, 3, 6, 9, 10})
    for (int t = 0; t < 4; ++t) {
      auto p = random_family_params(rng, fam);
      auto psi = embed(family_representative(fam, p));
      auto nil = embed(family_representative(fam, std::vector<G>(p.size(), G(0))));
      auto s = jordan_decompose(psi);
      bool good = s.nilpotent == nil && s.semisimple == psi - nil && odd_bracket(s.semisimple, s.nilpotent).is_zero();
      g.record(good, "family " + std::to_string(fam) + " at " + compact(p));
    }
}

inline void check_interpolation(CheckGroup& g, Rng& rng) {
  const auto& poly = genericity_polynomial();
  std::set<std::string> used;
  for (const auto& x : poly.samples) used.insert(compact(std::vector<G>(x.begin(), x.end())));
  while (g.total < 20) {
    std::vector<G> x;
    for (int k = 0; k < 4; ++k) x.emplace_back(random_rational(rng));
    if (!used.insert(compact(x)).second) continue;
    G f = genericity_product(x[0], x[1], x[2], x[3]);
    bool good = poly.evaluate(restricted_invariants(a_state(x[0], x[1], x[2], x[3]))) == f * f;
    g.record(good, "point " + compact(x));
  }
  g.notes.push_back(std::to_string(poly.monomials.size()) + " monomials fitted on " +
                    std::to_string(poly.samples.size()) + " points");
}

inline void check_factor_roundtrip(CheckGroup& g, Rng& rng) {
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<G> x;
    do {
      x.clear();
      for (int k = 0; k < 4; ++k) x.emplace_back(random_rational(rng));
    } while (genericity_product(x[0], x[1], x[2], x[3]).is_zero());
    auto phi = apply(random_local_sl(rng), a_state(x[0], x[1], x[2], x[3]));
    auto l = random_local_su(rng);
    std::string input = "local unitary " + std::to_string(t) + " with state " + compact(phi);
    try {
      auto f = theorem3_factor(local_to_matrix8(l), phi);
      worst = std::max(worst, f.residual);
      g.record(f.perm == l.perm && f.residual <= 1e-9, input);
    } catch (const Error& e) {
      g.record(false, input + " (" + e.what() + ")");
    }
  }
  auto phi = a_state(G(1), G(2), G(3), G(4));
  for (int t = 0; t < 20; ++t) {
    bool rejected = false;
    try {
      theorem3_factor(haar_special_unitary(8, rng), phi);
    } catch (const Error&) {
      rejected = true;
    }
    g.record(rejected, "Haar unitary " + std::to_string(t) + " was factored");
  }
  std::ostringstream os;
  os << "worst residual " << worst;
  g.notes.push_back(os.str());
}

}  // namespace detail

/// Runs one named group with its own generator seeded from `seed`, so a
/// group's output does not depend on which other groups run.
inline CheckGroup verify_group(const std::string& name, std::uint64_t seed) {
  CheckGroup g;
  g.name = name;
  Rng rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  if (name == "e7-axioms") detail::check_e7_axioms(g, rng);
  else if (name == "triples") detail::check_triples(g);
  else if (name == "appendix-a") detail::check_appendix_a(g, rng);
  else if (name == "stabilizer") detail::check_stabilizer(g);
  else if (name == "intertwiners") detail::check_intertwiners(g, rng);
  else if (name == "jordan-fixtures") detail::check_jordan_fixtures(g, rng);
  else if (name == "interpolation") detail::check_interpolation(g, rng);
  else if (name == "factor-roundtrip") detail::check_factor_roundtrip(g, rng);
  else throw Error(ErrorCode::kInvalidArgument, "unknown verify group \"" + name + "\"");
  g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return g;
}

inline VerifyReport verify(const std::vector<std::string>& names, std::uint64_t seed) {
  VerifyReport r;
  for (const auto& n : names) r.groups.push_back(verify_group(n, seed));
  return r;
}

/// Line-oriented report. Timings are opt-in so that equal seeds give
/// byte-identical output.
inline std::string to_text(const VerifyReport& r, bool timings = false) {
  std::ostringstream os;
  for (const auto& g : r.groups) {
    os << g.name << ": " << (g.ok() ? "PASS" : "FAIL") << " " << g.passed << "/" << g.total;
    if (timings) os << " (" << g.seconds << " s)";
    os << "\n";
    for (const auto& n : g.notes) os << "  note: " << n << "\n";
    for (const auto& f : g.failures) os << "  failed: " << f << "\n";
  }
  return os.str();
}

}  // namespace sov
