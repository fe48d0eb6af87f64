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


// Shared fixtures for the unit and acceptance tests.

#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sov4/sov4.hpp"

namespace sov::testing {

using G = GaussianRational;
using Params = std::vector<G>;

struct Symmetry {
  std::string name;
  std::function<Params(const Params&)> map;
};

/// Parameter substitutions that leave all invariants of a family unchanged.
inline std::vector<Symmetry> family_symmetries(int family) {
  const G half(make_rational(1, 2));
  switch (family) {
    case 2:
      return {{"(b,-a,c)", [](const Params& p) { return Params{p[1], -p[0], p[2]}; }},
              {"((a+b)/2+c,(a+b)/2-c,(a-b)/2)", [half](const Params& p) {
                 G s = half * (p[0] + p[1]);
                 return Params{s + p[2], s - p[2], half * (p[0] - p[1])};
               }}};
    case 3:
      return {{"(a,-b)", [](const Params& p) { return Params{p[0], -p[1]}; }},
              {"(b,a)", [](const Params& p) { return Params{p[1], p[0]}; }}};
    case 6:
      return {{"((a+3b)/2,(a-b)/2)", [half](const Params& p) {
                 return Params{half * (p[0] + G(3) * p[1]), half * (p[0] - p[1])};
               }},
              {"(a,-b)", [](const Params& p) { return Params{p[0], -p[1]}; }}};
    case 9:
    case 10:
      return {{"-a", [](const Params& p) { return Params{-p[0]}; }}};
    default:
      return {};
  }
}

inline Params random_params(Rng& rng, int family) {
  Params p;
  for (int k = 0; k < family_arity(family); ++k) p.push_back(G(random_rational(rng)));
  return p;
}

inline QubitState<G> rep(int family, const Params& p) { return family_representative(family, p); }

inline QubitState<G> gaussian_state(const QubitState<ExactScalar>& s) {
  return map_state<G>(s, [](const ExactScalar& x) { return x.to_gaussian(); });
}

inline std::vector<ExactScalar> to_exact(const Params& p) {
  std::vector<ExactScalar> out;
  for (const auto& x : p) out.emplace_back(x);
  return out;
}

/// Random element of the GHZ-like subspace spanned by p2, p4, p5, -p6.
inline std::array<G, 4> random_cartan_point(Rng& rng) {
  return {G(random_rational(rng)), G(random_rational(rng)), G(random_rational(rng)), G(random_rational(rng))};
}

inline std::string matrix_key(const Matrix<G>& m) {
  std::string k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) k += std::to_string(r) + ":" + std::to_string(c) + "=" + to_string(m(r, c)) + ";";
  return k;
}

struct GroupOrders {
  std::size_t on_v = 0;       // order of the group generated in GL8
  std::size_t on_wedge4 = 0;  // number of distinct induced maps on wedge^4
};

/// Closes the generators under multiplication and counts the group and its
/// image under the fourth compound.
inline GroupOrders generated_group_orders(const std::vector<Matrix<G>>& gens) {
  std::vector<Matrix<G>> elems{Matrix<G>::identity(8)};
  std::set<std::string> seen{matrix_key(elems[0])};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Matrix<G> x = g * elems[k];
      if (seen.insert(matrix_key(x)).second) elems.push_back(std::move(x));
    }
  std::set<std::string> induced;
  for (const auto& e : elems) induced.insert(matrix_key(compound_matrix(e, 4)));
  return {elems.size(), induced.size()};
}

/// SOV nilpotent states for the three nilpotent classes whose families have
/// no printed qubit representative: label 9 (family 16), 44 (14), 50 (12).
inline QubitState<G> nilpotent_witness(int label) {
  switch (label) {
    case 9: return kets(G(1), {"0000", "0111"});
    case 44: return kets(G(1), {"0000", "0101", "1000", "1110"});
    case 50: return kets(G(1), {"0000", "1011", "1101", "1110"});
    default: throw Error(ErrorCode::kUnknownLabel, "no witness for label " + std::to_string(label));
  }
}

}  // namespace sov::testing
