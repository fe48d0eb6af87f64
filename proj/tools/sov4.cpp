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


// sov4: command-line front end for the library.
//
// Exit status: 0 on success or a positive verdict, 1 on a negative verdict
// (inequivalent states, failed verification, unfactorable unitary), 2 on
// usage and input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sov4/sov4.hpp"

namespace {

using namespace sov;
using G = GaussianRational;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

enum class Format { kExact, kFloat };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A state file is fermionic if it starts with a grade header, otherwise it
// is a qubit amplitude file and gets embedded.
bool is_fermionic_text(const std::string& text) {
  std::istringstream in(text);
  auto lines = detail::content_lines(in);
  return !lines.empty() && lines[0].second.rfind("grade", 0) == 0;
}

MultiVector<ExactScalar> load_state(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  if (is_fermionic_text(text)) {
    auto v = read_fermionic<ExactScalar>(in);
    if (v.grade() != 4) throw Error(ErrorCode::kGradeMismatch, "expected a grade-4 state");
    return v;
  }
  return embed(QubitState<ExactScalar>(read_qubit_amplitudes<ExactScalar>(in)));
}

QubitState<ExactScalar> load_qubit_state(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  if (is_fermionic_text(text)) return unembed(read_fermionic<ExactScalar>(in));
  return QubitState<ExactScalar>(read_qubit_amplitudes<ExactScalar>(in));
}

std::string show(const ExactScalar& x, Format f) { return f == Format::kExact ? to_string(x) : to_string(x.to_approx()); }
std::string show(const G& x, Format f) { return show(ExactScalar(x), f); }

void print_fermionic(const MultiVector<ExactScalar>& v, Format f) {
  if (f == Format::kExact) write_fermionic(std::cout, v);
  else write_fermionic(std::cout, to_approx(v));
}

void print_qubit(const QubitState<ExactScalar>& s, Format f) {
  if (f == Format::kExact) {
    write_qubit_amplitudes(std::cout, s.amp);
  } else {
    std::array<ApproxScalar, 16> a;
    for (int n = 0; n < 16; ++n) a[n] = s.amp[n].to_approx();
    write_qubit_amplitudes(std::cout, a);
  }
}

std::vector<ExactScalar> parse_params(const std::string& text) {
  std::vector<ExactScalar> out;
  if (detail::trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(parse_exact(detail::trim(tok)));
  return out;
}

int cmd_invariants(const std::string& path, Format f, bool identities) {
  auto psi = to_gaussian(load_state(path));
  auto fs = trace_powers(psi, 18);
  for (int d : kInvariantDegrees) std::cout << "f" << d << " = " << show(fs.at(d), f) << "\n";
  if (!identities) return kOk;
  bool all = true;
  for (const auto& c : verify_appendix_identities(psi)) {
    std::cout << c.name << ": " << (c.holds ? "holds" : "fails") << " (lhs-rhs = " << show(c.residual, f) << ")\n";
    all &= c.holds;
  }
  auto r = verify_refitted_f18(psi);
  std::cout << "f18 (refitted): " << (r.holds ? "holds" : "fails") << "\n";
  return all ? kOk : kNegative;
}

int cmd_jordan(const std::string& path, Format f) {
  auto split = jordan_decompose(load_state(path));
  std::cout << "# semisimple part\n";
  print_fermionic(split.semisimple, f);
  std::cout << "# nilpotent part\n";
  print_fermionic(split.nilpotent, f);
  std::cout << "# nilpotency index: " << split.nilpotency_index << "\n";
  return kOk;
}

int cmd_classify(const std::string& path, Format f) {
  auto psi = to_gaussian(load_state(path));
  if (psi.is_zero()) throw Error(ErrorCode::kZeroState, "state is zero");
  auto split = jordan_decompose(psi);
  const auto& cls = identify_class(split.nilpotent);
  auto q = quadruple(psi);
  std::cout << "semisimple: " << (split.nilpotent.is_zero() ? "yes" : "no") << "\n"
            << "nilpotent: " << (split.semisimple.is_zero() ? "yes" : "no") << "\n"
            << "nilpotent class: " << class_name(cls.label) << " (family " << cls.family << ")\n"
            << "fingerprint: " << to_string(cls.fingerprint) << "\n"
            << "f2 = " << show(q.f2, f) << "\n"
            << "f6 = " << show(q.f6, f) << "\n"
            << "f8 = " << show(q.f8, f) << "\n"
            << "f12 = " << show(q.f12, f) << "\n";
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool report) {
  auto r = slocc_equivalent(load_qubit_state(a), load_qubit_state(b));
  if (report) std::cout << to_text(r);
  else std::cout << (r.equivalent ? "equivalent" : "not equivalent") << "\n";
  return r.equivalent ? kOk : kNegative;
}

int cmd_factor(const std::string& upath, const std::string& spath, double tol) {
  std::string text = read_file(upath);
  std::istringstream in(text);
  auto u = read_unitary(in);
  BlockPermFactorization fac;
  try {
    fac = theorem3_factor(u, load_qubit_state(spath), tol);
  } catch (const NotBlockPermutationError& e) {
    std::cout << "not factorable: " << e.what() << "\nblock norms:\n";
    for (const auto& row : e.block_norms()) {
      for (int c = 0; c < 4; ++c) std::cout << (c ? " " : "") << detail::format_double(row[c]);
      std::cout << "\n";
    }
    return kNegative;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSOVImage) throw;
    std::cout << "not factorable: " << e.what() << "\n";
    return kNegative;
  }
  std::cout << "permutation:";
  for (int q = 0; q < 4; ++q) std::cout << " " << fac.perm[q] + 1;
  std::cout << "\n";
  for (int q = 0; q < 4; ++q) {
    std::cout << "block " << q + 1 << " (rows " << 2 * fac.perm[q] + 1 << "-" << 2 * fac.perm[q] + 2 << "):";
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) std::cout << " " << to_string(fac.blocks[q](a, b));
    std::cout << "\n";
  }
  std::cout << "lambda:";
  for (const auto& l : fac.lambda) std::cout << " " << to_string(l);
  std::cout << "\nresidual: " << detail::format_double(fac.residual) << "\n";
  return kOk;
}

int cmd_rep(int family, const std::string& params, bool fermionic, Format f) {
  auto state = family_representative(family, parse_params(params));
  if (fermionic) print_fermionic(embed(state), f);
  else print_qubit(state, f);
  return kOk;
}

int cmd_verify(const std::string& group, std::uint64_t seed, bool timings) {
  std::vector<std::string> names = group.empty() ? verify_group_names() : std::vector<std::string>{group};
  bool all = true;
  for (const auto& n : names) {
    // One group at a time so progress shows up while long groups run.
    VerifyReport r;
    r.groups.push_back(verify_group(n, seed));
    std::cout << to_text(r, timings) << std::flush;
    all &= r.ok();
  }
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for four-qubit states in the fourth exterior power of C^8"};
  app.require_subcommand(1);
  app.fallthrough();
  Format format = Format::kExact;
  std::map<std::string, Format> formats{{"exact", Format::kExact}, {"float", Format::kFloat}};
  app.add_option("--format", format, "Scalar output: exact or float")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string in1, in2;
  auto* embed_cmd = app.add_subcommand("embed", "Qubit amplitude file to fermionic state");
  embed_cmd->add_option("file", in1, "Qubit state file")->required();
  auto* unembed_cmd = app.add_subcommand("unembed", "Fermionic state file to qubit amplitudes");
  unembed_cmd->add_option("file", in1, "Fermionic state file")->required();

  bool identities = false;
  auto* inv_cmd = app.add_subcommand("invariants", "Trace invariants f2..f18 of a state");
  inv_cmd->add_option("file", in1, "State file (qubit or fermionic)")->required();
  inv_cmd->add_flag("--identities", identities, "Also check the degree 10/14/18 relations");

  auto* jordan_cmd = app.add_subcommand("jordan", "Semisimple and nilpotent parts");
  jordan_cmd->add_option("file", in1, "State file (qubit or fermionic)")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Nilpotent class and invariant quadruple");
  classify_cmd->add_option("file", in1, "State file (qubit or fermionic)")->required();

  bool report = false;
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide SLOCC equivalence of two qubit states");
  equiv_cmd->add_option("a", in1, "First state file")->required();
  equiv_cmd->add_option("b", in2, "Second state file")->required();
  equiv_cmd->add_flag("--report", report, "Print fingerprints and invariants");

  double tol = 1e-8;
  auto* factor_cmd = app.add_subcommand("factor", "Factor an SU(8) matrix fixing the image of a generic state");
  factor_cmd->add_option("unitary", in1, "Unitary file (8 rows of re,im)")->required();
  factor_cmd->add_option("state", in2, "Generic qubit state file")->required();
  factor_cmd->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);

  int family = 0;
  std::string params;
  bool fermionic = false;
  auto* rep_cmd = app.add_subcommand("rep", "Family representative");
  rep_cmd->add_option("--family", family, "Family number (1, 2, 3, 6, 9, 10)")->required();
  rep_cmd->add_option("--params", params, "Parameters separated by ';', e.g. \"1/2;3+i\"");
  rep_cmd->add_flag("--fermionic", fermionic, "Print the embedded state");

  std::string group;
  std::uint64_t seed = 1;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Replay the built-in identity checks");
  verify_cmd->add_option("group", group, "Check group (default: all)")
      ->check(CLI::IsMember(verify_group_names()));
  verify_cmd->add_option("--seed", seed, "Seed for randomized groups");
  verify_cmd->add_flag("--timings", timings, "Append timings (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*embed_cmd) {
      print_fermionic(embed(load_qubit_state(in1)), format);
      return kOk;
    }
    if (*unembed_cmd) {
      std::string text = read_file(in1);
      std::istringstream in(text);
      print_qubit(unembed(read_fermionic<ExactScalar>(in)), format);
      return kOk;
    }
    if (*inv_cmd) return cmd_invariants(in1, format, identities);
    if (*jordan_cmd) return cmd_jordan(in1, format);
    if (*classify_cmd) return cmd_classify(in1, format);
    if (*equiv_cmd) return cmd_equiv(in1, in2, report);
    if (*factor_cmd) return cmd_factor(in1, in2, tol);
    if (*rep_cmd) return cmd_rep(family, params, fermionic, format);
    if (*verify_cmd) return cmd_verify(group, seed, timings);
  } catch (const NotSOVError& e) {
    std::cerr << "error: " << e.what() << "\noffending subsets:";
    for (const auto& s : e.offending()) std::cerr << " {" << s[0] << s[1] << s[2] << s[3] << "}";
    std::cerr << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
