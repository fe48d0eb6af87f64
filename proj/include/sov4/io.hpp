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
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sov4/exterior.hpp"
#include "sov4/scalar.hpp"

namespace sov {

namespace detail {

// Recursive-descent parser for the exact scalar syntax:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | atom
//   atom   := integer | 'i' | 'r' integer | '(' expr ')'
// so `a/b` literals are just division of integers.
class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  ExactScalar parse() {
    ExactScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParse, why + " in scalar \"" + s_ + "\" at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  ExactScalar expr() {
    ExactScalar v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  ExactScalar term() {
    ExactScalar v = unary();
    while (true) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        ExactScalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  ExactScalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  ExactScalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExactScalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return ExactScalar::imaginary_unit();
    }
    if (c == 'r') {
      ++pos_;
      std::string d = digits();
      if (d.empty()) fail("radical without radicand");
      int m = std::stoi(d);
      return ExactScalar::radical(m);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class z(digits());
      return ExactScalar(Rational(z));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline ExactScalar parse_exact(const std::string& s) { return detail::ScalarParser(s).parse(); }

/// Basis elements in print order: radicands 1, 2, 3, 5, 6, 10, 15, 30.
inline constexpr std::array<int, 8> kPrintOrder = {0, 1, 2, 4, 3, 5, 6, 7};

inline std::string to_string(const ExactScalar& x) {
  std::string out;
  for (int mask : kPrintOrder) {
    const GaussianRational& c = x.component(mask);
    for (int part = 0; part < 2; ++part) {
      Rational q = part == 0 ? c.re() : c.im();
      if (sgn(q) == 0) continue;
      bool negative = sgn(q) < 0;
      if (negative) q = -q;
      std::vector<std::string> factors;
      bool unit = (q == 1);
      if (!unit || (part == 0 && mask == 0)) factors.push_back(q.get_str());
      if (part == 1) factors.push_back("i");
      if (mask != 0) factors.push_back("r" + std::to_string(ExactScalar::radicand(mask)));
      std::string body;
      for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
      if (out.empty()) out = (negative ? "-" : "") + body;
      else out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string to_string(const GaussianRational& x) { return to_string(ExactScalar(x)); }

inline std::string to_string(const ApproxScalar& x) {
  return detail::format_double(x.real()) + "," + detail::format_double(x.imag());
}

template <class T>
T parse_scalar(const std::string& s);

template <>
inline ExactScalar parse_scalar<ExactScalar>(const std::string& s) {
  return parse_exact(s);
}
template <>
inline GaussianRational parse_scalar<GaussianRational>(const std::string& s) {
  return parse_exact(s).to_gaussian();
}
/// Float syntax: `re,im` or a bare real; exact syntax is accepted too.
template <>
inline ApproxScalar parse_scalar<ApproxScalar>(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto comma = t.find(',');
  try {
    std::size_t used = 0;
    if (comma != std::string::npos) {
      double re = std::stod(t.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("re");
      std::string im_s = t.substr(comma + 1);
      double im = std::stod(im_s, &used);
      if (used != im_s.size()) throw std::invalid_argument("im");
      return {re, im};
    }
    double re = std::stod(t, &used);
    if (used == t.size()) return {re, 0.0};
  } catch (const std::exception&) {
    if (comma != std::string::npos) throw Error(ErrorCode::kParse, "bad complex literal \"" + s + "\"");
  }
  return parse_exact(s).to_approx();
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Content lines with comments (#) and blanks removed, numbered from 1.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] inline void line_error(int no, const std::string& why) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(no) + ": " + why);
}

}  // namespace detail

/// Fermionic state file: `grade=4`, then `i j k l : scalar` lines with
/// 1-based labels. Omitted subsets are zero; labels may be unsorted.
template <class T>
MultiVector<T> read_fermionic(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty fermionic state file");
  std::string head;
  for (char c : lines[0].second)
    if (!std::isspace(static_cast<unsigned char>(c))) head += c;
  if (head.rfind("grade=", 0) != 0) detail::line_error(lines[0].first, "expected grade=k header");
  int grade = 0;
  try {
    grade = std::stoi(head.substr(6));
  } catch (const std::exception&) {
    detail::line_error(lines[0].first, "bad grade");
  }
  if (grade < 0 || grade > 8) detail::line_error(lines[0].first, "grade out of range");
  MultiVector<T> v(grade);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, text] = lines[k];
    auto colon = text.find(':');
    if (colon == std::string::npos) detail::line_error(no, "missing ':'");
    std::istringstream idx(text.substr(0, colon));
    std::vector<int> labels;
    int l;
    while (idx >> l) labels.push_back(l);
    if (!idx.eof()) detail::line_error(no, "bad index list");
    if (static_cast<int>(labels.size()) != grade) detail::line_error(no, "index count does not match grade");
    for (int x : labels)
      if (x < 1 || x > 8) detail::line_error(no, "label out of range 1..8");
    T c;
    try {
      c = parse_scalar<T>(detail::trim(text.substr(colon + 1)));
    } catch (const Error& e) {
      detail::line_error(no, e.what());
    }
    v += MultiVector<T>::unit(labels, c);
  }
  return v;
}

template <class T>
void write_fermionic(std::ostream& out, const MultiVector<T>& v) {
  out << "grade=" << v.grade() << "\n";
  for (std::size_t r = 0; r < v.size(); ++r) {
    auto idx = basis::indices(basis::mask(v.grade(), r));
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? " " : "") << idx[k] + 1;
    out << " : " << to_string(v[r]) << "\n";
  }
}

/// Qubit state file: `ijkl : scalar` with bits in qubit order 1..4.
template <class T>
std::array<T, 16> read_qubit_amplitudes(std::istream& in) {
  std::array<T, 16> amp;
  amp.fill(T(0));
  std::array<bool, 16> seen{};
  for (const auto& [no, text] : detail::content_lines(in)) {
    auto colon = text.find(':');
    if (colon == std::string::npos) detail::line_error(no, "missing ':'");
    std::string bits = detail::trim(text.substr(0, colon));
    if (bits.size() != 4) detail::line_error(no, "expected four bits");
    int n = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') detail::line_error(no, "expected four bits");
      n = 2 * n + (c - '0');
    }
    if (seen[n]) detail::line_error(no, "duplicate basis label " + bits);
    seen[n] = true;
    try {
      amp[n] = parse_scalar<T>(detail::trim(text.substr(colon + 1)));
    } catch (const Error& e) {
      detail::line_error(no, e.what());
    }
  }
  return amp;
}

template <class T>
void write_qubit_amplitudes(std::ostream& out, const std::array<T, 16>& amp) {
  for (int n = 0; n < 16; ++n) {
    for (int b = 3; b >= 0; --b) out << ((n >> b) & 1);
    out << " : " << to_string(amp[n]) << "\n";
  }
}

/// Unitary file: eight rows of eight `re,im` tokens.
inline Matrix<ApproxScalar> read_unitary(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() != 8) throw Error(ErrorCode::kParse, "unitary file needs 8 rows");
  Matrix<ApproxScalar> u(8, 8);
  for (int r = 0; r < 8; ++r) {
    std::istringstream row(lines[r].second);
    std::string tok;
    int c = 0;
    while (row >> tok) {
      if (c >= 8) detail::line_error(lines[r].first, "more than 8 entries");
      try {
        u(r, c) = parse_scalar<ApproxScalar>(tok);
      } catch (const Error& e) {
        detail::line_error(lines[r].first, e.what());
      }
      if (!std::isfinite(u(r, c).real()) || !std::isfinite(u(r, c).imag()))
        detail::line_error(lines[r].first, "non-finite entry");
      ++c;
    }
    if (c != 8) detail::line_error(lines[r].first, "expected 8 entries");
  }
  return u;
}

inline void write_unitary(std::ostream& out, const Matrix<ApproxScalar>& u) {
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) out << (c ? " " : "") << to_string(u(r, c));
    out << "\n";
  }
}

}  // namespace sov
