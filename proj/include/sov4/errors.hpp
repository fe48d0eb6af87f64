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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sov {

enum class ErrorCode {
  kDivisionByZero,
  kUnsupportedRadical,
  kParse,
  kFieldRestriction,
  kGradeOverflow,
  kGradeUnderflow,
  kGradeMismatch,
  kInvalidArgument,
  kNotSOV,
  kUnknownFamily,
  kUnknownLabel,
  kNotNilpotent,
  kUnrecognizedOrbit,
  kZeroState,
  kSingularSystem,
  kNotBlockPermutation,
  kNotGeneric,
  kNotSOVImage,
  kInternal,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kUnsupportedRadical: return "UnsupportedRadical";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kFieldRestriction: return "FieldRestriction";
    case ErrorCode::kGradeOverflow: return "GradeOverflow";
    case ErrorCode::kGradeUnderflow: return "GradeUnderflow";
    case ErrorCode::kGradeMismatch: return "GradeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotSOV: return "NotSOV";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kNotNilpotent: return "NotNilpotent";
    case ErrorCode::kUnrecognizedOrbit: return "UnrecognizedOrbit";
    case ErrorCode::kZeroState: return "ZeroState";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kNotBlockPermutation: return "NotBlockPermutation";
    case ErrorCode::kNotGeneric: return "NotGeneric";
    case ErrorCode::kNotSOVImage: return "NotSOVImage";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Error";
}

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a grade-4 vector has weight outside the single-occupancy
/// subspace. Carries the offending basis subsets (1-based indices).
class NotSOVError : public Error {
 public:
  NotSOVError(const std::string& message,
              std::vector<std::array<int, 4>> offending)
      : Error(ErrorCode::kNotSOV, message), offending_(std::move(offending)) {}

  const std::vector<std::array<int, 4>>& offending() const noexcept {
    return offending_;
  }

 private:
  std::vector<std::array<int, 4>> offending_;
};

/// Raised by the unitary factorization when the 2x2 block norms do not form
/// a permutation pattern. Carries the 4x4 block Frobenius-norm matrix.
class NotBlockPermutationError : public Error {
 public:
  NotBlockPermutationError(const std::string& message,
                           std::array<std::array<double, 4>, 4> norms)
      : Error(ErrorCode::kNotBlockPermutation, message), norms_(norms) {}

  const std::array<std::array<double, 4>, 4>& block_norms() const noexcept {
    return norms_;
  }

 private:
  std::array<std::array<double, 4>, 4> norms_;
};

}  // namespace sov
