// Copyright 2026 The mahler-t Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mahler {

/// Machine-readable error codes. Every library failure maps to exactly one.
enum class ErrorCode {
  kParseError,
  kInvalidArgument,
  kFactorizationOverflow,
  kNotPrime,
  kNotSquarefree,
  kDivisibilityViolation,
  kInvalidT,
  kTOutOfRange,
  kTooLarge,
  kWrongRegime,
  kProductMismatch,
};

constexpr std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kFactorizationOverflow: return "FactorizationOverflow";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kInvalidT: return "InvalidT";
    case ErrorCode::kTOutOfRange: return "TOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWrongRegime: return "WrongRegime";
    case ErrorCode::kProductMismatch: return "ProductMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mahler
