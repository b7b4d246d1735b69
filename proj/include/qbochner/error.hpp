// Copyright 2026 The qbochner Authors. All Rights Reserved.
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

#ifndef QBOCHNER_ERROR_HPP
#define QBOCHNER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbochner {

enum class ErrorCode {
  NotHermitian,
  NotAntiSelfAdjoint,
  NegativeWeight,
  ConeViolation,
  InvalidSpectralSystem,
  EmptyGrid,
  NonFinite,
  InvalidSpec,
  NoPairsForLag,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAntiSelfAdjoint: return "NotAntiSelfAdjoint";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::ConeViolation: return "ConeViolation";
    case ErrorCode::InvalidSpectralSystem: return "InvalidSpectralSystem";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NoPairsForLag: return "NoPairsForLag";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// All library failures are reported as Error; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qbochner

#endif  // QBOCHNER_ERROR_HPP
