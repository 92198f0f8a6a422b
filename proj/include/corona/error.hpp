// Copyright 2026 The corona-antimagic Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace corona {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  BadParams,
  WrongAttachmentCount,
  DisconnectedAttachment,
  AttachmentTooSmall,
  BadBaseParam,
  AlreadyLabeled,
  ConditionsNotMet,
  WrongBaseType,
  NotUniversal,
  ConstructionFailed,
  NotABijection,
  TooLarge,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::WrongAttachmentCount: return "WrongAttachmentCount";
    case ErrorCode::DisconnectedAttachment: return "DisconnectedAttachment";
    case ErrorCode::AttachmentTooSmall: return "AttachmentTooSmall";
    case ErrorCode::BadBaseParam: return "BadBaseParam";
    case ErrorCode::AlreadyLabeled: return "AlreadyLabeled";
    case ErrorCode::ConditionsNotMet: return "ConditionsNotMet";
    case ErrorCode::WrongBaseType: return "WrongBaseType";
    case ErrorCode::NotUniversal: return "NotUniversal";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as this exception; `code()` tells
/// callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corona
