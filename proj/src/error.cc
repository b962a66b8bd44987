//
// Copyright 2026 The DPClustX Authors
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
//

#include "dpclustx/error.h"

#include <string>

namespace dpclustx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSchema:
      return "InvalidSchema";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidWeights:
      return "InvalidWeights";
    case ErrorCode::kInvalidBudget:
      return "InvalidBudget";
    case ErrorCode::kMissingColumn:
      return "MissingColumn";
    case ErrorCode::kUnknownCategory:
      return "UnknownCategory";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kUnknownAttribute:
      return "UnknownAttribute";
    case ErrorCode::kLabelOutOfRange:
      return "LabelOutOfRange";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kLabelSetMismatch:
      return "LabelSetMismatch";
    case ErrorCode::kDomainMismatch:
      return "DomainMismatch";
    case ErrorCode::kCountInversion:
      return "CountInversion";
    case ErrorCode::kNonPositiveScale:
      return "NonPositiveScale";
    case ErrorCode::kNonPositiveEpsilon:
      return "NonPositiveEpsilon";
    case ErrorCode::kNegativeEpsilon:
      return "NegativeEpsilon";
    case ErrorCode::kEmptyCandidateSet:
      return "EmptyCandidateSet";
    case ErrorCode::kEmptyAttributeSet:
      return "EmptyAttributeSet";
    case ErrorCode::kKTooLarge:
      return "KTooLarge";
    case ErrorCode::kSearchSpaceTooLarge:
      return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dpclustx
