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

#ifndef DPCLUSTX_ERROR_H_
#define DPCLUSTX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpclustx {

enum class ErrorCode {
  // Configuration and schema problems.
  kInvalidSchema,
  kInvalidArgument,
  kInvalidWeights,
  kInvalidBudget,
  // Input data problems.
  kMissingColumn,
  kUnknownCategory,
  kParseError,
  kIoError,
  kUnknownAttribute,
  kLabelOutOfRange,
  kLengthMismatch,
  kLabelSetMismatch,
  // Arithmetic preconditions.
  kDomainMismatch,
  kCountInversion,
  kNonPositiveScale,
  kNonPositiveEpsilon,
  kNegativeEpsilon,
  kEmptyCandidateSet,
  kEmptyAttributeSet,
  kKTooLarge,
  kSearchSpaceTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The code is
// stable and is what the command-line front end maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace dpclustx

#endif  // DPCLUSTX_ERROR_H_
