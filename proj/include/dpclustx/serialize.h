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

#ifndef DPCLUSTX_SERIALIZE_H_
#define DPCLUSTX_SERIALIZE_H_

#include <optional>
#include <string>
#include <string_view>

#include "dpclustx/eval.h"
#include "dpclustx/explain.h"
#include "dpclustx/schema.h"

namespace dpclustx {

// {method, seed, combination, clusters[{label, attribute, bins, in_counts,
// out_counts}], budget{declared components, total, entries}, ...}. Output is
// a pure function of its inputs.
std::string ExplanationToJson(const GlobalExplanation& explanation,
                              const Schema& schema,
                              const std::optional<PrivacyBudget>& declared,
                              std::optional<double> declared_total = {});

// Reads the attribute combination back from ExplanationToJson output.
AttributeCombination ParseExplanationCombination(std::string_view json_text,
                                                 const Schema& schema);

std::string EvalReportToJson(const EvalReport& report, const Schema& schema,
                             const AttributeCombination& candidate,
                             const AttributeCombination& reference);
std::string EvalReportCsvHeader();
std::string EvalReportCsvRow(const EvalReport& report);

}  // namespace dpclustx

#endif  // DPCLUSTX_SERIALIZE_H_
