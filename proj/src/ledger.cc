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

#include "dpclustx/ledger.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "dpclustx/error.h"

namespace dpclustx {
namespace {

double Compose(const std::vector<const LedgerEntry*>& entries) {
  double total = 0;
  std::map<std::string, double> groups;
  for (const LedgerEntry* e : entries) {
    switch (e->mode) {
      case CompositionMode::kSequential:
        total += e->epsilon;
        break;
      case CompositionMode::kParallel: {
        double& g = groups[e->group];
        g = std::max(g, e->epsilon);
        break;
      }
      case CompositionMode::kPostProcessing:
        break;
    }
  }
  for (const auto& [name, eps] : groups) total += eps;
  return total;
}

}  // namespace

const char* CompositionModeName(CompositionMode mode) {
  switch (mode) {
    case CompositionMode::kSequential:
      return "sequential";
    case CompositionMode::kParallel:
      return "parallel";
    case CompositionMode::kPostProcessing:
      return "post-processing";
  }
  return "unknown";
}

void BudgetLedger::Charge(std::string tag, double epsilon,
                          CompositionMode mode, std::string group) {
  if (std::isnan(epsilon) || epsilon < 0) {
    Fail(ErrorCode::kNegativeEpsilon, "charge '" + tag + "' is negative");
  }
  if (mode == CompositionMode::kPostProcessing) epsilon = 0;
  if (mode == CompositionMode::kParallel && group.empty()) group = tag;
  entries_.push_back(
      LedgerEntry{std::move(tag), epsilon, mode, std::move(group)});
}

double BudgetLedger::Total() const {
  std::vector<const LedgerEntry*> all;
  for (const auto& e : entries_) all.push_back(&e);
  return Compose(all);
}

double BudgetLedger::TotalFor(const std::string& prefix) const {
  std::vector<const LedgerEntry*> some;
  for (const auto& e : entries_) {
    if (e.tag.rfind(prefix, 0) == 0) some.push_back(&e);
  }
  return Compose(some);
}

}  // namespace dpclustx
