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

#ifndef DPCLUSTX_LEDGER_H_
#define DPCLUSTX_LEDGER_H_

#include <string>
#include <vector>

namespace dpclustx {

enum class CompositionMode { kSequential, kParallel, kPostProcessing };

const char* CompositionModeName(CompositionMode mode);

struct LedgerEntry {
  std::string tag;
  double epsilon = 0;
  CompositionMode mode = CompositionMode::kSequential;
  // Parallel charges with the same group compose to the maximum of their
  // epsilons; the group as a whole composes sequentially with the rest.
  std::string group;
};

// Records every privacy charge made by a run. Total() applies sequential
// composition across entries and groups, parallel composition within a
// group, and charges nothing for post-processing.
class BudgetLedger {
 public:
  void Charge(std::string tag, double epsilon,
              CompositionMode mode = CompositionMode::kSequential,
              std::string group = {});

  double Total() const;
  // Total restricted to entries whose tag starts with prefix.
  double TotalFor(const std::string& prefix) const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }

 private:
  std::vector<LedgerEntry> entries_;
};

}  // namespace dpclustx

#endif  // DPCLUSTX_LEDGER_H_
