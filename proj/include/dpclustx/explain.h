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

#ifndef DPCLUSTX_EXPLAIN_H_
#define DPCLUSTX_EXPLAIN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dpclustx/counts.h"
#include "dpclustx/ledger.h"
#include "dpclustx/quality.h"

namespace dpclustx {

struct PrivacyBudget {
  double eps_candset = 0.1;
  double eps_topcomb = 0.1;
  double eps_hist = 0.1;

  double Total() const { return eps_candset + eps_topcomb + eps_hist; }
  // Throws kInvalidBudget unless every component is positive and finite.
  void Validate() const;
  // Even three-way split of a total budget.
  static PrivacyBudget Split(double total);
};

struct ExplainOptions {
  std::size_t k = 3;
  WeightParams weights;
  // Attributes eligible for explanations; empty means all of them.
  std::vector<AttributeId> attributes;
};

// Per cluster label, k distinct attribute ids, best first.
struct CandidateSets {
  std::vector<std::vector<AttributeId>> by_cluster;
};

struct SingleClusterExplanation {
  ClusterLabel label = 0;
  AttributeId attribute = 0;
  // Released in-cluster counts; noisy releases may hold negative entries.
  std::vector<double> in_counts;
  // Released out-of-cluster counts, never negative.
  std::vector<double> out_counts;
};

struct GlobalExplanation {
  std::string method;
  AttributeCombination combination;
  CandidateSets candidates;
  std::vector<SingleClusterExplanation> clusters;
  BudgetLedger ledger;
  std::uint64_t seed = 0;
  // Size of the candidate-combination space scanned in the second stage.
  std::uint64_t combinations_evaluated = 0;
};

// Stage 1: per cluster, one-shot top-k over the low-sensitivity single
// cluster score at eps_candset / |C|. Charges eps_candset to the ledger.
CandidateSets SelectCandidates(const ClusterCounts& counts, const Gamma& gamma,
                               std::span<const AttributeId> attributes,
                               double eps_candset, std::size_t k,
                               std::uint64_t seed, BudgetLedger& ledger);

// The private two-stage pipeline followed by noisy histogram release.
GlobalExplanation GenerateGlobalExplanation(const ClusterCounts& counts,
                                            const ExplainOptions& options,
                                            const PrivacyBudget& budget,
                                            std::uint64_t seed);

// Non-private reference: exact top-k by the original quality functions and
// the exact best combination among them, with exact histograms.
GlobalExplanation TabeeExplain(const ClusterCounts& counts,
                               const ExplainOptions& options);

// The reference pipeline with noise added directly to the original quality
// functions (sensitivity taken as 1).
GlobalExplanation DpTabeeExplain(const ClusterCounts& counts,
                                 const ExplainOptions& options,
                                 const PrivacyBudget& budget,
                                 std::uint64_t seed);

// Releases every full-data and per-cluster histogram with noise at
// epsilon / (2 |A|) each, then runs the reference selection on the noisy
// counts.
GlobalExplanation DpNaiveExplain(const ClusterCounts& counts,
                                 const ExplainOptions& options,
                                 double epsilon, std::uint64_t seed);

// Stage-2 guard: throws kSearchSpaceTooLarge when k^|C| exceeds 10^8.
void CheckSearchSpace(std::size_t num_clusters, std::size_t k);

}  // namespace dpclustx

#endif  // DPCLUSTX_EXPLAIN_H_
