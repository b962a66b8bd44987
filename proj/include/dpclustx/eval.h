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

#ifndef DPCLUSTX_EVAL_H_
#define DPCLUSTX_EVAL_H_

#include <cstddef>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "dpclustx/counts.h"
#include "dpclustx/dataset.h"
#include "dpclustx/quality.h"

// The original (high-sensitivity) quality measures, used for evaluation,
// for the non-private baseline, and as test oracles.
namespace dpclustx {

// 1/2 * sum_a |a1/n1 - a2/n2|. Returns 0 when either side is empty.
double Tvd(std::span<const double> h1, std::span<const double> h2);
double Tvd(const Histogram& h1, const Histogram& h2);

// TVD between the full-data and cluster distributions of attribute A.
double ClusterInterestingness(const ClusterCounts& counts, ClusterLabel c,
                              AttributeId attribute);
// Average over the cluster's tuples of the share of their A-value that lies
// inside the cluster, i.e. Suf_p / |D_c|. Bins whose cluster count exceeds
// the full count (possible for noisy histograms) use the cluster count as
// denominator. 0 for an empty cluster.
double ClusterSufficiency(const ClusterCounts& counts, ClusterLabel c,
                          AttributeId attribute);
// gamma-weighted ClusterInterestingness and ClusterSufficiency.
double SensitiveSingleClusterScore(const ClusterCounts& counts,
                                   ClusterLabel c, AttributeId attribute,
                                   const Gamma& gamma);

// Mean over clusters of ClusterInterestingness.
double SensitiveInterestingness(const ClusterCounts& counts,
                                const AttributeCombination& combination);
// Size-weighted mean of ClusterSufficiency; equals (1/|D|) sum_c Suf_p.
double SensitiveSufficiency(const ClusterCounts& counts,
                            const AttributeCombination& combination);

// Expected permutation diversity of one group of clusters explained by the
// same attribute, given their pairwise TVD matrix. A uniformly random order
// is drawn; each cluster after the first contributes its minimum distance to
// the clusters placed before it. A single cluster scores 1.
double ExpectedPermutationDiversity(
    const std::vector<std::vector<double>>& distances);

// Sum over attributes of ExpectedPermutationDiversity of the clusters they
// explain. Range [0, |C|].
double RawSensitiveDiversity(const ClusterCounts& counts,
                             const AttributeCombination& combination);
// RawSensitiveDiversity / |C|, range [0, 1].
double SensitiveDiversity(const ClusterCounts& counts,
                          const AttributeCombination& combination);

struct QualityComponents {
  double interestingness = 0;
  double sufficiency = 0;
  double diversity = 0;  // normalised
  double quality = 0;
};

QualityComponents QualityBreakdown(const ClusterCounts& counts,
                                   const AttributeCombination& combination,
                                   const WeightParams& weights);
double Quality(const ClusterCounts& counts,
               const AttributeCombination& combination,
               const WeightParams& weights);

// Fraction of clusters whose attributes differ.
double Mae(const AttributeCombination& a, const AttributeCombination& b);

// Caches per-(cluster, attribute) values and pairwise distances so many
// combinations over the same counts can be scored cheaply.
class SensitiveScorer {
 public:
  SensitiveScorer(const ClusterCounts& counts, const WeightParams& weights);

  double SingleCluster(ClusterLabel c, AttributeId a, const Gamma& gamma);
  double Quality(const AttributeCombination& combination);

 private:
  double Interestingness(ClusterLabel c, AttributeId a);
  double Sufficiency(ClusterLabel c, AttributeId a);
  double Distance(AttributeId a, ClusterLabel c, ClusterLabel d);

  const ClusterCounts& counts_;
  WeightParams weights_;
  std::map<std::pair<ClusterLabel, AttributeId>, std::pair<double, double>>
      single_;
  std::map<std::tuple<AttributeId, ClusterLabel, ClusterLabel>, double> pair_;
};

// Exact argmax of Quality over attrs^|C|, ties to the lexicographically
// smallest combination. Refuses more than 10^6 combinations.
AttributeCombination BruteForceBestCombination(
    const ClusterCounts& counts, std::span<const AttributeId> attrs,
    const WeightParams& weights);

struct ClusterEval {
  double interestingness = 0;
  double sufficiency = 0;
};

struct EvalReport {
  QualityComponents candidate;
  QualityComponents reference;
  double mae = 0;
  std::vector<ClusterEval> clusters;  // for the candidate
  double runtime_seconds = 0;
};

EvalReport Evaluate(const ClusterCounts& counts,
                    const AttributeCombination& candidate,
                    const AttributeCombination& reference,
                    const WeightParams& weights);

}  // namespace dpclustx

#endif  // DPCLUSTX_EVAL_H_
