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

#include "dpclustx/quality.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dpclustx/error.h"
#include "dpclustx/kernels.h"

namespace dpclustx {
namespace {

void CheckSameDomain(std::size_t a, std::size_t b) {
  if (a != b) {
    Fail(ErrorCode::kDomainMismatch, "histograms over domains of size " +
                                         std::to_string(a) + " and " +
                                         std::to_string(b));
  }
}

void CheckSameAttribute(const Histogram& a, const Histogram& b) {
  if (a.attribute != b.attribute) {
    Fail(ErrorCode::kDomainMismatch,
         "histograms describe attributes " + std::to_string(a.attribute) +
             " and " + std::to_string(b.attribute));
  }
  CheckSameDomain(a.size(), b.size());
}

}  // namespace

void WeightParams::Validate() const {
  const bool finite = std::isfinite(interestingness) &&
                      std::isfinite(sufficiency) && std::isfinite(diversity);
  if (!finite || interestingness < 0 || sufficiency < 0 || diversity < 0) {
    Fail(ErrorCode::kInvalidWeights, "weights must be finite and non-negative");
  }
  if (std::fabs(interestingness + sufficiency + diversity - 1.0) > 1e-12) {
    Fail(ErrorCode::kInvalidWeights, "weights must sum to 1");
  }
}

Gamma WeightParams::DerivedGamma() const {
  const double total = interestingness + sufficiency;
  if (total <= 0) return Gamma{0.5, 0.5};
  return Gamma{interestingness / total, sufficiency / total};
}

double InterestingnessP(std::span<const double> full,
                        std::span<const double> cluster, double n, double nc) {
  CheckSameDomain(full.size(), cluster.size());
  if (n <= 0 || nc <= 0) return 0.0;
  return 0.5 * kernels::ActiveKernels().weighted_abs_diff_sum(
                   cluster.data(), 1.0, full.data(), nc / n, full.size());
}

double InterestingnessP(const Histogram& full, const Histogram& cluster,
                        double n, double nc) {
  CheckSameAttribute(full, cluster);
  return InterestingnessP(full.counts, cluster.counts, n, nc);
}

double SufficiencyP(std::span<const double> full,
                    std::span<const double> cluster) {
  CheckSameDomain(full.size(), cluster.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (cluster[i] > full[i]) {
      Fail(ErrorCode::kCountInversion,
           "bin " + std::to_string(i) + " has cluster count " +
               std::to_string(cluster[i]) + " above total " +
               std::to_string(full[i]));
    }
  }
  return kernels::ActiveKernels().sufficiency_sum(cluster.data(), full.data(),
                                                  full.size());
}

double SufficiencyP(const Histogram& full, const Histogram& cluster) {
  CheckSameAttribute(full, cluster);
  return SufficiencyP(full.counts, cluster.counts);
}

double PairDiversity(std::span<const double> cluster,
                     std::span<const double> other, double nc, double nc2,
                     AttributeId attribute, AttributeId other_attribute) {
  const double weight = std::min(nc, nc2);
  if (attribute != other_attribute) return weight;
  CheckSameDomain(cluster.size(), other.size());
  if (weight <= 0) return 0.0;
  const double distance =
      0.5 * kernels::ActiveKernels().weighted_abs_diff_sum(
                cluster.data(), 1.0 / std::max(nc, 1.0), other.data(),
                1.0 / std::max(nc2, 1.0), cluster.size());
  return weight * distance;
}

double PairDiversity(const Histogram& cluster, const Histogram& other,
                     double nc, double nc2) {
  if (cluster.attribute == other.attribute) {
    CheckSameDomain(cluster.size(), other.size());
  }
  return PairDiversity(cluster.counts, other.counts, nc, nc2,
                       cluster.attribute, other.attribute);
}

void CheckCombination(const ClusterCounts& counts,
                      const AttributeCombination& combination) {
  if (combination.size() != counts.num_clusters()) {
    Fail(ErrorCode::kLabelSetMismatch,
         "combination covers " + std::to_string(combination.size()) +
             " clusters, expected " + std::to_string(counts.num_clusters()));
  }
  for (AttributeId a : combination.by_cluster) {
    if (a >= counts.num_attributes()) {
      Fail(ErrorCode::kUnknownAttribute,
           "attribute id " + std::to_string(a) + " out of range");
    }
  }
}

double GlobalDiversity(const ClusterCounts& counts,
                       const AttributeCombination& combination) {
  CheckCombination(counts, combination);
  const std::size_t m = counts.num_clusters();
  if (m < 2) return 0.0;
  double total = 0;
  for (ClusterLabel c = 0; c < m; ++c) {
    for (ClusterLabel d = c + 1; d < m; ++d) {
      total += PairDiversity(counts.cluster(c, combination[c]),
                             counts.cluster(d, combination[d]),
                             counts.cluster_size(c), counts.cluster_size(d),
                             combination[c], combination[d]);
    }
  }
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2;
  return total / pairs;
}

double SingleClusterScore(const ClusterCounts& counts, ClusterLabel c,
                          AttributeId attribute, const Gamma& gamma) {
  const auto full = counts.full(attribute);
  const auto cluster = counts.cluster(c, attribute);
  const double n = counts.num_rows();
  const double nc = counts.cluster_size(c);
  double score = 0;
  if (gamma.interestingness != 0) {
    score += gamma.interestingness * InterestingnessP(full, cluster, n, nc);
  }
  if (gamma.sufficiency != 0) {
    score += gamma.sufficiency * SufficiencyP(full, cluster);
  }
  return score;
}

double GlobalScore(const ClusterCounts& counts,
                   const AttributeCombination& combination,
                   const WeightParams& weights) {
  CheckCombination(counts, combination);
  const std::size_t m = counts.num_clusters();
  if (m == 0) return 0.0;
  double interest = 0;
  double suff = 0;
  for (ClusterLabel c = 0; c < m; ++c) {
    const auto full = counts.full(combination[c]);
    const auto cluster = counts.cluster(c, combination[c]);
    interest += InterestingnessP(full, cluster, counts.num_rows(),
                                 counts.cluster_size(c));
    suff += SufficiencyP(full, cluster);
  }
  const double inv = 1.0 / static_cast<double>(m);
  return weights.interestingness * (interest * inv) +
         weights.sufficiency * (suff * inv) +
         weights.diversity * GlobalDiversity(counts, combination);
}

ScoreRange ScoreRanges(std::span<const double> cluster_sizes,
                       const WeightParams& weights) {
  const std::size_t m = cluster_sizes.size();
  ScoreRange range;
  if (m == 0) return range;
  std::vector<double> sorted(cluster_sizes.begin(), cluster_sizes.end());
  std::sort(sorted.begin(), sorted.end());
  if (m >= 2) {
    double weighted = 0;
    for (std::size_t i = 0; i < m; ++i) {
      weighted += static_cast<double>(m - 1 - i) * sorted[i];
    }
    range.r_div =
        weighted / (static_cast<double>(m) * static_cast<double>(m - 1) / 2);
  }
  double total = 0;
  for (double s : sorted) total += s;
  range.r_glscore =
      (weights.interestingness + weights.sufficiency) * (total / m) +
      weights.diversity * range.r_div;
  return range;
}

}  // namespace dpclustx
