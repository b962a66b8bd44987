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

#ifndef DPCLUSTX_QUALITY_H_
#define DPCLUSTX_QUALITY_H_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "dpclustx/counts.h"
#include "dpclustx/dataset.h"

// Low-sensitivity quality functions. Each single-cluster and pairwise
// function changes by at most 1 when one tuple is added to or removed from
// the dataset, and the global score is a convex combination of them.
namespace dpclustx {

// Weights of the single-cluster score; non-negative and summing to 1.
struct Gamma {
  double interestingness = 0.5;
  double sufficiency = 0.5;
};

struct WeightParams {
  double interestingness = 1.0 / 3.0;
  double sufficiency = 1.0 / 3.0;
  double diversity = 1.0 / 3.0;

  // Throws kInvalidWeights unless all weights are non-negative and sum to 1
  // within 1e-12.
  void Validate() const;

  // Renormalises (interestingness, sufficiency) to sum to 1. When both are
  // zero the single-cluster score is unused by the global objective and an
  // even split is returned.
  Gamma DerivedGamma() const;
};

// One explanation attribute per cluster label, indexed by label.
struct AttributeCombination {
  std::vector<AttributeId> by_cluster;

  std::size_t size() const { return by_cluster.size(); }
  AttributeId operator[](ClusterLabel c) const { return by_cluster[c]; }
  auto operator<=>(const AttributeCombination&) const = default;
};

struct ScoreRange {
  double r_div = 0;
  double r_glscore = 0;
};

// 1/2 * sum_a |cnt_a(D_c) - (nc / n) * cnt_a(D)|, i.e. nc * TVD(D, D_c).
// Returns 0 when n == 0.
double InterestingnessP(std::span<const double> full,
                        std::span<const double> cluster, double n, double nc);
double InterestingnessP(const Histogram& full, const Histogram& cluster,
                        double n, double nc);

// sum over bins with cnt_a(D_c) > 0 of cnt_a(D_c)^2 / cnt_a(D). Throws
// kCountInversion when a cluster bin exceeds the full-data bin.
double SufficiencyP(std::span<const double> full,
                    std::span<const double> cluster);
double SufficiencyP(const Histogram& full, const Histogram& cluster);

// min(nc, nc2) when the attributes differ; otherwise min(nc, nc2) times the
// TVD of the two (max(size, 1)-normalised) cluster histograms.
double PairDiversity(const Histogram& cluster, const Histogram& other,
                     double nc, double nc2);
double PairDiversity(std::span<const double> cluster,
                     std::span<const double> other, double nc, double nc2,
                     AttributeId attribute, AttributeId other_attribute);

// Average pairwise diversity over unordered cluster pairs; 0 for fewer than
// two clusters.
double GlobalDiversity(const ClusterCounts& counts,
                       const AttributeCombination& combination);

double SingleClusterScore(const ClusterCounts& counts, ClusterLabel c,
                          AttributeId attribute, const Gamma& gamma);

double GlobalScore(const ClusterCounts& counts,
                   const AttributeCombination& combination,
                   const WeightParams& weights);

ScoreRange ScoreRanges(std::span<const double> cluster_sizes,
                       const WeightParams& weights);

// Shared argument checks.
void CheckCombination(const ClusterCounts& counts,
                      const AttributeCombination& combination);

}  // namespace dpclustx

#endif  // DPCLUSTX_QUALITY_H_
