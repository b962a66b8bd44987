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

#include "dpclustx/eval.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "dpclustx/error.h"

namespace dpclustx {
namespace {

double Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out;
}

double Sum(std::span<const double> h) {
  double total = 0;
  for (double v : h) total += v;
  return total;
}

double SufficiencyShare(std::span<const double> full,
                        std::span<const double> cluster) {
  double numerator = 0;
  double size = 0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (cluster[i] <= 0) continue;
    numerator += cluster[i] * cluster[i] / std::max(full[i], cluster[i]);
    size += cluster[i];
  }
  return size > 0 ? numerator / size : 0.0;
}

template <typename DistanceFn>
double GroupedDiversity(const AttributeCombination& combination,
                        DistanceFn&& distance) {
  std::map<AttributeId, std::vector<ClusterLabel>> groups;
  for (ClusterLabel c = 0; c < combination.size(); ++c) {
    groups[combination[c]].push_back(c);
  }
  double total = 0;
  for (const auto& [attribute, members] : groups) {
    std::vector<std::vector<double>> d(members.size(),
                                       std::vector<double>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        d[i][j] = d[j][i] = distance(attribute, members[i], members[j]);
      }
    }
    total += ExpectedPermutationDiversity(d);
  }
  return total;
}

}  // namespace

double Tvd(std::span<const double> h1, std::span<const double> h2) {
  if (h1.size() != h2.size()) {
    Fail(ErrorCode::kDomainMismatch, "histograms over domains of size " +
                                         std::to_string(h1.size()) + " and " +
                                         std::to_string(h2.size()));
  }
  const double n1 = Sum(h1);
  const double n2 = Sum(h2);
  if (n1 <= 0 || n2 <= 0) return 0.0;
  double total = 0;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    total += std::fabs(h1[i] / n1 - h2[i] / n2);
  }
  return 0.5 * total;
}

double Tvd(const Histogram& h1, const Histogram& h2) {
  if (h1.attribute != h2.attribute) {
    Fail(ErrorCode::kDomainMismatch, "histograms describe different attributes");
  }
  return Tvd(h1.counts, h2.counts);
}

double ClusterInterestingness(const ClusterCounts& counts, ClusterLabel c,
                              AttributeId attribute) {
  return Tvd(counts.full(attribute), counts.cluster(c, attribute));
}

double ClusterSufficiency(const ClusterCounts& counts, ClusterLabel c,
                          AttributeId attribute) {
  return SufficiencyShare(counts.full(attribute), counts.cluster(c, attribute));
}

double SensitiveSingleClusterScore(const ClusterCounts& counts,
                                   ClusterLabel c, AttributeId attribute,
                                   const Gamma& gamma) {
  return gamma.interestingness * ClusterInterestingness(counts, c, attribute) +
         gamma.sufficiency * ClusterSufficiency(counts, c, attribute);
}

double SensitiveInterestingness(const ClusterCounts& counts,
                                const AttributeCombination& combination) {
  CheckCombination(counts, combination);
  if (combination.size() == 0) return 0.0;
  double total = 0;
  for (ClusterLabel c = 0; c < combination.size(); ++c) {
    total += ClusterInterestingness(counts, c, combination[c]);
  }
  return total / static_cast<double>(combination.size());
}

double SensitiveSufficiency(const ClusterCounts& counts,
                            const AttributeCombination& combination) {
  CheckCombination(counts, combination);
  double weighted = 0;
  double size = 0;
  for (ClusterLabel c = 0; c < combination.size(); ++c) {
    const double nc = std::max(counts.cluster_size(c), 0.0);
    weighted += nc * ClusterSufficiency(counts, c, combination[c]);
    size += nc;
  }
  return size > 0 ? weighted / size : 0.0;
}

double ExpectedPermutationDiversity(
    const std::vector<std::vector<double>>& distances) {
  const std::size_t m = distances.size();
  if (m == 0) return 0.0;
  if (m == 1) return 1.0;
  // A cluster at position s + 1 follows a uniformly random s-subset of the
  // others; its r-th nearest neighbour is the closest of them with
  // probability C(m - 1 - r, s - 1) / C(m - 1, s).
  double total = 0;
  std::vector<double> sorted;
  for (std::size_t x = 0; x < m; ++x) {
    sorted.clear();
    for (std::size_t y = 0; y < m; ++y) {
      if (y != x) sorted.push_back(distances[x][y]);
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t s = 1; s < m; ++s) {
      const double subsets = Binomial(m - 1, s);
      for (std::size_t r = 1; r + s <= m; ++r) {
        total += sorted[r - 1] * Binomial(m - 1 - r, s - 1) / subsets;
      }
    }
  }
  return total / static_cast<double>(m);
}

double RawSensitiveDiversity(const ClusterCounts& counts,
                             const AttributeCombination& combination) {
  CheckCombination(counts, combination);
  return GroupedDiversity(
      combination, [&](AttributeId a, ClusterLabel c, ClusterLabel d) {
        return Tvd(counts.cluster(c, a), counts.cluster(d, a));
      });
}

double SensitiveDiversity(const ClusterCounts& counts,
                          const AttributeCombination& combination) {
  if (combination.size() == 0) return 0.0;
  return RawSensitiveDiversity(counts, combination) /
         static_cast<double>(combination.size());
}

QualityComponents QualityBreakdown(const ClusterCounts& counts,
                                   const AttributeCombination& combination,
                                   const WeightParams& weights) {
  QualityComponents q;
  q.interestingness = SensitiveInterestingness(counts, combination);
  q.sufficiency = SensitiveSufficiency(counts, combination);
  q.diversity = SensitiveDiversity(counts, combination);
  q.quality = weights.interestingness * q.interestingness +
              weights.sufficiency * q.sufficiency +
              weights.diversity * q.diversity;
  return q;
}

double Quality(const ClusterCounts& counts,
               const AttributeCombination& combination,
               const WeightParams& weights) {
  return QualityBreakdown(counts, combination, weights).quality;
}

double Mae(const AttributeCombination& a, const AttributeCombination& b) {
  if (a.size() != b.size()) {
    Fail(ErrorCode::kLabelSetMismatch,
         "combinations cover " + std::to_string(a.size()) + " and " +
             std::to_string(b.size()) + " clusters");
  }
  if (a.size() == 0) return 0.0;
  std::size_t differ = 0;
  for (ClusterLabel c = 0; c < a.size(); ++c) {
    if (a[c] != b[c]) ++differ;
  }
  return static_cast<double>(differ) / static_cast<double>(a.size());
}

SensitiveScorer::SensitiveScorer(const ClusterCounts& counts,
                                 const WeightParams& weights)
    : counts_(counts), weights_(weights) {}

double SensitiveScorer::Interestingness(ClusterLabel c, AttributeId a) {
  auto it = single_.find({c, a});
  if (it == single_.end()) {
    it = single_
             .emplace(std::make_pair(c, a),
                      std::make_pair(ClusterInterestingness(counts_, c, a),
                                     ClusterSufficiency(counts_, c, a)))
             .first;
  }
  return it->second.first;
}

double SensitiveScorer::Sufficiency(ClusterLabel c, AttributeId a) {
  Interestingness(c, a);
  return single_.at({c, a}).second;
}

double SensitiveScorer::Distance(AttributeId a, ClusterLabel c,
                                 ClusterLabel d) {
  if (d < c) std::swap(c, d);
  auto key = std::make_tuple(a, c, d);
  auto it = pair_.find(key);
  if (it == pair_.end()) {
    it = pair_.emplace(key, Tvd(counts_.cluster(c, a), counts_.cluster(d, a)))
             .first;
  }
  return it->second;
}

double SensitiveScorer::SingleCluster(ClusterLabel c, AttributeId a,
                                      const Gamma& gamma) {
  return gamma.interestingness * Interestingness(c, a) +
         gamma.sufficiency * Sufficiency(c, a);
}

double SensitiveScorer::Quality(const AttributeCombination& combination) {
  CheckCombination(counts_, combination);
  const std::size_t m = combination.size();
  if (m == 0) return 0.0;
  double interest = 0;
  double weighted_suf = 0;
  double size = 0;
  for (ClusterLabel c = 0; c < m; ++c) {
    interest += Interestingness(c, combination[c]);
    const double nc = std::max(counts_.cluster_size(c), 0.0);
    weighted_suf += nc * Sufficiency(c, combination[c]);
    size += nc;
  }
  const double diversity =
      GroupedDiversity(combination,
                       [&](AttributeId a, ClusterLabel c, ClusterLabel d) {
                         return Distance(a, c, d);
                       }) /
      static_cast<double>(m);
  return weights_.interestingness * (interest / static_cast<double>(m)) +
         weights_.sufficiency * (size > 0 ? weighted_suf / size : 0.0) +
         weights_.diversity * diversity;
}

AttributeCombination BruteForceBestCombination(
    const ClusterCounts& counts, std::span<const AttributeId> attrs,
    const WeightParams& weights) {
  if (attrs.empty()) {
    Fail(ErrorCode::kEmptyAttributeSet, "no attributes to combine");
  }
  const std::size_t m = counts.num_clusters();
  if (static_cast<double>(m) * std::log(static_cast<double>(attrs.size())) >
      std::log(1e6) + 1e-9) {
    Fail(ErrorCode::kSearchSpaceTooLarge,
         std::to_string(attrs.size()) + "^" + std::to_string(m) +
             " combinations exceed the brute-force limit");
  }
  std::vector<AttributeId> sorted(attrs.begin(), attrs.end());
  std::sort(sorted.begin(), sorted.end());
  SensitiveScorer scorer(counts, weights);
  std::vector<std::size_t> digits(m, 0);
  AttributeCombination current{std::vector<AttributeId>(m, sorted.front())};
  AttributeCombination best = current;
  double best_score = scorer.Quality(current);
  while (true) {
    std::size_t pos = m;
    while (pos > 0 && digits[pos - 1] + 1 == sorted.size()) {
      digits[pos - 1] = 0;
      current.by_cluster[pos - 1] = sorted.front();
      --pos;
    }
    if (pos == 0) break;
    ++digits[pos - 1];
    current.by_cluster[pos - 1] = sorted[digits[pos - 1]];
    const double score = scorer.Quality(current);
    if (score > best_score) {
      best_score = score;
      best = current;
    }
  }
  return best;
}

EvalReport Evaluate(const ClusterCounts& counts,
                    const AttributeCombination& candidate,
                    const AttributeCombination& reference,
                    const WeightParams& weights) {
  const auto start = std::chrono::steady_clock::now();
  EvalReport report;
  report.mae = Mae(candidate, reference);
  report.candidate = QualityBreakdown(counts, candidate, weights);
  report.reference = QualityBreakdown(counts, reference, weights);
  for (ClusterLabel c = 0; c < candidate.size(); ++c) {
    report.clusters.push_back(
        ClusterEval{ClusterInterestingness(counts, c, candidate[c]),
                    ClusterSufficiency(counts, c, candidate[c])});
  }
  report.runtime_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return report;
}

}  // namespace dpclustx
