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

#include "dpclustx/explain.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "dpclustx/error.h"
#include "dpclustx/eval.h"
#include "dpclustx/mechanisms.h"
#include "dpclustx/parallel.h"
#include "dpclustx/rng.h"

namespace dpclustx {
namespace {

std::vector<AttributeId> EligibleAttributes(const ClusterCounts& counts,
                                            const ExplainOptions& options) {
  std::vector<AttributeId> attrs = options.attributes;
  if (attrs.empty()) {
    attrs.resize(counts.num_attributes());
    std::iota(attrs.begin(), attrs.end(), 0);
  }
  if (attrs.empty()) {
    Fail(ErrorCode::kEmptyAttributeSet, "no attributes to explain with");
  }
  std::set<AttributeId> seen;
  for (AttributeId a : attrs) {
    if (a >= counts.num_attributes()) {
      Fail(ErrorCode::kUnknownAttribute,
           "attribute id " + std::to_string(a) + " out of range");
    }
    if (!seen.insert(a).second) {
      Fail(ErrorCode::kInvalidArgument,
           "attribute id " + std::to_string(a) + " listed twice");
    }
  }
  return attrs;
}

void CheckK(std::size_t k, std::size_t num_attributes) {
  if (k == 0 || k > num_attributes) {
    Fail(ErrorCode::kKTooLarge, "k = " + std::to_string(k) + " with " +
                                    std::to_string(num_attributes) +
                                    " attributes");
  }
}

void CheckClusters(const ClusterCounts& counts) {
  if (counts.num_clusters() == 0) {
    Fail(ErrorCode::kInvalidArgument, "the clustering has no labels");
  }
}

// Visits every combination of Π_c S_c, last cluster varying fastest.
// visit(combination, choice) receives the per-cluster positions in S_c.
std::uint64_t ForEachCombination(
    const CandidateSets& sets,
    const std::function<void(const AttributeCombination&,
                             const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = sets.by_cluster.size();
  std::vector<std::size_t> choice(m, 0);
  AttributeCombination current;
  current.by_cluster.resize(m);
  for (std::size_t c = 0; c < m; ++c) current.by_cluster[c] = sets.by_cluster[c][0];
  std::uint64_t visited = 0;
  while (true) {
    visit(current, choice);
    ++visited;
    std::size_t pos = m;
    while (pos > 0 && choice[pos - 1] + 1 == sets.by_cluster[pos - 1].size()) {
      choice[pos - 1] = 0;
      current.by_cluster[pos - 1] = sets.by_cluster[pos - 1][0];
      --pos;
    }
    if (pos == 0) break;
    ++choice[pos - 1];
    current.by_cluster[pos - 1] = sets.by_cluster[pos - 1][choice[pos - 1]];
  }
  return visited;
}

// Global score of every combination in Π_c S_c from per-candidate tables.
class CombinationScorer {
 public:
  CombinationScorer(const ClusterCounts& counts, const CandidateSets& sets,
                    const WeightParams& weights)
      : sets_(sets), weights_(weights), m_(sets.by_cluster.size()) {
    single_int_.resize(m_);
    single_suf_.resize(m_);
    for (ClusterLabel c = 0; c < m_; ++c) {
      for (AttributeId a : sets.by_cluster[c]) {
        const auto full = counts.full(a);
        const auto cluster = counts.cluster(c, a);
        single_int_[c].push_back(InterestingnessP(
            full, cluster, counts.num_rows(), counts.cluster_size(c)));
        single_suf_[c].push_back(SufficiencyP(full, cluster));
      }
    }
    pair_.resize(m_ * m_);
    ParallelFor(m_ * m_, [&](std::size_t idx) {
      const ClusterLabel c = idx / m_;
      const ClusterLabel d = idx % m_;
      if (d <= c) return;
      const auto& sc = sets.by_cluster[c];
      const auto& sd = sets.by_cluster[d];
      auto& table = pair_[idx];
      table.resize(sc.size() * sd.size());
      for (std::size_t i = 0; i < sc.size(); ++i) {
        for (std::size_t j = 0; j < sd.size(); ++j) {
          table[i * sd.size() + j] = PairDiversity(
              counts.cluster(c, sc[i]), counts.cluster(d, sd[j]),
              counts.cluster_size(c), counts.cluster_size(d), sc[i], sd[j]);
        }
      }
    });
  }

  double Score(const std::vector<std::size_t>& choice) const {
    double interest = 0;
    double suff = 0;
    double div = 0;
    for (ClusterLabel c = 0; c < m_; ++c) {
      interest += single_int_[c][choice[c]];
      suff += single_suf_[c][choice[c]];
      for (ClusterLabel d = c + 1; d < m_; ++d) {
        div += pair_[c * m_ + d][choice[c] * sets_.by_cluster[d].size() +
                                 choice[d]];
      }
    }
    const double inv = 1.0 / static_cast<double>(m_);
    const double diversity =
        m_ < 2 ? 0.0
               : div / (static_cast<double>(m_) *
                        static_cast<double>(m_ - 1) / 2);
    return weights_.interestingness * (interest * inv) +
           weights_.sufficiency * (suff * inv) +
           weights_.diversity * diversity;
  }

 private:
  const CandidateSets& sets_;
  WeightParams weights_;
  std::size_t m_;
  std::vector<std::vector<double>> single_int_;
  std::vector<std::vector<double>> single_suf_;
  std::vector<std::vector<double>> pair_;
};

// Exponential mechanism over Π_c S_c with a single Gumbel stream.
AttributeCombination SelectCombination(
    const CandidateSets& sets, double epsilon, std::uint64_t seed,
    const std::function<double(const AttributeCombination&,
                               const std::vector<std::size_t>&)>& score,
    std::uint64_t* evaluated) {
  RngStream rng(seed, "comb");
  GumbelMaxSelector selector(epsilon, 1.0);
  AttributeCombination best;
  std::uint64_t index = 0;
  *evaluated = ForEachCombination(
      sets, [&](const AttributeCombination& combination,
                const std::vector<std::size_t>& choice) {
        selector.Offer(index, score(combination, choice), rng);
        if (selector.best() == index) best = combination;
        ++index;
      });
  return best;
}

// Noisy histograms for the chosen attributes: full-data histograms share
// half of eps_hist sequentially, per-cluster histograms use the other half
// in parallel over the disjoint clusters.
std::vector<SingleClusterExplanation> ReleaseHistograms(
    const ClusterCounts& counts, const AttributeCombination& combination,
    double eps_hist, std::uint64_t seed, BudgetLedger& ledger) {
  const std::set<AttributeId> distinct(combination.by_cluster.begin(),
                                       combination.by_cluster.end());
  const double eps_all = eps_hist / (2.0 * static_cast<double>(distinct.size()));
  const double eps_cluster = eps_hist / 2.0;
  std::vector<std::vector<double>> noisy_full(counts.num_attributes());
  for (AttributeId a : distinct) {
    RngStream rng(seed, "hist-all", {a});
    noisy_full[a] = GeometricHistogram(counts.FullHistogram(a), eps_all, rng).counts;
    ledger.Charge("hist/all/" + std::to_string(a), eps_all);
  }
  std::vector<SingleClusterExplanation> out;
  for (ClusterLabel c = 0; c < combination.size(); ++c) {
    const AttributeId a = combination[c];
    RngStream rng(seed, "hist-c", {c});
    SingleClusterExplanation e;
    e.label = c;
    e.attribute = a;
    e.in_counts =
        GeometricHistogram(counts.ClusterHistogram(c, a), eps_cluster, rng).counts;
    e.out_counts.resize(e.in_counts.size());
    for (std::size_t v = 0; v < e.in_counts.size(); ++v) {
      e.out_counts[v] = std::max(noisy_full[a][v] - e.in_counts[v], 0.0);
    }
    ledger.Charge("hist/cluster/" + std::to_string(c), eps_cluster,
                  CompositionMode::kParallel, "hist/cluster");
    out.push_back(std::move(e));
  }
  ledger.Charge("hist/out-of-cluster", 0, CompositionMode::kPostProcessing);
  return out;
}

std::vector<SingleClusterExplanation> ExactHistograms(
    const ClusterCounts& counts, const AttributeCombination& combination) {
  std::vector<SingleClusterExplanation> out;
  for (ClusterLabel c = 0; c < combination.size(); ++c) {
    const AttributeId a = combination[c];
    SingleClusterExplanation e;
    e.label = c;
    e.attribute = a;
    const auto full = counts.full(a);
    const auto cluster = counts.cluster(c, a);
    e.in_counts.assign(cluster.begin(), cluster.end());
    e.out_counts.resize(full.size());
    for (std::size_t v = 0; v < full.size(); ++v) {
      e.out_counts[v] = std::max(full[v] - cluster[v], 0.0);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Exact stage 1 and stage 2 of the reference method over any counts.
GlobalExplanation TabeeSelection(const ClusterCounts& counts,
                                 const ExplainOptions& options) {
  CheckClusters(counts);
  options.weights.Validate();
  const auto attrs = EligibleAttributes(counts, options);
  CheckK(options.k, attrs.size());
  CheckSearchSpace(counts.num_clusters(), options.k);
  const Gamma gamma = options.weights.DerivedGamma();
  SensitiveScorer scorer(counts, options.weights);

  GlobalExplanation out;
  out.method = "tabee";
  out.candidates.by_cluster.resize(counts.num_clusters());
  for (ClusterLabel c = 0; c < counts.num_clusters(); ++c) {
    std::vector<AttributeId> sorted = attrs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> scores(counts.num_attributes());
    for (AttributeId a : sorted) scores[a] = scorer.SingleCluster(c, a, gamma);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](AttributeId a, AttributeId b) {
                       return scores[a] > scores[b];
                     });
    sorted.resize(options.k);
    out.candidates.by_cluster[c] = std::move(sorted);
  }
  double best_score = 0;
  bool have_best = false;
  out.combinations_evaluated = ForEachCombination(
      out.candidates, [&](const AttributeCombination& combination,
                          const std::vector<std::size_t>&) {
        const double score = scorer.Quality(combination);
        if (!have_best || score > best_score ||
            (score == best_score && combination < out.combination)) {
          have_best = true;
          best_score = score;
          out.combination = combination;
        }
      });
  return out;
}

}  // namespace

void PrivacyBudget::Validate() const {
  for (double eps : {eps_candset, eps_topcomb, eps_hist}) {
    if (!(eps > 0) || !std::isfinite(eps)) {
      Fail(ErrorCode::kInvalidBudget,
           "every budget component must be positive and finite");
    }
  }
}

PrivacyBudget PrivacyBudget::Split(double total) {
  return PrivacyBudget{total / 3, total / 3, total / 3};
}

void CheckSearchSpace(std::size_t num_clusters, std::size_t k) {
  if (k > 1 && static_cast<double>(num_clusters) *
                       std::log(static_cast<double>(k)) >
                   std::log(1e8)) {
    Fail(ErrorCode::kSearchSpaceTooLarge,
         std::to_string(k) + "^" + std::to_string(num_clusters) +
             " candidate combinations exceed the limit of 10^8");
  }
}

CandidateSets SelectCandidates(const ClusterCounts& counts, const Gamma& gamma,
                               std::span<const AttributeId> attributes,
                               double eps_candset, std::size_t k,
                               std::uint64_t seed, BudgetLedger& ledger) {
  CheckClusters(counts);
  if (attributes.empty()) {
    Fail(ErrorCode::kEmptyAttributeSet, "no attributes to explain with");
  }
  CheckK(k, attributes.size());
  if (!(eps_candset > 0)) {
    Fail(ErrorCode::kInvalidBudget, "eps_candset must be positive");
  }
  const std::size_t m = counts.num_clusters();
  const double eps_topk = eps_candset / static_cast<double>(m);
  CandidateSets sets;
  sets.by_cluster.resize(m);
  ParallelFor(m, [&](std::size_t c) {
    std::vector<double> scores;
    std::vector<RngStream> streams;
    for (AttributeId a : attributes) {
      scores.push_back(SingleClusterScore(counts, c, a, gamma));
      streams.emplace_back(seed, "cand", std::initializer_list<std::uint64_t>{c, a});
    }
    const auto picked = OneShotTopK(scores, k, eps_topk, 1.0, streams);
    for (std::size_t i : picked) sets.by_cluster[c].push_back(attributes[i]);
  });
  for (ClusterLabel c = 0; c < m; ++c) {
    ledger.Charge("candset/" + std::to_string(c), eps_topk);
  }
  return sets;
}

GlobalExplanation GenerateGlobalExplanation(const ClusterCounts& counts,
                                            const ExplainOptions& options,
                                            const PrivacyBudget& budget,
                                            std::uint64_t seed) {
  CheckClusters(counts);
  options.weights.Validate();
  budget.Validate();
  const auto attrs = EligibleAttributes(counts, options);
  CheckK(options.k, attrs.size());
  CheckSearchSpace(counts.num_clusters(), options.k);

  GlobalExplanation out;
  out.method = "dpclustx";
  out.seed = seed;
  out.candidates =
      SelectCandidates(counts, options.weights.DerivedGamma(), attrs,
                       budget.eps_candset, options.k, seed, out.ledger);
  const CombinationScorer scorer(counts, out.candidates, options.weights);
  out.combination = SelectCombination(
      out.candidates, budget.eps_topcomb, seed,
      [&](const AttributeCombination&, const std::vector<std::size_t>& choice) {
        return scorer.Score(choice);
      },
      &out.combinations_evaluated);
  out.ledger.Charge("topcomb", budget.eps_topcomb);
  out.clusters = ReleaseHistograms(counts, out.combination, budget.eps_hist,
                                   seed, out.ledger);
  return out;
}

GlobalExplanation TabeeExplain(const ClusterCounts& counts,
                               const ExplainOptions& options) {
  GlobalExplanation out = TabeeSelection(counts, options);
  out.clusters = ExactHistograms(counts, out.combination);
  return out;
}

GlobalExplanation DpTabeeExplain(const ClusterCounts& counts,
                                 const ExplainOptions& options,
                                 const PrivacyBudget& budget,
                                 std::uint64_t seed) {
  CheckClusters(counts);
  options.weights.Validate();
  budget.Validate();
  const auto attrs = EligibleAttributes(counts, options);
  CheckK(options.k, attrs.size());
  CheckSearchSpace(counts.num_clusters(), options.k);
  const Gamma gamma = options.weights.DerivedGamma();
  const std::size_t m = counts.num_clusters();

  GlobalExplanation out;
  out.method = "dp-tabee";
  out.seed = seed;
  SensitiveScorer scorer(counts, options.weights);
  const double eps_topk = budget.eps_candset / static_cast<double>(m);
  out.candidates.by_cluster.resize(m);
  for (ClusterLabel c = 0; c < m; ++c) {
    std::vector<double> scores;
    std::vector<RngStream> streams;
    for (AttributeId a : attrs) {
      scores.push_back(scorer.SingleCluster(c, a, gamma));
      streams.emplace_back(seed, "cand", std::initializer_list<std::uint64_t>{c, a});
    }
    for (std::size_t i : OneShotTopK(scores, options.k, eps_topk, 1.0, streams)) {
      out.candidates.by_cluster[c].push_back(attrs[i]);
    }
    out.ledger.Charge("candset/" + std::to_string(c), eps_topk);
  }
  out.combination = SelectCombination(
      out.candidates, budget.eps_topcomb, seed,
      [&](const AttributeCombination& combination,
          const std::vector<std::size_t>&) { return scorer.Quality(combination); },
      &out.combinations_evaluated);
  out.ledger.Charge("topcomb", budget.eps_topcomb);
  out.clusters = ReleaseHistograms(counts, out.combination, budget.eps_hist,
                                   seed, out.ledger);
  return out;
}

GlobalExplanation DpNaiveExplain(const ClusterCounts& counts,
                                 const ExplainOptions& options,
                                 double epsilon, std::uint64_t seed) {
  CheckClusters(counts);
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    Fail(ErrorCode::kInvalidBudget, "epsilon must be positive and finite");
  }
  const auto attrs = EligibleAttributes(counts, options);
  const std::size_t m = counts.num_clusters();
  const std::size_t num_attrs = counts.num_attributes();
  const double eps_each = epsilon / (2.0 * static_cast<double>(attrs.size()));

  BudgetLedger ledger;
  std::vector<std::vector<double>> full(num_attrs);
  std::vector<std::vector<std::vector<double>>> cluster(
      m, std::vector<std::vector<double>>(num_attrs));
  std::vector<std::vector<double>> raw_full(num_attrs);
  std::vector<std::vector<std::vector<double>>> raw_cluster(
      m, std::vector<std::vector<double>>(num_attrs));
  auto clip = [](std::vector<double> v) {
    for (double& x : v) x = std::max(x, 0.0);
    return v;
  };
  for (AttributeId a = 0; a < num_attrs; ++a) {
    const bool eligible = std::find(attrs.begin(), attrs.end(), a) != attrs.end();
    if (!eligible) {
      full[a].assign(counts.domain_size(a), 0.0);
      for (ClusterLabel c = 0; c < m; ++c) cluster[c][a] = full[a];
      continue;
    }
    RngStream rng(seed, "naive-all", {a});
    raw_full[a] = GeometricHistogram(counts.FullHistogram(a), eps_each, rng).counts;
    full[a] = clip(raw_full[a]);
    ledger.Charge("naive/all/" + std::to_string(a), eps_each);
    for (ClusterLabel c = 0; c < m; ++c) {
      RngStream crng(seed, "naive-c", {c, a});
      raw_cluster[c][a] =
          GeometricHistogram(counts.ClusterHistogram(c, a), eps_each, crng).counts;
      cluster[c][a] = clip(raw_cluster[c][a]);
      ledger.Charge("naive/cluster/" + std::to_string(c) + "/" + std::to_string(a),
                    eps_each, CompositionMode::kParallel,
                    "naive/cluster/" + std::to_string(a));
    }
  }
  ledger.Charge("naive/selection", 0, CompositionMode::kPostProcessing);

  const ClusterCounts noisy = ClusterCounts::FromHistograms(full, cluster);
  ExplainOptions noisy_options = options;
  noisy_options.attributes = attrs;
  GlobalExplanation out = TabeeSelection(noisy, noisy_options);
  out.method = "dp-naive";
  out.seed = seed;
  out.ledger = std::move(ledger);
  for (ClusterLabel c = 0; c < m; ++c) {
    const AttributeId a = out.combination[c];
    SingleClusterExplanation e;
    e.label = c;
    e.attribute = a;
    e.in_counts = raw_cluster[c][a];
    e.out_counts.resize(e.in_counts.size());
    for (std::size_t v = 0; v < e.in_counts.size(); ++v) {
      e.out_counts[v] = std::max(raw_full[a][v] - e.in_counts[v], 0.0);
    }
    out.clusters.push_back(std::move(e));
  }
  return out;
}

}  // namespace dpclustx
