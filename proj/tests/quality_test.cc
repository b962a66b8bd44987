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
#include <random>
#include <vector>

#include "dpclustx/error.h"
#include "dpclustx/eval.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpclustx {
namespace {

constexpr double kTol = 1e-9;

Histogram H(std::vector<double> counts, AttributeId a = 0) {
  return Histogram{a, std::move(counts)};
}

TEST(InterestingnessTest, Examples) {
  EXPECT_DOUBLE_EQ(InterestingnessP(H({3, 1}), H({3, 1}), 4, 4), 0.0);
  EXPECT_DOUBLE_EQ(InterestingnessP(H({3, 1}), H({1, 1}), 4, 2), 0.5);
  EXPECT_DOUBLE_EQ(InterestingnessP(H({3, 1}), H({0, 0}), 4, 0), 0.0);
  EXPECT_DOUBLE_EQ(InterestingnessP(H({0, 0}), H({0, 0}), 0, 0), 0.0);
}

TEST(InterestingnessTest, DomainMismatch) {
  try {
    InterestingnessP(H({3, 1}), H({1, 1, 0}), 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainMismatch);
  }
}

TEST(SufficiencyTest, Examples) {
  EXPECT_DOUBLE_EQ(SufficiencyP(H({2, 3}), H({2, 3})), 5.0);
  EXPECT_DOUBLE_EQ(SufficiencyP(H({4}), H({2})), 1.0);
  EXPECT_DOUBLE_EQ(SufficiencyP(H({4, 1}), H({0, 0})), 0.0);
  try {
    SufficiencyP(H({1}), H({2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCountInversion);
  }
}

TEST(PairDiversityTest, Examples) {
  EXPECT_DOUBLE_EQ(PairDiversity(H({1, 1}, 0), H({3}, 1), 2, 3), 2.0);
  EXPECT_DOUBLE_EQ(PairDiversity(H({1, 1}), H({2, 2}), 2, 4), 0.0);
  EXPECT_DOUBLE_EQ(PairDiversity(H({2, 0}), H({0, 3}), 2, 3), 2.0);
  try {
    PairDiversity(H({2, 0}), H({0, 3, 0}), 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainMismatch);
  }
}

// Two clusters over one binary attribute x and a second attribute y.
// Full x = [3, 1]; cluster 0 x = [1, 1]; cluster 1 x = [2, 0].
testing::Instance SmallInstance() {
  const Schema schema = MakeIndexSchema({"x", "y"}, {2, 2});
  testing::Instance inst{Dataset(schema, {{0, 1, 0, 0}, {0, 0, 1, 1}}), {}};
  inst.partition = ClusterPartition(2, {0, 0, 1, 1});
  return inst;
}

TEST(SingleClusterScoreTest, Examples) {
  const auto counts = SmallInstance().Counts();
  // Int_p = 0.5 and Suf_p = 1/3 + 1 for cluster 0 on x.
  EXPECT_DOUBLE_EQ(SingleClusterScore(counts, 0, 0, Gamma{1, 0}), 0.5);
  EXPECT_NEAR(SingleClusterScore(counts, 0, 0, Gamma{0.5, 0.5}),
              0.5 * 0.5 + 0.5 * (1.0 / 3 + 1.0), kTol);
  const auto empty_counts =
      ClusterCounts::Build(SmallInstance().data, ClusterPartition(3, {0, 0, 1, 1}));
  EXPECT_DOUBLE_EQ(SingleClusterScore(empty_counts, 2, 0, Gamma{0.5, 0.5}), 0);
}

TEST(SingleClusterScoreTest, LinearCombination) {
  const double int_p = 0.5, suf_p = 1.0;
  const Gamma g{0.5, 0.5};
  EXPECT_DOUBLE_EQ(g.interestingness * int_p + g.sufficiency * suf_p, 0.75);
}

TEST(GlobalScoreTest, DirectEvaluation) {
  const auto counts = SmallInstance().Counts();
  const AttributeCombination ac{{0, 0}};
  const double int0 = InterestingnessP(counts.FullHistogram(0),
                                       counts.ClusterHistogram(0, 0), 4, 2);
  const double int1 = InterestingnessP(counts.FullHistogram(0),
                                       counts.ClusterHistogram(1, 0), 4, 2);
  const double suf0 = SufficiencyP(counts.FullHistogram(0), counts.ClusterHistogram(0, 0));
  const double suf1 = SufficiencyP(counts.FullHistogram(0), counts.ClusterHistogram(1, 0));
  const double div = PairDiversity(counts.ClusterHistogram(0, 0),
                                   counts.ClusterHistogram(1, 0), 2, 2);
  const WeightParams w;
  const double expected = ((int0 + int1) / 2 + (suf0 + suf1) / 2 + div) / 3;
  EXPECT_NEAR(GlobalScore(counts, ac, w), expected, kTol);
  EXPECT_NEAR(GlobalDiversity(counts, ac), div, kTol);
}

TEST(GlobalScoreTest, FrozenEqualWeights) {
  // Component means 0.5, 1.0 and diversity 2.0 under equal weights.
  const WeightParams w;
  EXPECT_NEAR(w.interestingness * 0.5 + w.sufficiency * 1.0 + w.diversity * 2.0,
              1.1667, 1e-4);
}

TEST(GlobalScoreTest, NoDiversityWeightIsMeanSingleScore) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng);
    const auto counts = inst.Counts();
    AttributeCombination ac;
    for (std::size_t c = 0; c < counts.num_clusters(); ++c) {
      ac.by_cluster.push_back(rng() % counts.num_attributes());
    }
    const WeightParams w{0.3, 0.7, 0.0};
    double mean = 0;
    for (ClusterLabel c = 0; c < ac.size(); ++c) {
      mean += SingleClusterScore(counts, c, ac[c], w.DerivedGamma());
    }
    mean /= static_cast<double>(ac.size());
    EXPECT_NEAR(GlobalScore(counts, ac, w), mean, kTol);
  }
}

TEST(GlobalDiversityTest, SingleClusterIsZero) {
  const Schema schema = MakeIndexSchema({"x"}, {2});
  const Dataset d(schema, {{0, 1}});
  const auto counts = ClusterCounts::Build(d, ClusterPartition(1, {0, 0}));
  EXPECT_DOUBLE_EQ(GlobalDiversity(counts, AttributeCombination{{0}}), 0.0);
}

TEST(GlobalDiversityTest, DistinctAttributesReachRange) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = testing::RandomInstance(rng, 6, 6);
    const auto counts = inst.Counts();
    if (counts.num_attributes() < counts.num_clusters()) continue;
    AttributeCombination ac;
    for (std::size_t c = 0; c < counts.num_clusters(); ++c) ac.by_cluster.push_back(c);
    const auto range = ScoreRanges(counts.cluster_sizes(), WeightParams{});
    EXPECT_NEAR(GlobalDiversity(counts, ac), range.r_div, kTol);
  }
}

TEST(GlobalDiversityTest, IdenticalClustersSameAttributeIsZero) {
  const Schema schema = MakeIndexSchema({"x"}, {2});
  const Dataset d(schema, {{0, 1, 0, 1, 0, 1}});
  const auto counts = ClusterCounts::Build(d, ClusterPartition(3, {0, 0, 1, 1, 2, 2}));
  EXPECT_DOUBLE_EQ(GlobalDiversity(counts, AttributeCombination{{0, 0, 0}}), 0.0);
}

TEST(ScoreRangesTest, Examples) {
  const std::vector<double> sizes = {3, 2};
  EXPECT_DOUBLE_EQ(ScoreRanges(sizes, WeightParams{}).r_div, 2.0);
  for (std::size_t m = 2; m <= 6; ++m) {
    const std::vector<double> equal(m, 7.0);
    EXPECT_NEAR(ScoreRanges(equal, WeightParams{}).r_div, 7.0, kTol) << m;
  }
  const std::vector<double> mixed = {1, 5, 9};
  EXPECT_DOUBLE_EQ(ScoreRanges(mixed, WeightParams{0.5, 0.5, 0}).r_glscore, 5.0);
  const std::vector<double> one = {4};
  EXPECT_DOUBLE_EQ(ScoreRanges(one, WeightParams{}).r_div, 0.0);
}

TEST(WeightParamsTest, ValidationAndGamma) {
  EXPECT_NO_THROW(WeightParams{}.Validate());
  EXPECT_THROW((WeightParams{0.5, 0.5, 0.5}.Validate()), Error);
  EXPECT_THROW((WeightParams{-0.5, 1.0, 0.5}.Validate()), Error);
  const Gamma g = WeightParams{0.2, 0.6, 0.2}.DerivedGamma();
  EXPECT_NEAR(g.sufficiency, 0.75, kTol);
  EXPECT_NEAR(g.interestingness, 0.25, kTol);
  const Gamma even = WeightParams{0, 0, 1}.DerivedGamma();
  EXPECT_DOUBLE_EQ(even.sufficiency, 0.5);
}

TEST(QualityIdentityTest, InterestingnessIsSizeTimesTvd) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto counts = testing::RandomInstance(rng, 6, 6, 8, 1).Counts();
    for (ClusterLabel c = 0; c < counts.num_clusters(); ++c) {
      if (counts.cluster_size(c) == 0) continue;
      for (AttributeId a = 0; a < counts.num_attributes(); ++a) {
        EXPECT_NEAR(InterestingnessP(counts.full(a), counts.cluster(c, a),
                                     counts.num_rows(), counts.cluster_size(c)),
                    counts.cluster_size(c) *
                        Tvd(counts.full(a), counts.cluster(c, a)),
                    kTol);
      }
    }
  }
}

TEST(QualityIdentityTest, RankingMatchesTvd) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto counts = testing::RandomInstance(rng, 6, 6, 8, 1).Counts();
    for (ClusterLabel c = 0; c < counts.num_clusters(); ++c) {
      if (counts.cluster_size(c) == 0) continue;
      for (AttributeId a = 0; a < counts.num_attributes(); ++a) {
        for (AttributeId b = 0; b < counts.num_attributes(); ++b) {
          const double ta = Tvd(counts.full(a), counts.cluster(c, a));
          const double tb = Tvd(counts.full(b), counts.cluster(c, b));
          if (std::fabs(ta - tb) < 1e-9) continue;
          const double ia = InterestingnessP(counts.full(a), counts.cluster(c, a),
                                             counts.num_rows(), counts.cluster_size(c));
          const double ib = InterestingnessP(counts.full(b), counts.cluster(c, b),
                                             counts.num_rows(), counts.cluster_size(c));
          EXPECT_EQ(ta < tb, ia < ib);
        }
      }
    }
  }
}

// Neighbouring-dataset fuzz for the low-sensitivity functions in both the
// addition and the removal direction.
TEST(SensitivityTest, AllFunctionsMoveByAtMostOne) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = testing::RandomInstance(rng, 6, 6, 8, 1);
    const std::size_t m = inst.partition.num_clusters();
    std::vector<ValueIndex> tuple;
    for (AttributeId a = 0; a < inst.data.num_attributes(); ++a) {
      tuple.push_back(rng() % inst.data.schema().domain_size(a));
    }
    const auto label = static_cast<ClusterLabel>(rng() % m);
    std::vector<ClusterLabel> labels(inst.partition.labels().begin(),
                                     inst.partition.labels().end());
    labels.push_back(label);
    const auto before = inst.Counts();
    const auto after = ClusterCounts::Build(inst.data.WithRow(tuple),
                                            ClusterPartition(m, labels));
    AttributeCombination ac;
    for (std::size_t c = 0; c < m; ++c) {
      ac.by_cluster.push_back(rng() % inst.data.num_attributes());
    }
    const WeightParams w{0.2, 0.5, 0.3};
    EXPECT_LE(std::fabs(GlobalScore(before, ac, w) - GlobalScore(after, ac, w)),
              1 + kTol);
    for (ClusterLabel c = 0; c < m; ++c) {
      const AttributeId a = ac[c];
      const auto delta = [&](auto fn) { return std::fabs(fn(before) - fn(after)); };
      EXPECT_LE(delta([&](const ClusterCounts& k) {
                  return InterestingnessP(k.full(a), k.cluster(c, a),
                                          k.num_rows(), k.cluster_size(c));
                }),
                1 + kTol);
      EXPECT_LE(delta([&](const ClusterCounts& k) {
                  return SufficiencyP(k.full(a), k.cluster(c, a));
                }),
                1 + kTol);
      for (ClusterLabel d = 0; d < m; ++d) {
        EXPECT_LE(delta([&](const ClusterCounts& k) {
                    return PairDiversity(k.cluster(c, a), k.cluster(d, ac[d]),
                                         k.cluster_size(c), k.cluster_size(d),
                                         a, ac[d]);
                  }),
                  1 + kTol);
      }
    }
  }
}

}  // namespace
}  // namespace dpclustx
