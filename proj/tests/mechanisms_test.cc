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

#include "dpclustx/mechanisms.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "dpclustx/error.h"
#include "dpclustx/rng.h"
#include "gtest/gtest.h"

namespace dpclustx {
namespace {

double TotalVariation(const std::map<std::vector<std::size_t>, double>& p,
                      const std::map<std::vector<std::size_t>, double>& q) {
  std::map<std::vector<std::size_t>, double> diff = p;
  for (const auto& [k, v] : q) diff[k] -= v;
  double tv = 0;
  for (const auto& [k, v] : diff) tv += std::fabs(v);
  return tv / 2;
}

TEST(RngStreamTest, ReproducibleAndDistinct) {
  RngStream a(7, "cand", {1, 2});
  RngStream b(7, "cand", {1, 2});
  RngStream c(7, "cand", {2, 1});
  RngStream d(8, "cand", {1, 2});
  for (int i = 0; i < 5; ++i) {
    const auto x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    EXPECT_NE(x, c.NextU64());
    EXPECT_NE(x, d.NextU64());
  }
  EXPECT_NE(RngStream(1, "cand", {1}).key(), RngStream(1, "cand", {1, 0}).key());
}

TEST(RngStreamTest, UniformIsOpen) {
  RngStream rng(1, "u");
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(GumbelTest, FixedPointAndScale) {
  EXPECT_NEAR(GumbelFromUniform(1.0, std::exp(-1.0)), 0.0, 1e-15);
  EXPECT_NEAR(GumbelFromUniform(3.0, std::exp(-1.0)), 0.0, 1e-15);
  RngStream a(3, "g"), b(3, "g");
  for (int i = 0; i < 100; ++i) {
    EXPECT_DOUBLE_EQ(2 * Gumbel(1.5, a), Gumbel(3.0, b));
  }
  RngStream rng(0, "g");
  EXPECT_THROW(Gumbel(0, rng), Error);
}

TEST(GumbelTest, EmpiricalCdfAtZero) {
  RngStream rng(11, "g");
  int below = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) below += Gumbel(2.0, rng) <= 0;
  EXPECT_NEAR(static_cast<double>(below) / n, std::exp(-1.0), 0.01);
}

TEST(ExponentialMechanismTest, UniformOnEqualScores) {
  RngStream rng(1, "em");
  const std::vector<double> scores(4, 3.0);
  std::vector<int> hits(4, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hits[ExponentialMechanism(scores, 1.0, 1.0, rng)];
  for (int h : hits) EXPECT_NEAR(static_cast<double>(h) / n, 0.25, 0.01);
}

TEST(ExponentialMechanismTest, TwoCandidatesClosedForm) {
  RngStream rng(2, "em");
  const std::vector<double> scores = {0, 1};
  int high = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) high += ExponentialMechanism(scores, 2.0, 1.0, rng);
  EXPECT_NEAR(static_cast<double>(high) / n, std::exp(1.0) / (1 + std::exp(1.0)),
              0.01);
}

TEST(ExponentialMechanismTest, MatchesClosedFormOnFourCandidates) {
  RngStream rng(3, "em");
  const std::vector<double> scores = {0.0, 0.7, 1.5, 2.2};
  const double eps = 1.3, delta = 0.8;
  std::vector<double> p(4);
  double z = 0;
  for (int i = 0; i < 4; ++i) z += p[i] = std::exp(eps * scores[i] / (2 * delta));
  std::vector<int> hits(4, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hits[ExponentialMechanism(scores, eps, delta, rng)];
  double tv = 0;
  for (int i = 0; i < 4; ++i) tv += std::fabs(hits[i] / double(n) - p[i] / z);
  EXPECT_LE(tv / 2, 0.01);
}

TEST(ExponentialMechanismTest, LargeEpsilonPicksArgmax) {
  RngStream rng(4, "em");
  const std::vector<double> scores = {0.3, 0.9, 0.1, 0.8};
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(ExponentialMechanism(scores, 1e6, 1.0, rng), 1u);
  }
}

TEST(ExponentialMechanismTest, Errors) {
  RngStream rng(0, "em");
  const std::vector<double> none;
  try {
    ExponentialMechanism(none, 1.0, 1.0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCandidateSet);
  }
  const std::vector<double> one = {1.0};
  EXPECT_THROW(ExponentialMechanism(one, 0.0, 1.0, rng), Error);
  EXPECT_THROW(ExponentialMechanism(one, 1.0, 0.0, rng), Error);
}

TEST(OneShotTopKTest, FullKReturnsAll) {
  RngStream rng(5, "topk");
  const std::vector<double> scores = {1, 2, 3, 4};
  auto picked = OneShotTopK(scores, 4, 1.0, 1.0, rng);
  std::sort(picked.begin(), picked.end());
  EXPECT_EQ(picked, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(OneShotTopKTest, LargeEpsilonIsExactTopK) {
  RngStream rng(6, "topk");
  const std::vector<double> scores = {0.5, 3.0, 1.0, 2.0, 0.1};
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(OneShotTopK(scores, 3, 1e6, 1.0, rng),
              (std::vector<std::size_t>{1, 3, 2}));
  }
}

TEST(OneShotTopKTest, Errors) {
  RngStream rng(0, "topk");
  const std::vector<double> scores = {1, 2};
  try {
    OneShotTopK(scores, 3, 1.0, 1.0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKTooLarge);
  }
}

// Oracle: k sequential softmax draws without replacement, each at eps / k.
std::vector<std::size_t> IteratedEm(const std::vector<double>& scores,
                                    std::size_t k, double eps, double delta,
                                    std::mt19937_64& rng) {
  std::vector<std::size_t> remaining(scores.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<std::size_t> out;
  for (std::size_t round = 0; round < k; ++round) {
    std::vector<double> w;
    for (std::size_t i : remaining) {
      w.push_back(std::exp((eps / k) * scores[i] / (2 * delta)));
    }
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    const std::size_t j = pick(rng);
    out.push_back(remaining[j]);
    remaining.erase(remaining.begin() + j);
  }
  return out;
}

TEST(OneShotTopKTest, MatchesIteratedEm) {
  std::mt19937_64 score_rng(99);
  std::uniform_real_distribution<double> score(0, 3);
  const int n = 100000;
  for (int set = 0; set < 5; ++set) {
    std::vector<double> scores = {score(score_rng), score(score_rng),
                                  score(score_rng)};
    if (set == 0) scores = {0.0, 1.0, 2.0};
    std::map<std::vector<std::size_t>, double> one_shot, iterated;
    RngStream rng(static_cast<std::uint64_t>(set), "topk");
    std::mt19937_64 oracle_rng(1000 + set);
    for (int i = 0; i < n; ++i) {
      one_shot[OneShotTopK(scores, 2, 2.0, 1.0, rng)] += 1.0 / n;
      iterated[IteratedEm(scores, 2, 2.0, 1.0, oracle_rng)] += 1.0 / n;
    }
    EXPECT_LE(TotalVariation(one_shot, iterated), 0.02) << "set " << set;
  }
}

double GeometricPmf(double eps, long z) {
  const double alpha = std::exp(-eps);
  return (1 - alpha) / (1 + alpha) * std::pow(alpha, std::labs(z));
}

TEST(GeometricTest, ZeroProbabilityAtLn2) {
  RngStream rng(12, "geo");
  const int n = 100000;
  int zeros = 0;
  for (int i = 0; i < n; ++i) zeros += TwoSidedGeometric(std::log(2.0), rng) == 0;
  EXPECT_NEAR(static_cast<double>(zeros) / n, 1.0 / 3, 0.01);
}

TEST(GeometricTest, MeanAndVariance) {
  RngStream rng(13, "geo");
  const double eps = 0.5;
  const double alpha = std::exp(-eps);
  const int n = 1000000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double z = static_cast<double>(TwoSidedGeometric(eps, rng));
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  const double expected_var = 2 * alpha / ((1 - alpha) * (1 - alpha));
  EXPECT_LE(std::fabs(mean), 3 * std::sqrt(expected_var / n));
  EXPECT_NEAR(var, expected_var, 0.05 * expected_var);
}

TEST(GeometricTest, ChiSquareGoodnessOfFit) {
  for (double eps : {0.1, std::log(2.0), 1.0}) {
    RngStream rng(14, "geo", {static_cast<std::uint64_t>(eps * 1000)});
    const int n = 100000;
    // Central bins each with expected count >= 5; tails pooled.
    long limit = 0;
    while (n * GeometricPmf(eps, limit + 1) >= 5) ++limit;
    std::map<long, double> observed;
    for (int i = 0; i < n; ++i) {
      long z = TwoSidedGeometric(eps, rng);
      z = std::clamp(z, -limit - 1, limit + 1);
      observed[z] += 1;
    }
    double stat = 0;
    double central = 0;
    for (long z = -limit; z <= limit; ++z) {
      const double expected = n * GeometricPmf(eps, z);
      central += GeometricPmf(eps, z);
      stat += std::pow(observed[z] - expected, 2) / expected;
    }
    const double tail = n * (1 - central) / 2;
    stat += std::pow(observed[-limit - 1] - tail, 2) / tail;
    stat += std::pow(observed[limit + 1] - tail, 2) / tail;
    const double dof = static_cast<double>(2 * limit + 3 - 1);
    const boost::math::chi_squared dist(dof);
    EXPECT_GT(1 - boost::math::cdf(dist, stat), 0.001) << "eps " << eps;
  }
}

TEST(GeometricTest, HistogramRelease) {
  RngStream a(1, "h"), b(1, "h");
  const Histogram h{2, {5, 0, 7}};
  const Histogram x = GeometricHistogram(h, 1.0, a);
  const Histogram y = GeometricHistogram(h, 1.0, b);
  EXPECT_EQ(x.attribute, 2u);
  EXPECT_EQ(x.counts, y.counts);
  for (double v : x.counts) EXPECT_EQ(v, std::round(v));
  try {
    GeometricHistogram(h, 0.0, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPositiveEpsilon);
  }
}

}  // namespace
}  // namespace dpclustx
