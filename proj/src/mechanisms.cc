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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dpclustx/error.h"

namespace dpclustx {
namespace {

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0)) {
    Fail(ErrorCode::kNonPositiveEpsilon,
         "epsilon must be positive, got " + std::to_string(epsilon));
  }
}

void CheckSensitivity(double sensitivity) {
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    Fail(ErrorCode::kNonPositiveScale,
         "sensitivity must be positive, got " + std::to_string(sensitivity));
  }
}

template <typename NoiseFn>
std::vector<std::size_t> NoisyTopK(std::span<const double> scores,
                                   std::size_t k, NoiseFn&& noise) {
  if (scores.empty()) {
    Fail(ErrorCode::kEmptyCandidateSet, "no candidates to select from");
  }
  if (k == 0 || k > scores.size()) {
    Fail(ErrorCode::kKTooLarge, "k = " + std::to_string(k) + " with " +
                                    std::to_string(scores.size()) +
                                    " candidates");
  }
  std::vector<double> noisy(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    noisy[i] = scores[i] + noise(i);
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return noisy[a] > noisy[b];
  });
  order.resize(k);
  return order;
}

}  // namespace

double GumbelFromUniform(double scale, double u) {
  if (!(scale > 0)) {
    Fail(ErrorCode::kNonPositiveScale,
         "Gumbel scale must be positive, got " + std::to_string(scale));
  }
  return -scale * std::log(-std::log(u));
}

double Gumbel(double scale, RngStream& rng) {
  return GumbelFromUniform(scale, rng.Uniform());
}

GumbelMaxSelector::GumbelMaxSelector(double epsilon, double sensitivity) {
  CheckEpsilon(epsilon);
  CheckSensitivity(sensitivity);
  scale_ = 2.0 * sensitivity / epsilon;
}

void GumbelMaxSelector::Offer(std::size_t candidate, double score,
                              RngStream& rng) {
  const double noisy = score + Gumbel(scale_, rng);
  if (count_ == 0 || noisy > best_noisy_) {
    best_noisy_ = noisy;
    best_ = candidate;
  }
  ++count_;
}

std::size_t GumbelMaxSelector::best() const {
  if (count_ == 0) {
    Fail(ErrorCode::kEmptyCandidateSet, "no candidates were offered");
  }
  return best_;
}

std::size_t ExponentialMechanism(std::span<const double> scores,
                                 double epsilon, double sensitivity,
                                 RngStream& rng) {
  if (scores.empty()) {
    Fail(ErrorCode::kEmptyCandidateSet, "no candidates to select from");
  }
  GumbelMaxSelector selector(epsilon, sensitivity);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    selector.Offer(i, scores[i], rng);
  }
  return selector.best();
}

std::vector<std::size_t> OneShotTopK(std::span<const double> scores,
                                     std::size_t k, double epsilon,
                                     double sensitivity, RngStream& rng) {
  CheckEpsilon(epsilon);
  CheckSensitivity(sensitivity);
  const double scale = 2.0 * sensitivity * static_cast<double>(k) / epsilon;
  return NoisyTopK(scores, k, [&](std::size_t) { return Gumbel(scale, rng); });
}

std::vector<std::size_t> OneShotTopK(std::span<const double> scores,
                                     std::size_t k, double epsilon,
                                     double sensitivity,
                                     std::span<RngStream> streams) {
  CheckEpsilon(epsilon);
  CheckSensitivity(sensitivity);
  if (streams.size() != scores.size()) {
    Fail(ErrorCode::kLengthMismatch, "one noise stream per candidate required");
  }
  const double scale = 2.0 * sensitivity * static_cast<double>(k) / epsilon;
  return NoisyTopK(scores, k,
                   [&](std::size_t i) { return Gumbel(scale, streams[i]); });
}

std::int64_t TwoSidedGeometric(double epsilon, RngStream& rng) {
  CheckEpsilon(epsilon);
  // Difference of two geometric variables on {0, 1, ...} with success
  // probability 1 - exp(-epsilon); floor(ln u / ln alpha) samples one.
  auto draw = [&] {
    const double g = std::floor(std::log(rng.Uniform()) / -epsilon);
    return static_cast<std::int64_t>(g);
  };
  const std::int64_t a = draw();
  const std::int64_t b = draw();
  return a - b;
}

Histogram GeometricHistogram(const Histogram& exact, double epsilon,
                             RngStream& rng) {
  CheckEpsilon(epsilon);
  Histogram noisy{exact.attribute, exact.counts};
  for (double& count : noisy.counts) {
    count += static_cast<double>(TwoSidedGeometric(epsilon, rng));
  }
  return noisy;
}

}  // namespace dpclustx
