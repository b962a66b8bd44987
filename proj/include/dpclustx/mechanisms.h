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

#ifndef DPCLUSTX_MECHANISMS_H_
#define DPCLUSTX_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dpclustx/dataset.h"
#include "dpclustx/rng.h"

namespace dpclustx {

// Gumbel(scale) sample, -scale * ln(-ln u), with CDF exp(-exp(-x / scale)).
double Gumbel(double scale, RngStream& rng);
double GumbelFromUniform(double scale, double u);

// Streaming Gumbel-max selection: feeding every candidate's score once
// selects candidate r with probability proportional to
// exp(epsilon * score_r / (2 * sensitivity)). Equal noisy scores keep the
// earlier candidate.
class GumbelMaxSelector {
 public:
  GumbelMaxSelector(double epsilon, double sensitivity);

  void Offer(std::size_t candidate, double score, RngStream& rng);

  bool empty() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t best() const;
  double best_noisy_score() const { return best_noisy_; }

 private:
  double scale_;
  std::size_t count_ = 0;
  std::size_t best_ = 0;
  double best_noisy_ = -std::numeric_limits<double>::infinity();
};

// Exponential mechanism over scores[0..m), implemented by Gumbel-max.
std::size_t ExponentialMechanism(std::span<const double> scores,
                                 double epsilon, double sensitivity,
                                 RngStream& rng);

// One-shot top-k: adds Gumbel(2 * sensitivity * k / epsilon) to every score
// and returns the indices of the k largest noisy scores, best first.
std::vector<std::size_t> OneShotTopK(std::span<const double> scores,
                                     std::size_t k, double epsilon,
                                     double sensitivity, RngStream& rng);
// Same, drawing candidate i's noise from streams[i].
std::vector<std::size_t> OneShotTopK(std::span<const double> scores,
                                     std::size_t k, double epsilon,
                                     double sensitivity,
                                     std::span<RngStream> streams);

// Two-sided geometric noise: P(Z = z) proportional to exp(-epsilon)^|z|.
std::int64_t TwoSidedGeometric(double epsilon, RngStream& rng);

// epsilon-DP release of a count histogram (unit L1 sensitivity): every bin
// receives independent two-sided geometric noise. Bins may go negative.
Histogram GeometricHistogram(const Histogram& exact, double epsilon,
                             RngStream& rng);

}  // namespace dpclustx

#endif  // DPCLUSTX_MECHANISMS_H_
