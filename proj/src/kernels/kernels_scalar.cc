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

#include <cmath>
#include <cstddef>
#include <limits>

#include "dpclustx/kernels.h"

namespace dpclustx::kernels {
namespace {

double WeightedAbsDiffSum(const double* a, double wa, const double* b,
                          double wb, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    lane[i % 4] += std::fabs(wa * a[i] - wb * b[i]);
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double SufficiencySum(const double* cluster, const double* total,
                      std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    if (cluster[i] > 0.0) lane[i % 4] += cluster[i] * cluster[i] / total[i];
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void NearestCenter(const ValueIndex* const* columns, std::size_t dims,
                   std::size_t n, const double* centers,
                   std::size_t num_centers, ClusterLabel* out) {
  for (std::size_t r = 0; r < n; ++r) {
    double best = std::numeric_limits<double>::infinity();
    ClusterLabel best_label = 0;
    for (std::size_t j = 0; j < num_centers; ++j) {
      const double* center = centers + j * dims;
      double acc = 0.0;
      for (std::size_t a = 0; a < dims; ++a) {
        const double d = static_cast<double>(columns[a][r]) - center[a];
        acc += d * d;
      }
      if (acc < best) {
        best = acc;
        best_label = static_cast<ClusterLabel>(j);
      }
    }
    out[r] = best_label;
  }
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{"scalar", &WeightedAbsDiffSum,
                                 &SufficiencySum, &NearestCenter};
  return table;
}

}  // namespace dpclustx::kernels
