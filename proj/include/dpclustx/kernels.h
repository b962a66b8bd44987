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

#ifndef DPCLUSTX_KERNELS_H_
#define DPCLUSTX_KERNELS_H_

#include <cstddef>
#include <string_view>

#include "dpclustx/dataset.h"
#include "dpclustx/schema.h"

// Arithmetic inner loops behind the quality functions and center-based
// assignment. Every kernel has a portable scalar reference; vector variants
// reproduce the reference bit for bit. Reductions use a fixed four-lane
// interleaving (element i feeds lane i % 4; lanes combine as
// (l0 + l1) + (l2 + l3)) so results do not depend on which table is active.
namespace dpclustx::kernels {

struct KernelTable {
  std::string_view name;

  // sum_i |wa * a[i] - wb * b[i]|
  double (*weighted_abs_diff_sum)(const double* a, double wa, const double* b,
                                  double wb, std::size_t n);

  // sum over i with cluster[i] > 0 of cluster[i]^2 / total[i]. Callers
  // guarantee total[i] >= cluster[i] wherever cluster[i] > 0.
  double (*sufficiency_sum)(const double* cluster, const double* total,
                            std::size_t n);

  // For each of the first n rows, the index of the center at the smallest
  // squared Euclidean distance from the row's domain-index embedding; ties go
  // to the lowest index. `centers` is row-major [num_centers x dims].
  void (*nearest_center)(const ValueIndex* const* columns, std::size_t dims,
                         std::size_t n, const double* centers,
                         std::size_t num_centers, ClusterLabel* out);
};

const KernelTable& ScalarKernels();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* Avx2Kernels();

// The table used by the library. Chosen once from CPU features; the
// DPCLUSTX_SIMD environment variable ("scalar" or "avx2") overrides.
const KernelTable& ActiveKernels();

// Forces a table by name. Returns false if it is unavailable.
bool SelectKernels(std::string_view name);

}  // namespace dpclustx::kernels

#endif  // DPCLUSTX_KERNELS_H_
