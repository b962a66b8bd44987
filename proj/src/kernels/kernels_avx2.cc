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
#include <vector>

#include "dpclustx/kernels.h"

#if defined(__x86_64__) || defined(_M_X64)
#define DPCLUSTX_HAVE_AVX2 1
#include <immintrin.h>
#else
#define DPCLUSTX_HAVE_AVX2 0
#endif

namespace dpclustx::kernels {

#if DPCLUSTX_HAVE_AVX2
namespace {

#define DPCLUSTX_AVX2 __attribute__((target("avx2")))

DPCLUSTX_AVX2 inline __m256d Abs(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

DPCLUSTX_AVX2 double WeightedAbsDiffSum(const double* a, double wa,
                                        const double* b, double wb,
                                        std::size_t n) {
  const __m256d va = _mm256_set1_pd(wa);
  const __m256d vb = _mm256_set1_pd(wb);
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d x = _mm256_mul_pd(va, _mm256_loadu_pd(a + i));
    const __m256d y = _mm256_mul_pd(vb, _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, Abs(_mm256_sub_pd(x, y)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = n4; i < n; ++i) {
    lane[i - n4] += std::fabs(wa * a[i] - wb * b[i]);
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

DPCLUSTX_AVX2 double SufficiencySum(const double* cluster, const double* total,
                                    std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d c = _mm256_loadu_pd(cluster + i);
    const __m256d t = _mm256_loadu_pd(total + i);
    const __m256d positive = _mm256_cmp_pd(c, zero, _CMP_GT_OQ);
    // Lanes with c == 0 may divide by zero; they are masked out below.
    const __m256d term = _mm256_div_pd(_mm256_mul_pd(c, c), t);
    acc = _mm256_add_pd(acc, _mm256_and_pd(positive, term));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = n4; i < n; ++i) {
    if (cluster[i] > 0.0) lane[i - n4] += cluster[i] * cluster[i] / total[i];
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

DPCLUSTX_AVX2 void NearestCenter(const ValueIndex* const* columns,
                                 std::size_t dims, std::size_t n,
                                 const double* centers,
                                 std::size_t num_centers, ClusterLabel* out) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t r = 0; r < n4; r += 4) {
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d best_label = _mm256_setzero_pd();
    for (std::size_t j = 0; j < num_centers; ++j) {
      const double* center = centers + j * dims;
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t a = 0; a < dims; ++a) {
        const __m128i codes = _mm_loadu_si128(
            reinterpret_cast<const __m128i*>(columns[a] + r));
        const __m256d x = _mm256_cvtepi32_pd(codes);
        const __m256d d = _mm256_sub_pd(x, _mm256_set1_pd(center[a]));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
      }
      const __m256d closer = _mm256_cmp_pd(acc, best, _CMP_LT_OQ);
      best = _mm256_blendv_pd(best, acc, closer);
      best_label = _mm256_blendv_pd(
          best_label, _mm256_set1_pd(static_cast<double>(j)), closer);
    }
    alignas(32) double labels[4];
    _mm256_store_pd(labels, best_label);
    for (int k = 0; k < 4; ++k) out[r + k] = static_cast<ClusterLabel>(labels[k]);
  }
  if (n4 < n) {
    std::vector<const ValueIndex*> tail(dims);
    for (std::size_t a = 0; a < dims; ++a) tail[a] = columns[a] + n4;
    ScalarKernels().nearest_center(tail.data(), dims, n - n4, centers,
                                   num_centers, out + n4);
  }
}

#undef DPCLUSTX_AVX2

bool CpuHasAvx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

}  // namespace

const KernelTable* Avx2Kernels() {
  static const KernelTable table{"avx2", &WeightedAbsDiffSum, &SufficiencySum,
                                 &NearestCenter};
  static const bool supported = CpuHasAvx2();
  return supported ? &table : nullptr;
}

#else

const KernelTable* Avx2Kernels() { return nullptr; }

#endif

}  // namespace dpclustx::kernels
