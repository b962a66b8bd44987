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

#ifndef DPCLUSTX_TESTS_TEST_UTIL_H_
#define DPCLUSTX_TESTS_TEST_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dpclustx/counts.h"
#include "dpclustx/dataset.h"
#include "dpclustx/schema.h"

namespace dpclustx::testing {

struct Instance {
  Dataset data;
  ClusterPartition partition;

  ClusterCounts Counts() const {
    return ClusterCounts::Build(data, partition);
  }
};

// Random small instance: |C| in [1, max_clusters], |A| in [1, max_attrs],
// domain sizes in [1, max_domain], |D| in [min_rows, max_rows].
Instance RandomInstance(std::mt19937_64& rng, std::size_t max_clusters = 6,
                        std::size_t max_attrs = 6, std::size_t max_domain = 8,
                        std::size_t min_rows = 0, std::size_t max_rows = 50);

// Planted instance: rows are dealt to clusters (sizes skewed when
// `imbalanced`); attribute j < num_clusters is the indicator "row lies in
// cluster j"; the remaining attributes are uniform noise over domains of
// size 3 to 6.
Instance PlantedInstance(std::uint64_t seed, std::size_t num_clusters = 5,
                         std::size_t num_attrs = 10, std::size_t rows = 5000,
                         bool imbalanced = false);

// A fresh empty directory under the system temp directory.
std::string TempDir(const std::string& name);

}  // namespace dpclustx::testing

#endif  // DPCLUSTX_TESTS_TEST_UTIL_H_
