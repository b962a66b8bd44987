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

#ifndef DPCLUSTX_COUNTS_H_
#define DPCLUSTX_COUNTS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpclustx/dataset.h"

namespace dpclustx {

// Per-attribute full-data and per-cluster histograms for every attribute,
// aggregated in one columnar pass. All quality functions read from here.
class ClusterCounts {
 public:
  static ClusterCounts Build(const Dataset& data,
                             const ClusterPartition& partition);

  // Assembles counts from already released histograms (possibly noisy):
  // full[a] over dom(a) and cluster[c][a] over dom(a). Sizes are taken from
  // the totals of attribute 0.
  static ClusterCounts FromHistograms(
      std::vector<std::vector<double>> full,
      const std::vector<std::vector<std::vector<double>>>& cluster);

  std::size_t num_clusters() const { return cluster_sizes_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  double num_rows() const { return num_rows_; }
  double cluster_size(ClusterLabel c) const { return cluster_sizes_[c]; }
  const std::vector<double>& cluster_sizes() const { return cluster_sizes_; }
  std::size_t domain_size(AttributeId a) const {
    return attributes_[a].domain_size;
  }

  std::span<const double> full(AttributeId a) const;
  std::span<const double> cluster(ClusterLabel c, AttributeId a) const;

  Histogram FullHistogram(AttributeId a) const;
  Histogram ClusterHistogram(ClusterLabel c, AttributeId a) const;

 private:
  struct AttributeCounts {
    std::size_t domain_size = 0;
    std::vector<double> full;
    std::vector<double> joint;  // [cluster * domain_size + value]
  };

  double num_rows_ = 0;
  std::vector<double> cluster_sizes_;
  std::vector<AttributeCounts> attributes_;
};

}  // namespace dpclustx

#endif  // DPCLUSTX_COUNTS_H_
