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

#include "dpclustx/counts.h"

#include <cstdint>
#include <numeric>
#include <string>

#include "dpclustx/error.h"
#include "dpclustx/parallel.h"

namespace dpclustx {

ClusterCounts ClusterCounts::Build(const Dataset& data,
                                   const ClusterPartition& partition) {
  if (partition.num_rows() != data.size()) {
    Fail(ErrorCode::kLengthMismatch,
         "partition covers " + std::to_string(partition.num_rows()) +
             " rows but the dataset has " + std::to_string(data.size()));
  }
  const std::size_t num_clusters = partition.num_clusters();
  ClusterCounts out;
  out.num_rows_ = static_cast<double>(data.size());
  out.cluster_sizes_.resize(num_clusters);
  for (ClusterLabel c = 0; c < num_clusters; ++c) {
    out.cluster_sizes_[c] = static_cast<double>(partition.cluster_size(c));
  }
  out.attributes_.resize(data.num_attributes());
  const auto labels = partition.labels();
  ParallelFor(data.num_attributes(), [&](std::size_t a) {
    const std::size_t dom = data.schema().domain_size(a);
    const auto column = data.column(a);
    std::vector<std::uint64_t> joint(num_clusters * dom, 0);
    for (std::size_t r = 0; r < column.size(); ++r) {
      ++joint[labels[r] * dom + column[r]];
    }
    AttributeCounts& counts = out.attributes_[a];
    counts.domain_size = dom;
    counts.joint.assign(joint.begin(), joint.end());
    counts.full.assign(dom, 0.0);
    for (std::size_t c = 0; c < num_clusters; ++c) {
      for (std::size_t v = 0; v < dom; ++v) {
        counts.full[v] += counts.joint[c * dom + v];
      }
    }
  });
  return out;
}

ClusterCounts ClusterCounts::FromHistograms(
    std::vector<std::vector<double>> full,
    const std::vector<std::vector<std::vector<double>>>& cluster) {
  ClusterCounts out;
  const std::size_t num_clusters = cluster.size();
  out.attributes_.resize(full.size());
  for (AttributeId a = 0; a < full.size(); ++a) {
    AttributeCounts& counts = out.attributes_[a];
    counts.domain_size = full[a].size();
    counts.full = std::move(full[a]);
    counts.joint.reserve(num_clusters * counts.domain_size);
    for (std::size_t c = 0; c < num_clusters; ++c) {
      if (cluster[c].size() != out.attributes_.size() ||
          cluster[c][a].size() != counts.domain_size) {
        Fail(ErrorCode::kDomainMismatch,
             "cluster histogram shape does not match the full histograms");
      }
      counts.joint.insert(counts.joint.end(), cluster[c][a].begin(),
                          cluster[c][a].end());
    }
  }
  out.cluster_sizes_.assign(num_clusters, 0.0);
  if (!out.attributes_.empty()) {
    const auto& first = out.attributes_.front();
    out.num_rows_ = std::accumulate(first.full.begin(), first.full.end(), 0.0);
    for (std::size_t c = 0; c < num_clusters; ++c) {
      auto begin = first.joint.begin() + c * first.domain_size;
      out.cluster_sizes_[c] =
          std::accumulate(begin, begin + first.domain_size, 0.0);
    }
  }
  return out;
}

std::span<const double> ClusterCounts::full(AttributeId a) const {
  if (a >= attributes_.size()) {
    Fail(ErrorCode::kUnknownAttribute,
         "attribute id " + std::to_string(a) + " out of range");
  }
  return attributes_[a].full;
}

std::span<const double> ClusterCounts::cluster(ClusterLabel c,
                                               AttributeId a) const {
  if (a >= attributes_.size()) {
    Fail(ErrorCode::kUnknownAttribute,
         "attribute id " + std::to_string(a) + " out of range");
  }
  if (c >= cluster_sizes_.size()) {
    Fail(ErrorCode::kLabelOutOfRange,
         "cluster label " + std::to_string(c) + " out of range");
  }
  const auto& counts = attributes_[a];
  return std::span<const double>(counts.joint)
      .subspan(c * counts.domain_size, counts.domain_size);
}

Histogram ClusterCounts::FullHistogram(AttributeId a) const {
  auto s = full(a);
  return Histogram{a, std::vector<double>(s.begin(), s.end())};
}

Histogram ClusterCounts::ClusterHistogram(ClusterLabel c, AttributeId a) const {
  auto s = cluster(c, a);
  return Histogram{a, std::vector<double>(s.begin(), s.end())};
}

}  // namespace dpclustx
