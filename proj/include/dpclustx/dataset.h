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

#ifndef DPCLUSTX_DATASET_H_
#define DPCLUSTX_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpclustx/schema.h"

namespace dpclustx {

using RowIndex = std::uint32_t;
using ClusterLabel = std::uint32_t;

// Dense count array over the full domain of one attribute. Exact histograms
// hold non-negative integers; noisy releases may hold any integer.
struct Histogram {
  AttributeId attribute = 0;
  std::vector<double> counts;

  double Total() const;
  std::size_t size() const { return counts.size(); }
};

// Columnar table of domain-value indices. Immutable once built.
class Dataset {
 public:
  Dataset() = default;
  // Takes ownership of one column per schema attribute; validates lengths
  // and that every index lies inside its domain.
  Dataset(Schema schema, std::vector<std::vector<ValueIndex>> columns);

  const Schema& schema() const { return schema_; }
  std::size_t size() const { return size_; }
  std::size_t num_attributes() const { return columns_.size(); }
  std::span<const ValueIndex> column(AttributeId id) const;

  // Returns a copy with one extra tuple appended (test helper for
  // neighbouring-dataset checks).
  Dataset WithRow(std::span<const ValueIndex> tuple) const;
  // Returns a copy with the given row removed.
  Dataset WithoutRow(RowIndex row) const;

 private:
  Schema schema_;
  std::vector<std::vector<ValueIndex>> columns_;
  std::size_t size_ = 0;
};

struct LoadOptions {
  // Under a reject-row policy, loading fails once more than this fraction of
  // data rows has been dropped.
  double max_rejected_fraction = 0.01;
};

struct LoadStats {
  std::size_t rows_read = 0;
  std::size_t rows_rejected = 0;
};

Dataset LoadCsv(const std::string& path, const Schema& schema,
                const LoadOptions& options = {}, LoadStats* stats = nullptr);
Dataset ParseCsv(std::string_view text, const Schema& schema,
                 const LoadOptions& options = {}, LoadStats* stats = nullptr);

// Disjoint per-cluster row lists covering every row.
class ClusterPartition {
 public:
  ClusterPartition() = default;
  ClusterPartition(std::size_t num_clusters, std::vector<ClusterLabel> labels);

  std::size_t num_clusters() const { return members_.size(); }
  std::size_t num_rows() const { return labels_.size(); }
  std::span<const ClusterLabel> labels() const { return labels_; }
  std::span<const RowIndex> members(ClusterLabel c) const;
  std::size_t cluster_size(ClusterLabel c) const {
    return members(c).size();
  }
  std::vector<std::size_t> sizes() const;

 private:
  std::vector<ClusterLabel> labels_;
  std::vector<std::vector<RowIndex>> members_;
};

Histogram ComputeHistogram(const Dataset& data, AttributeId attribute);
Histogram ComputeHistogram(const Dataset& data, AttributeId attribute,
                           std::span<const RowIndex> rows);

struct ClusterHistogramSet {
  std::vector<Histogram> per_cluster;
  Histogram full;
};

ClusterHistogramSet ClusterHistograms(const Dataset& data,
                                      const ClusterPartition& partition,
                                      AttributeId attribute);

}  // namespace dpclustx

#endif  // DPCLUSTX_DATASET_H_
