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

#ifndef DPCLUSTX_CLUSTERING_H_
#define DPCLUSTX_CLUSTERING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dpclustx/dataset.h"

namespace dpclustx {

// Fixed centers over the domain-index embedding of every schema attribute.
// Defines a label for every tuple of the domain, not just the stored rows.
struct CenterBased {
  std::vector<std::vector<double>> centers;
};

// Per-row labels, e.g. produced by an external clustering run. The explanation
// is only private end to end if these labels were themselves computed
// privately or independently of the data.
struct LabelTable {
  std::vector<ClusterLabel> labels;
  std::size_t num_clusters = 0;
  ClusterLabel default_label = 0;
};

class ClusteringFunction {
 public:
  explicit ClusteringFunction(CenterBased centers);
  explicit ClusteringFunction(LabelTable table);

  std::size_t num_clusters() const;
  bool is_center_based() const {
    return std::holds_alternative<CenterBased>(impl_);
  }
  const std::variant<CenterBased, LabelTable>& variant() const { return impl_; }

  // Label of an arbitrary tuple. Label tables answer with their default.
  ClusterLabel LabelOf(std::span<const ValueIndex> tuple) const;

 private:
  std::variant<CenterBased, LabelTable> impl_;
};

ClusterPartition Assign(const ClusteringFunction& f, const Dataset& data);

ClusteringFunction ParseCentersJson(std::string_view json_text);
ClusteringFunction LoadCentersFile(const std::string& path);

// Single-column CSV, one label per data row, optional non-numeric header.
// The number of clusters defaults to max label + 1.
ClusteringFunction ParseLabelsCsv(std::string_view text,
                                  std::optional<std::size_t> num_clusters = {});
ClusteringFunction LoadLabelsFile(const std::string& path,
                                  std::optional<std::size_t> num_clusters = {});

}  // namespace dpclustx

#endif  // DPCLUSTX_CLUSTERING_H_
