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

#include "dpclustx/dataset.h"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "dpclustx/csv.h"
#include "dpclustx/error.h"
#include "dpclustx/io.h"

namespace dpclustx {

double Histogram::Total() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

Dataset::Dataset(Schema schema, std::vector<std::vector<ValueIndex>> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
  if (columns_.size() != schema_.size()) {
    Fail(ErrorCode::kLengthMismatch,
         "expected " + std::to_string(schema_.size()) + " columns, got " +
             std::to_string(columns_.size()));
  }
  size_ = columns_.empty() ? 0 : columns_.front().size();
  for (AttributeId id = 0; id < columns_.size(); ++id) {
    if (columns_[id].size() != size_) {
      Fail(ErrorCode::kLengthMismatch,
           "column '" + schema_.attribute(id).name + "' has " +
               std::to_string(columns_[id].size()) + " rows, expected " +
               std::to_string(size_));
    }
    const std::size_t domain = schema_.domain_size(id);
    for (ValueIndex v : columns_[id]) {
      if (v >= domain) {
        Fail(ErrorCode::kUnknownCategory,
             "value index " + std::to_string(v) + " outside domain of '" +
                 schema_.attribute(id).name + "'");
      }
    }
  }
}

std::span<const ValueIndex> Dataset::column(AttributeId id) const {
  if (id >= columns_.size()) {
    Fail(ErrorCode::kUnknownAttribute,
         "attribute id " + std::to_string(id) + " out of range");
  }
  return columns_[id];
}

Dataset Dataset::WithRow(std::span<const ValueIndex> tuple) const {
  if (tuple.size() != columns_.size()) {
    Fail(ErrorCode::kLengthMismatch, "tuple arity does not match schema");
  }
  auto columns = columns_;
  for (std::size_t a = 0; a < columns.size(); ++a) {
    columns[a].push_back(tuple[a]);
  }
  return Dataset(schema_, std::move(columns));
}

Dataset Dataset::WithoutRow(RowIndex row) const {
  if (row >= size_) {
    Fail(ErrorCode::kInvalidArgument, "row index out of range");
  }
  auto columns = columns_;
  for (auto& column : columns) column.erase(column.begin() + row);
  return Dataset(schema_, std::move(columns));
}

Dataset ParseCsv(std::string_view text, const Schema& schema,
                 const LoadOptions& options, LoadStats* stats) {
  CsvReader reader(text);
  std::vector<std::string> header;
  if (!reader.Next(header)) {
    Fail(ErrorCode::kParseError, "missing header row");
  }
  std::vector<std::size_t> position(schema.size());
  for (AttributeId id = 0; id < schema.size(); ++id) {
    const std::string& name = schema.attribute(id).name;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) {
        found = i;
        break;
      }
    }
    if (!found) Fail(ErrorCode::kMissingColumn, "no column '" + name + "'");
    position[id] = *found;
  }

  std::vector<std::vector<ValueIndex>> columns(schema.size());
  std::vector<ValueIndex> tuple(schema.size());
  std::vector<std::string> fields;
  LoadStats local;
  while (reader.Next(fields)) {
    ++local.rows_read;
    if (fields.size() != header.size()) {
      Fail(ErrorCode::kParseError,
           "line " + std::to_string(reader.record_line()) + ": expected " +
               std::to_string(header.size()) + " fields, found " +
               std::to_string(fields.size()));
    }
    bool rejected = false;
    for (AttributeId id = 0; id < schema.size() && !rejected; ++id) {
      std::optional<ValueIndex> index;
      try {
        index = schema.Bin(id, fields[position[id]]);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(reader.record_line()) +
                                  ", column '" + schema.attribute(id).name +
                                  "': " + e.detail());
      }
      if (!index) {
        rejected = true;
      } else {
        tuple[id] = *index;
      }
    }
    if (rejected) {
      ++local.rows_rejected;
      continue;
    }
    for (AttributeId id = 0; id < schema.size(); ++id) {
      columns[id].push_back(tuple[id]);
    }
  }
  if (local.rows_rejected > 0 &&
      static_cast<double>(local.rows_rejected) >
          options.max_rejected_fraction * static_cast<double>(local.rows_read)) {
    Fail(ErrorCode::kUnknownCategory,
         std::to_string(local.rows_rejected) + " of " +
             std::to_string(local.rows_read) +
             " rows fell outside their declared domains");
  }
  if (stats != nullptr) *stats = local;
  return Dataset(schema, std::move(columns));
}

Dataset LoadCsv(const std::string& path, const Schema& schema,
                const LoadOptions& options, LoadStats* stats) {
  return ParseCsv(ReadFile(path), schema, options, stats);
}

ClusterPartition::ClusterPartition(std::size_t num_clusters,
                                   std::vector<ClusterLabel> labels)
    : labels_(std::move(labels)), members_(num_clusters) {
  for (RowIndex row = 0; row < labels_.size(); ++row) {
    const ClusterLabel c = labels_[row];
    if (c >= num_clusters) {
      Fail(ErrorCode::kLabelOutOfRange,
           "row " + std::to_string(row) + " has label " + std::to_string(c) +
               " but only " + std::to_string(num_clusters) + " clusters");
    }
    members_[c].push_back(row);
  }
}

std::span<const RowIndex> ClusterPartition::members(ClusterLabel c) const {
  if (c >= members_.size()) {
    Fail(ErrorCode::kLabelOutOfRange,
         "cluster label " + std::to_string(c) + " out of range");
  }
  return members_[c];
}

std::vector<std::size_t> ClusterPartition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

Histogram ComputeHistogram(const Dataset& data, AttributeId attribute) {
  auto column = data.column(attribute);
  Histogram h{attribute,
              std::vector<double>(data.schema().domain_size(attribute), 0.0)};
  for (ValueIndex v : column) h.counts[v] += 1.0;
  return h;
}

Histogram ComputeHistogram(const Dataset& data, AttributeId attribute,
                           std::span<const RowIndex> rows) {
  auto column = data.column(attribute);
  Histogram h{attribute,
              std::vector<double>(data.schema().domain_size(attribute), 0.0)};
  for (RowIndex r : rows) {
    if (r >= column.size()) {
      Fail(ErrorCode::kInvalidArgument, "row index out of range");
    }
    h.counts[column[r]] += 1.0;
  }
  return h;
}

ClusterHistogramSet ClusterHistograms(const Dataset& data,
                                      const ClusterPartition& partition,
                                      AttributeId attribute) {
  if (partition.num_rows() != data.size()) {
    Fail(ErrorCode::kLengthMismatch, "partition does not match dataset size");
  }
  ClusterHistogramSet out;
  out.full = ComputeHistogram(data, attribute);
  out.per_cluster.reserve(partition.num_clusters());
  for (ClusterLabel c = 0; c < partition.num_clusters(); ++c) {
    out.per_cluster.push_back(
        ComputeHistogram(data, attribute, partition.members(c)));
  }
  return out;
}

}  // namespace dpclustx
