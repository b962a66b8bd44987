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

#include "dpclustx/clustering.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>

#include "dpclustx/csv.h"
#include "dpclustx/error.h"
#include "dpclustx/io.h"
#include "dpclustx/kernels.h"
#include "dpclustx/parallel.h"
#include <nlohmann/json.hpp>

namespace dpclustx {
namespace {

constexpr std::size_t kAssignChunk = 1 << 14;

}  // namespace

ClusteringFunction::ClusteringFunction(CenterBased centers)
    : impl_(std::move(centers)) {
  const auto& cs = std::get<CenterBased>(impl_).centers;
  if (cs.empty()) Fail(ErrorCode::kInvalidArgument, "no centers given");
  for (const auto& c : cs) {
    if (c.size() != cs.front().size()) {
      Fail(ErrorCode::kLengthMismatch, "centers differ in dimension");
    }
  }
}

ClusteringFunction::ClusteringFunction(LabelTable table)
    : impl_(std::move(table)) {
  auto& t = std::get<LabelTable>(impl_);
  if (t.num_clusters == 0) {
    ClusterLabel max_label = t.default_label;
    for (ClusterLabel l : t.labels) max_label = std::max(max_label, l);
    t.num_clusters = static_cast<std::size_t>(max_label) + 1;
  }
  if (t.default_label >= t.num_clusters) {
    Fail(ErrorCode::kLabelOutOfRange, "default label out of range");
  }
}

std::size_t ClusteringFunction::num_clusters() const {
  if (const auto* cb = std::get_if<CenterBased>(&impl_)) {
    return cb->centers.size();
  }
  return std::get<LabelTable>(impl_).num_clusters;
}

ClusterLabel ClusteringFunction::LabelOf(
    std::span<const ValueIndex> tuple) const {
  const auto* cb = std::get_if<CenterBased>(&impl_);
  if (cb == nullptr) return std::get<LabelTable>(impl_).default_label;
  if (tuple.size() != cb->centers.front().size()) {
    Fail(ErrorCode::kLengthMismatch, "tuple arity does not match centers");
  }
  std::vector<const ValueIndex*> columns(tuple.size());
  for (std::size_t a = 0; a < tuple.size(); ++a) columns[a] = &tuple[a];
  std::vector<double> flat;
  for (const auto& c : cb->centers) flat.insert(flat.end(), c.begin(), c.end());
  ClusterLabel label = 0;
  kernels::ScalarKernels().nearest_center(columns.data(), tuple.size(), 1,
                                          flat.data(), cb->centers.size(),
                                          &label);
  return label;
}

ClusterPartition Assign(const ClusteringFunction& f, const Dataset& data) {
  if (const auto* table = std::get_if<LabelTable>(&f.variant())) {
    if (table->labels.size() != data.size()) {
      Fail(ErrorCode::kLengthMismatch,
           "label column has " + std::to_string(table->labels.size()) +
               " rows but the dataset has " + std::to_string(data.size()));
    }
    return ClusterPartition(table->num_clusters, table->labels);
  }
  const auto& centers = std::get<CenterBased>(f.variant()).centers;
  const std::size_t dims = data.num_attributes();
  if (centers.front().size() != dims) {
    Fail(ErrorCode::kLengthMismatch,
         "centers have " + std::to_string(centers.front().size()) +
             " coordinates but the schema has " + std::to_string(dims) +
             " attributes");
  }
  std::vector<double> flat;
  flat.reserve(centers.size() * dims);
  for (const auto& c : centers) flat.insert(flat.end(), c.begin(), c.end());

  std::vector<ClusterLabel> labels(data.size());
  const auto& kernel = kernels::ActiveKernels();
  const std::size_t chunks = (data.size() + kAssignChunk - 1) / kAssignChunk;
  ParallelFor(chunks, [&](std::size_t chunk) {
    const std::size_t begin = chunk * kAssignChunk;
    const std::size_t end = std::min(data.size(), begin + kAssignChunk);
    std::vector<const ValueIndex*> columns(dims);
    for (AttributeId a = 0; a < dims; ++a) {
      columns[a] = data.column(a).data() + begin;
    }
    kernel.nearest_center(columns.data(), dims, end - begin, flat.data(),
                          centers.size(), labels.data() + begin);
  });
  return ClusterPartition(centers.size(), std::move(labels));
}

ClusteringFunction ParseCentersJson(std::string_view json_text) {
  using nlohmann::json;
  CenterBased cb;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_array()) {
      Fail(ErrorCode::kParseError, "centers file must be a JSON array");
    }
    cb.centers = doc.get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("centers file: ") + e.what());
  }
  return ClusteringFunction(std::move(cb));
}

ClusteringFunction LoadCentersFile(const std::string& path) {
  return ParseCentersJson(ReadFile(path));
}

ClusteringFunction ParseLabelsCsv(std::string_view text,
                                  std::optional<std::size_t> num_clusters) {
  CsvReader reader(text);
  std::vector<std::string> fields;
  LabelTable table;
  bool first = true;
  while (reader.Next(fields)) {
    if (fields.size() != 1) {
      Fail(ErrorCode::kParseError,
           "labels file line " + std::to_string(reader.record_line()) +
               ": expected a single column");
    }
    const std::string& cell = fields.front();
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      if (first) {
        first = false;
        continue;  // header
      }
      Fail(ErrorCode::kParseError,
           "labels file line " + std::to_string(reader.record_line()) +
               ": '" + cell + "' is not a non-negative integer");
    }
    first = false;
    table.labels.push_back(static_cast<ClusterLabel>(value));
  }
  if (num_clusters) {
    table.num_clusters = *num_clusters;
    for (ClusterLabel l : table.labels) {
      if (l >= *num_clusters) {
        Fail(ErrorCode::kLabelOutOfRange,
             "label " + std::to_string(l) + " exceeds the declared " +
                 std::to_string(*num_clusters) + " clusters");
      }
    }
  }
  return ClusteringFunction(std::move(table));
}

ClusteringFunction LoadLabelsFile(const std::string& path,
                                  std::optional<std::size_t> num_clusters) {
  return ParseLabelsCsv(ReadFile(path), num_clusters);
}

}  // namespace dpclustx
