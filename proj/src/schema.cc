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

#include "dpclustx/schema.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "dpclustx/error.h"
#include "dpclustx/io.h"
#include <nlohmann/json.hpp>

namespace dpclustx {
namespace {

using nlohmann::json;

std::optional<double> ParseNumber(std::string_view cell) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
    cell.remove_prefix(1);
  }
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) {
    cell.remove_suffix(1);
  }
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

void Validate(const AttributeDef& attr) {
  if (attr.name.empty()) {
    Fail(ErrorCode::kInvalidSchema, "attribute with empty name");
  }
  if (attr.domain.empty()) {
    Fail(ErrorCode::kInvalidSchema,
         "attribute '" + attr.name + "' has an empty domain");
  }
  const BinningRule& rule = attr.binning;
  switch (rule.kind) {
    case BinningRule::Kind::kIdentity:
      break;
    case BinningRule::Kind::kNumericRanges: {
      if (rule.edges.size() != attr.domain.size() + 1) {
        Fail(ErrorCode::kInvalidSchema,
             "attribute '" + attr.name + "' declares " +
                 std::to_string(attr.domain.size()) + " bins but " +
                 std::to_string(rule.edges.size()) + " edges");
      }
      for (std::size_t i = 0; i + 1 < rule.edges.size(); ++i) {
        if (!(rule.edges[i] < rule.edges[i + 1])) {
          Fail(ErrorCode::kInvalidSchema,
               "bin edges of '" + attr.name + "' are not strictly increasing");
        }
      }
      break;
    }
    case BinningRule::Kind::kCategoryMap: {
      for (const auto& [raw, bucket] : rule.category_map) {
        if (std::find(attr.domain.begin(), attr.domain.end(), bucket) ==
            attr.domain.end()) {
          Fail(ErrorCode::kInvalidSchema, "category map of '" + attr.name +
                                              "' targets unknown bucket '" +
                                              bucket + "'");
        }
      }
      break;
    }
  }
}

}  // namespace

Schema::Schema(std::vector<AttributeDef> attributes)
    : attributes_(std::move(attributes)) {
  label_index_.resize(attributes_.size());
  for (AttributeId id = 0; id < attributes_.size(); ++id) {
    const AttributeDef& attr = attributes_[id];
    Validate(attr);
    if (!by_name_.emplace(attr.name, id).second) {
      Fail(ErrorCode::kInvalidSchema, "duplicate attribute '" + attr.name + "'");
    }
    for (std::size_t v = 0; v < attr.domain.size(); ++v) {
      if (!label_index_[id]
               .emplace(attr.domain[v], static_cast<ValueIndex>(v))
               .second) {
        Fail(ErrorCode::kInvalidSchema, "duplicate label '" + attr.domain[v] +
                                            "' in attribute '" + attr.name +
                                            "'");
      }
    }
  }
}

const AttributeDef& Schema::attribute(AttributeId id) const {
  if (id >= attributes_.size()) {
    Fail(ErrorCode::kUnknownAttribute,
         "attribute id " + std::to_string(id) + " out of range");
  }
  return attributes_[id];
}

std::optional<AttributeId> Schema::Find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<ValueIndex> Schema::IndexOf(AttributeId id,
                                          std::string_view label) const {
  attribute(id);
  const auto& index = label_index_[id];
  auto it = index.find(std::string(label));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<ValueIndex> Schema::Bin(AttributeId id,
                                      std::string_view cell) const {
  const AttributeDef& attr = attribute(id);
  const BinningRule& rule = attr.binning;
  const bool reject = rule.out_of_range == BinningRule::OutOfRange::kRejectRow;
  switch (rule.kind) {
    case BinningRule::Kind::kNumericRanges: {
      std::optional<double> value = ParseNumber(cell);
      if (!value) {
        Fail(ErrorCode::kParseError,
             "'" + std::string(cell) + "' is not a number");
      }
      const auto& edges = rule.edges;
      if (*value < edges.front() || *value >= edges.back()) {
        if (reject) return std::nullopt;
        return *value < edges.front()
                   ? ValueIndex{0}
                   : static_cast<ValueIndex>(attr.domain.size() - 1);
      }
      // First edge strictly greater than the value closes the bin.
      auto upper = std::upper_bound(edges.begin(), edges.end(), *value);
      return static_cast<ValueIndex>(upper - edges.begin() - 1);
    }
    case BinningRule::Kind::kCategoryMap: {
      auto it = rule.category_map.find(std::string(cell));
      if (it != rule.category_map.end()) return IndexOf(id, it->second);
      [[fallthrough]];
    }
    case BinningRule::Kind::kIdentity: {
      std::optional<ValueIndex> index = IndexOf(id, cell);
      if (index) return index;
      if (reject) return std::nullopt;
      Fail(ErrorCode::kUnknownCategory, "'" + std::string(cell) +
                                            "' is not in the domain of '" +
                                            attr.name + "'");
    }
  }
  return std::nullopt;
}

Schema ParseSchemaJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidSchema, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("attributes") ||
      !doc["attributes"].is_array()) {
    Fail(ErrorCode::kInvalidSchema, "expected an object with 'attributes'");
  }
  std::vector<AttributeDef> attributes;
  try {
    for (const json& item : doc["attributes"]) {
      AttributeDef attr;
      attr.name = item.at("name").get<std::string>();
      for (const json& label : item.at("domain")) {
        attr.domain.push_back(label.is_string() ? label.get<std::string>()
                                                : label.dump());
      }
      if (item.contains("binning") && !item["binning"].is_null()) {
        const json& binning = item["binning"];
        const std::string kind = binning.value("kind", "identity");
        if (kind == "identity") {
          attr.binning.kind = BinningRule::Kind::kIdentity;
        } else if (kind == "numeric-ranges") {
          attr.binning.kind = BinningRule::Kind::kNumericRanges;
          attr.binning.edges = binning.at("edges").get<std::vector<double>>();
        } else if (kind == "category-map") {
          attr.binning.kind = BinningRule::Kind::kCategoryMap;
          attr.binning.category_map =
              binning.at("map").get<std::map<std::string, std::string>>();
        } else {
          Fail(ErrorCode::kInvalidSchema, "unknown binning kind '" + kind + "'");
        }
        const std::string policy = binning.value("out_of_range", "clamp");
        if (policy == "clamp") {
          attr.binning.out_of_range = BinningRule::OutOfRange::kClamp;
        } else if (policy == "reject-row") {
          attr.binning.out_of_range = BinningRule::OutOfRange::kRejectRow;
        } else {
          Fail(ErrorCode::kInvalidSchema,
               "unknown out_of_range policy '" + policy + "'");
        }
      }
      attributes.push_back(std::move(attr));
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidSchema, e.what());
  }
  return Schema(std::move(attributes));
}

Schema LoadSchemaFile(const std::string& path) {
  return ParseSchemaJson(ReadFile(path));
}

Schema MakeIndexSchema(const std::vector<std::string>& names,
                       const std::vector<std::size_t>& domain_sizes) {
  if (names.size() != domain_sizes.size()) {
    Fail(ErrorCode::kInvalidSchema, "names and domain sizes differ in length");
  }
  std::vector<AttributeDef> attributes;
  for (std::size_t i = 0; i < names.size(); ++i) {
    AttributeDef attr;
    attr.name = names[i];
    for (std::size_t v = 0; v < domain_sizes[i]; ++v) {
      attr.domain.push_back(std::to_string(v));
    }
    attributes.push_back(std::move(attr));
  }
  return Schema(std::move(attributes));
}

}  // namespace dpclustx
