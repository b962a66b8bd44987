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

#ifndef DPCLUSTX_SCHEMA_H_
#define DPCLUSTX_SCHEMA_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dpclustx {

using AttributeId = std::size_t;
using ValueIndex = std::uint32_t;

// How a raw CSV cell is turned into a domain label.
struct BinningRule {
  enum class Kind { kIdentity, kNumericRanges, kCategoryMap };
  enum class OutOfRange { kClamp, kRejectRow };

  Kind kind = Kind::kIdentity;
  // kNumericRanges: bin i covers [edges[i], edges[i+1]).
  std::vector<double> edges;
  // kCategoryMap: raw value -> domain label.
  std::map<std::string, std::string> category_map;
  OutOfRange out_of_range = OutOfRange::kClamp;
};

struct AttributeDef {
  std::string name;
  std::vector<std::string> domain;
  BinningRule binning;
};

// Ordered attribute declarations with finite domains fixed up front. A
// Schema is validated on construction and immutable afterwards.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<AttributeDef> attributes);

  std::size_t size() const { return attributes_.size(); }
  const std::vector<AttributeDef>& attributes() const { return attributes_; }
  const AttributeDef& attribute(AttributeId id) const;
  std::size_t domain_size(AttributeId id) const {
    return attribute(id).domain.size();
  }

  std::optional<AttributeId> Find(std::string_view name) const;
  std::optional<ValueIndex> IndexOf(AttributeId id,
                                    std::string_view label) const;

  // Applies the attribute's binning rule to a raw cell. Returns nullopt when
  // the cell falls outside the domain and the rule says to reject the row;
  // throws for cells that cannot be mapped at all.
  std::optional<ValueIndex> Bin(AttributeId id, std::string_view cell) const;

 private:
  std::vector<AttributeDef> attributes_;
  std::unordered_map<std::string, AttributeId> by_name_;
  std::vector<std::unordered_map<std::string, ValueIndex>> label_index_;
};

Schema ParseSchemaJson(std::string_view json_text);
Schema LoadSchemaFile(const std::string& path);

// Convenience for tests and synthetic data: attributes named as given with
// domains "0".."n-1" and identity binning.
Schema MakeIndexSchema(const std::vector<std::string>& names,
                       const std::vector<std::size_t>& domain_sizes);

}  // namespace dpclustx

#endif  // DPCLUSTX_SCHEMA_H_
