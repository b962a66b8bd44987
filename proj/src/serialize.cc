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

#include "dpclustx/serialize.h"

#include <cstdio>
#include <map>
#include <string>

#include "dpclustx/error.h"
#include <nlohmann/json.hpp>

namespace dpclustx {
namespace {

using nlohmann::ordered_json;

ordered_json CombinationJson(const AttributeCombination& combination,
                             const Schema& schema) {
  ordered_json out = ordered_json::array();
  for (AttributeId a : combination.by_cluster) {
    out.push_back(schema.attribute(a).name);
  }
  return out;
}

ordered_json QualityJson(const QualityComponents& q) {
  return ordered_json{{"quality", q.quality},
                      {"interestingness", q.interestingness},
                      {"sufficiency", q.sufficiency},
                      {"diversity", q.diversity}};
}

}  // namespace

std::string ExplanationToJson(const GlobalExplanation& explanation,
                              const Schema& schema,
                              const std::optional<PrivacyBudget>& declared,
                              std::optional<double> declared_total) {
  ordered_json doc;
  doc["method"] = explanation.method;
  doc["combination"] = CombinationJson(explanation.combination, schema);
  ordered_json clusters = ordered_json::array();
  for (const auto& e : explanation.clusters) {
    ordered_json c;
    c["label"] = e.label;
    c["attribute"] = schema.attribute(e.attribute).name;
    c["bins"] = schema.attribute(e.attribute).domain;
    c["in_counts"] = e.in_counts;
    c["out_counts"] = e.out_counts;
    clusters.push_back(std::move(c));
  }
  doc["clusters"] = std::move(clusters);

  ordered_json budget;
  if (declared) {
    budget["eps_candset"] = declared->eps_candset;
    budget["eps_topcomb"] = declared->eps_topcomb;
    budget["eps_hist"] = declared->eps_hist;
  }
  if (declared_total) budget["eps"] = *declared_total;
  budget["total"] = explanation.ledger.Total();
  ordered_json entries = ordered_json::array();
  for (const auto& entry : explanation.ledger.entries()) {
    ordered_json e{{"tag", entry.tag},
                   {"epsilon", entry.epsilon},
                   {"mode", CompositionModeName(entry.mode)}};
    if (entry.mode == CompositionMode::kParallel) e["group"] = entry.group;
    entries.push_back(std::move(e));
  }
  budget["entries"] = std::move(entries);
  doc["budget"] = std::move(budget);
  doc["seed"] = explanation.seed;

  ordered_json candidates = ordered_json::array();
  for (const auto& set : explanation.candidates.by_cluster) {
    ordered_json names = ordered_json::array();
    for (AttributeId a : set) names.push_back(schema.attribute(a).name);
    candidates.push_back(std::move(names));
  }
  doc["candidates"] = std::move(candidates);
  doc["combinations_evaluated"] = explanation.combinations_evaluated;
  return doc.dump(2) + "\n";
}

AttributeCombination ParseExplanationCombination(std::string_view json_text,
                                                 const Schema& schema) {
  AttributeCombination out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    const auto& clusters = doc.at("clusters");
    std::map<std::size_t, AttributeId> by_label;
    for (const auto& c : clusters) {
      const auto label = c.at("label").get<std::size_t>();
      const auto name = c.at("attribute").get<std::string>();
      const auto id = schema.Find(name);
      if (!id) {
        Fail(ErrorCode::kUnknownAttribute,
             "explanation names unknown attribute '" + name + "'");
      }
      if (!by_label.emplace(label, *id).second) {
        Fail(ErrorCode::kParseError,
             "label " + std::to_string(label) + " appears twice");
      }
    }
    std::size_t expected = 0;
    for (const auto& [label, id] : by_label) {
      if (label != expected++) {
        Fail(ErrorCode::kLabelSetMismatch,
             "explanation labels are not 0.." + std::to_string(by_label.size() - 1));
      }
      out.by_cluster.push_back(id);
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("explanation file: ") + e.what());
  }
  return out;
}

std::string EvalReportToJson(const EvalReport& report, const Schema& schema,
                             const AttributeCombination& candidate,
                             const AttributeCombination& reference) {
  ordered_json doc;
  doc["candidate"] = QualityJson(report.candidate);
  doc["candidate"]["combination"] = CombinationJson(candidate, schema);
  doc["reference"] = QualityJson(report.reference);
  doc["reference"]["combination"] = CombinationJson(reference, schema);
  doc["mae"] = report.mae;
  ordered_json clusters = ordered_json::array();
  for (std::size_t c = 0; c < report.clusters.size(); ++c) {
    clusters.push_back(ordered_json{
        {"label", c},
        {"interestingness", report.clusters[c].interestingness},
        {"sufficiency", report.clusters[c].sufficiency}});
  }
  doc["clusters"] = std::move(clusters);
  doc["runtime_seconds"] = report.runtime_seconds;
  return doc.dump(2) + "\n";
}

std::string EvalReportCsvHeader() {
  return "quality,reference_quality,mae,interestingness,sufficiency,"
         "diversity,runtime_seconds\n";
}

std::string EvalReportCsvRow(const EvalReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.6f\n",
                report.candidate.quality, report.reference.quality, report.mae,
                report.candidate.interestingness, report.candidate.sufficiency,
                report.candidate.diversity, report.runtime_seconds);
  return buf;
}

}  // namespace dpclustx
