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

#include "dpclustx/chart.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace dpclustx {
namespace {

constexpr double kPanelWidth = 480;
constexpr double kPanelHeight = 220;
constexpr double kMargin = 40;

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::vector<double> NormalizedBars(std::span<const double> counts) {
  std::vector<double> out(counts.size(), 0.0);
  double total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = std::max(counts[i], 0.0);
    total += out[i];
  }
  if (total <= 0) return std::vector<double>(counts.size(), 0.0);
  for (double& v : out) v /= total;
  return out;
}

std::string ChartSpecJson(const GlobalExplanation& explanation,
                          const Schema& schema) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["mark"] = "bar";
  doc["series"] = {"in-cluster", "out-of-cluster"};
  ordered_json panels = ordered_json::array();
  for (const auto& e : explanation.clusters) {
    const auto& def = schema.attribute(e.attribute);
    const auto in = NormalizedBars(e.in_counts);
    const auto out = NormalizedBars(e.out_counts);
    ordered_json bars = ordered_json::array();
    for (std::size_t v = 0; v < def.domain.size(); ++v) {
      bars.push_back({{"bin", def.domain[v]},
                      {"series", "in-cluster"},
                      {"proportion", in[v]}});
      bars.push_back({{"bin", def.domain[v]},
                      {"series", "out-of-cluster"},
                      {"proportion", out[v]}});
    }
    panels.push_back({{"cluster", e.label},
                      {"attribute", def.name},
                      {"bars", std::move(bars)}});
  }
  doc["panels"] = std::move(panels);
  return doc.dump(2) + "\n";
}

std::string ChartSvg(const GlobalExplanation& explanation,
                     const Schema& schema) {
  const double height =
      kPanelHeight * static_cast<double>(explanation.clusters.size()) + kMargin;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    Fmt(kPanelWidth) + "\" height=\"" + Fmt(height) +
                    "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  double top = kMargin / 2;
  for (const auto& e : explanation.clusters) {
    const auto& def = schema.attribute(e.attribute);
    const auto in = NormalizedBars(e.in_counts);
    const auto out = NormalizedBars(e.out_counts);
    const double plot_h = kPanelHeight - 2 * kMargin;
    const double base = top + kMargin + plot_h;
    const double slot =
        (kPanelWidth - 2 * kMargin) / std::max<std::size_t>(def.domain.size(), 1);
    svg += "<text x=\"" + Fmt(kMargin) + "\" y=\"" + Fmt(top + kMargin / 2) +
           "\" font-size=\"12\">cluster " + std::to_string(e.label) + ": " +
           EscapeXml(def.name) + "</text>\n";
    svg += "<line x1=\"" + Fmt(kMargin) + "\" y1=\"" + Fmt(base) + "\" x2=\"" +
           Fmt(kPanelWidth - kMargin) + "\" y2=\"" + Fmt(base) +
           "\" stroke=\"black\"/>\n";
    for (std::size_t v = 0; v < def.domain.size(); ++v) {
      const double x = kMargin + slot * static_cast<double>(v);
      const double w = slot * 0.4;
      const double hin = in[v] * plot_h;
      const double hout = out[v] * plot_h;
      svg += "<rect x=\"" + Fmt(x + slot * 0.1) + "\" y=\"" + Fmt(base - hin) +
             "\" width=\"" + Fmt(w) + "\" height=\"" + Fmt(hin) +
             "\" fill=\"#d95f02\"/>\n";
      svg += "<rect x=\"" + Fmt(x + slot * 0.5) + "\" y=\"" + Fmt(base - hout) +
             "\" width=\"" + Fmt(w) + "\" height=\"" + Fmt(hout) +
             "\" fill=\"#7570b3\"/>\n";
      svg += "<text x=\"" + Fmt(x + slot * 0.5) + "\" y=\"" + Fmt(base + 12) +
             "\" text-anchor=\"middle\">" + EscapeXml(def.domain[v]) +
             "</text>\n";
    }
    top += kPanelHeight;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace dpclustx
