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

#ifndef DPCLUSTX_CHART_H_
#define DPCLUSTX_CHART_H_

#include <span>
#include <string>
#include <vector>

#include "dpclustx/explain.h"
#include "dpclustx/schema.h"

namespace dpclustx {

// Negative entries clamp to 0, then the rest scale to sum to 1. An all-zero
// side stays all zero.
std::vector<double> NormalizedBars(std::span<const double> counts);

// Declarative bar chart spec: per cluster, one bar per domain label for the
// in-cluster and out-of-cluster series.
std::string ChartSpecJson(const GlobalExplanation& explanation,
                          const Schema& schema);

// Static SVG rendering of the same spec, one panel per cluster.
std::string ChartSvg(const GlobalExplanation& explanation,
                     const Schema& schema);

}  // namespace dpclustx

#endif  // DPCLUSTX_CHART_H_
