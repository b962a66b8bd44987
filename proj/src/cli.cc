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

#include "dpclustx/cli.h"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpclustx/chart.h"
#include "dpclustx/clustering.h"
#include "dpclustx/counts.h"
#include "dpclustx/dataset.h"
#include "dpclustx/eval.h"
#include "dpclustx/explain.h"
#include "dpclustx/io.h"
#include "dpclustx/schema.h"
#include "dpclustx/serialize.h"

namespace dpclustx {
namespace {

struct InputFlags {
  std::string schema;
  std::string data;
  std::string centers;
  std::string labels;
  std::optional<std::size_t> num_clusters;
};

struct ExplainFlags {
  InputFlags input;
  std::size_t k = 3;
  PrivacyBudget budget;
  std::optional<double> total_eps;
  std::optional<double> eps;
  WeightParams weights;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool svg = false;
  std::vector<CLI::Option*> budget_options;
};

void AddInputFlags(CLI::App* app, InputFlags& f) {
  app->add_option("--schema", f.schema, "Schema JSON file")->required();
  app->add_option("--data", f.data, "Data CSV file")->required();
  auto* centers = app->add_option("--centers", f.centers, "Centers JSON file");
  auto* labels = app->add_option("--labels", f.labels, "Per-row labels CSV");
  centers->excludes(labels);
  app->add_option("--num-clusters", f.num_clusters,
                  "Number of labels when --labels is used");
}

void AddWeightFlags(CLI::App* app, WeightParams& w) {
  app->add_option("--lambda-int", w.interestingness, "Interestingness weight");
  app->add_option("--lambda-suf", w.sufficiency, "Sufficiency weight");
  app->add_option("--lambda-div", w.diversity, "Diversity weight");
}

void AddExplainFlags(CLI::App* app, ExplainFlags& f) {
  AddInputFlags(app, f.input);
  app->add_option("--k", f.k, "Candidate attributes per cluster")
      ->capture_default_str();
  f.budget_options = {
      app->add_option("--eps-candset", f.budget.eps_candset,
                      "Candidate-set budget"),
      app->add_option("--eps-topcomb", f.budget.eps_topcomb,
                      "Combination-selection budget"),
      app->add_option("--eps-hist", f.budget.eps_hist, "Histogram budget"),
      app->add_option("--total-eps", f.total_eps,
                      "Total budget, split evenly three ways"),
      app->add_option("--eps", f.eps, "Total budget (dp-naive)"),
  };
  f.budget_options[3]->excludes(f.budget_options[0]);
  f.budget_options[3]->excludes(f.budget_options[1]);
  f.budget_options[3]->excludes(f.budget_options[2]);
  AddWeightFlags(app, f.weights);
  app->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app->add_option("--out", f.out_dir, "Output directory")->required();
  app->add_flag("--svg", f.svg, "Also render chart.svg");
}

struct Inputs {
  Schema schema;
  Dataset data;
  ClusterPartition partition;
};

ClusteringFunction LoadClustering(const InputFlags& f) {
  if (!f.centers.empty()) return LoadCentersFile(f.centers);
  if (!f.labels.empty()) return LoadLabelsFile(f.labels, f.num_clusters);
  Fail(ErrorCode::kInvalidArgument, "one of --centers or --labels is required");
}

Inputs LoadInputs(const InputFlags& f) {
  Inputs in;
  in.schema = LoadSchemaFile(f.schema);
  in.data = LoadCsv(f.data, in.schema);
  in.partition = Assign(LoadClustering(f), in.data);
  return in;
}

std::string JoinPath(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir.back() == '/') return dir + name;
  return dir + "/" + name;
}

void WriteExplanation(const ExplainFlags& f, const Schema& schema,
                      const GlobalExplanation& e,
                      const std::optional<PrivacyBudget>& declared,
                      std::optional<double> declared_total) {
  WriteFileAtomic(JoinPath(f.out_dir, "explanation.json"),
                  ExplanationToJson(e, schema, declared, declared_total));
  WriteFileAtomic(JoinPath(f.out_dir, "chart.json"), ChartSpecJson(e, schema));
  if (f.svg) {
    WriteFileAtomic(JoinPath(f.out_dir, "chart.svg"), ChartSvg(e, schema));
  }
}

void EchoBudget(std::ostream& err, const GlobalExplanation& e) {
  err << "budget: total epsilon " << e.ledger.Total() << " over "
      << e.ledger.entries().size() << " ledger entries\n";
}

PrivacyBudget ResolveBudget(const ExplainFlags& f) {
  if (f.total_eps) return PrivacyBudget::Split(*f.total_eps);
  return f.budget;
}

int RunExplain(const ExplainFlags& f, std::ostream& err) {
  f.weights.Validate();
  const PrivacyBudget budget = ResolveBudget(f);
  budget.Validate();
  const Inputs in = LoadInputs(f.input);
  const auto counts = ClusterCounts::Build(in.data, in.partition);
  ExplainOptions options;
  options.k = f.k;
  options.weights = f.weights;
  const auto e = GenerateGlobalExplanation(counts, options, budget, f.seed);
  WriteExplanation(f, in.schema, e, budget, {});
  EchoBudget(err, e);
  return kExitOk;
}

int RunBaseline(const std::string& which, const ExplainFlags& f,
                std::ostream& err) {
  f.weights.Validate();
  ExplainOptions options;
  options.k = f.k;
  options.weights = f.weights;
  if (which == "tabee") {
    for (const auto* opt : f.budget_options) {
      if (opt->count() > 0) {
        err << "warning: tabee is not private; budget flags are ignored\n";
        break;
      }
    }
    const Inputs in = LoadInputs(f.input);
    const auto counts = ClusterCounts::Build(in.data, in.partition);
    const auto e = TabeeExplain(counts, options);
    WriteExplanation(f, in.schema, e, {}, {});
    return kExitOk;
  }
  if (which == "dp-tabee") {
    const PrivacyBudget budget = ResolveBudget(f);
    budget.Validate();
    const Inputs in = LoadInputs(f.input);
    const auto counts = ClusterCounts::Build(in.data, in.partition);
    const auto e = DpTabeeExplain(counts, options, budget, f.seed);
    WriteExplanation(f, in.schema, e, budget, {});
    EchoBudget(err, e);
    return kExitOk;
  }
  // dp-naive
  double eps = f.eps ? *f.eps : (f.total_eps ? *f.total_eps : f.budget.Total());
  if (!(eps > 0)) Fail(ErrorCode::kInvalidBudget, "--eps must be positive");
  const Inputs in = LoadInputs(f.input);
  const auto counts = ClusterCounts::Build(in.data, in.partition);
  const auto e = DpNaiveExplain(counts, options, eps, f.seed);
  WriteExplanation(f, in.schema, e, {}, eps);
  EchoBudget(err, e);
  return kExitOk;
}

struct EvaluateFlags {
  InputFlags input;
  std::string explanation;
  std::string reference;
  WeightParams weights;
  std::string out_dir;
};

int RunEvaluate(const EvaluateFlags& f, std::ostream& out) {
  f.weights.Validate();
  const Inputs in = LoadInputs(f.input);
  const auto counts = ClusterCounts::Build(in.data, in.partition);
  const auto candidate =
      ParseExplanationCombination(ReadFile(f.explanation), in.schema);
  const auto reference =
      ParseExplanationCombination(ReadFile(f.reference), in.schema);
  const auto report = Evaluate(counts, candidate, reference, f.weights);
  WriteFileAtomic(JoinPath(f.out_dir, "report.json"),
                  EvalReportToJson(report, in.schema, candidate, reference));
  WriteFileAtomic(JoinPath(f.out_dir, "report.csv"),
                  EvalReportCsvHeader() + EvalReportCsvRow(report));
  out << "quality " << report.candidate.quality << " reference "
      << report.reference.quality << " mae " << report.mae << "\n";
  return kExitOk;
}

struct AssignFlags {
  std::string schema;
  std::string data;
  std::string centers;
  std::string out;
};

int RunAssign(const AssignFlags& f) {
  const Schema schema = LoadSchemaFile(f.schema);
  const Dataset data = LoadCsv(f.data, schema);
  const auto partition = Assign(LoadCentersFile(f.centers), data);
  std::string text = "label\n";
  for (ClusterLabel l : partition.labels()) text += std::to_string(l) + "\n";
  WriteFileAtomic(f.out, text);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSchema:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidWeights:
    case ErrorCode::kNonPositiveScale:
    case ErrorCode::kNonPositiveEpsilon:
    case ErrorCode::kNegativeEpsilon:
    case ErrorCode::kEmptyAttributeSet:
    case ErrorCode::kKTooLarge:
      return kExitConfig;
    case ErrorCode::kMissingColumn:
    case ErrorCode::kUnknownCategory:
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
    case ErrorCode::kUnknownAttribute:
    case ErrorCode::kLabelOutOfRange:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kLabelSetMismatch:
    case ErrorCode::kDomainMismatch:
    case ErrorCode::kCountInversion:
    case ErrorCode::kEmptyCandidateSet:
      return kExitData;
    case ErrorCode::kInvalidBudget:
    case ErrorCode::kSearchSpaceTooLarge:
      return kExitGuard;
  }
  return kExitConfig;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Differentially private cluster explanations"};
  app.require_subcommand(1);

  ExplainFlags explain_flags;
  auto* explain = app.add_subcommand("explain", "Run the private explainer");
  AddExplainFlags(explain, explain_flags);

  ExplainFlags baseline_flags;
  std::string which;
  auto* baseline = app.add_subcommand("baseline", "Run a comparison method");
  baseline->add_option("method", which, "tabee | dp-tabee | dp-naive")
      ->required()
      ->check(CLI::IsMember({"tabee", "dp-tabee", "dp-naive"}));
  AddExplainFlags(baseline, baseline_flags);

  EvaluateFlags eval_flags;
  auto* evaluate = app.add_subcommand("evaluate", "Score explanations");
  AddInputFlags(evaluate, eval_flags.input);
  evaluate->add_option("--explanation", eval_flags.explanation,
                       "Explanation JSON to score")->required();
  evaluate->add_option("--reference", eval_flags.reference,
                       "Reference explanation JSON")->required();
  AddWeightFlags(evaluate, eval_flags.weights);
  evaluate->add_option("--out", eval_flags.out_dir, "Output directory")->required();

  AssignFlags assign_flags;
  auto* assign = app.add_subcommand("assign", "Label rows by nearest center");
  assign->add_option("--schema", assign_flags.schema, "Schema JSON file")->required();
  assign->add_option("--data", assign_flags.data, "Data CSV file")->required();
  assign->add_option("--centers", assign_flags.centers, "Centers JSON file")->required();
  assign->add_option("--out", assign_flags.out, "Labels CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream buf;
    app.exit(e, out, buf);
    err << buf.str();
    return kExitConfig;
  }

  try {
    if (*explain) return RunExplain(explain_flags, err);
    if (*baseline) return RunBaseline(which, baseline_flags, err);
    if (*evaluate) return RunEvaluate(eval_flags, out);
    if (*assign) return RunAssign(assign_flags);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}

}  // namespace dpclustx
