// Copyright 2026 The wsnsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsnsynth/error.h"
#include "wsnsynth/io.h"
#include "wsnsynth/reproduction.h"
#include "wsnsynth/run_config.h"
#include "wsnsynth/suite.h"
#include "wsnsynth/topology.h"

namespace wsnsynth {
namespace {

// Option values that need parsing or presence checks after CLI11 is done.
struct RawOptions {
  std::string mode;
  std::string y_increment;
  std::string dist;
  std::string format;
  std::string subsample;
  std::string sigma;
  std::string lag_indexing;
  std::string report_kind = "seeds";
  std::string source = "deployment";
  std::string config_file;
  std::string edges_out;
  double height = 0.0;
  bool dump_config = false;
};

void AddCommon(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--config", raw.config_file, "JSON run config; explicit options override it");
  sub->add_flag("--dump-config", raw.dump_config, "Print the effective config as JSON and exit");
  sub->add_option("--out", cfg.output, "Output file (stdout when omitted)");
  sub->add_option("--format", raw.format, "csv | json | svg");
  sub->add_option("--constants-file", cfg.constants_file,
                  "JSON array of constants replacing the canonical table");
}

void AddDeployment(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--seed", cfg.seed, "Seed X[0]");
  sub->add_option("--nodes", cfg.nodes, "Node count");
  sub->add_option("--area", cfg.area, "Side of the square area");
  sub->add_option("--height", raw.height, "Height of a rectangular area");
  sub->add_option("--mode", raw.mode, "non-grid | grid");
  sub->add_option("--y-increment", raw.y_increment, "Increment of the Y recurrence: a | c");
}

void AddTraffic(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--slots", cfg.slots, "Time slots per node");
  sub->add_option("--pmin", cfg.p_min, "Smallest packet size P1");
  sub->add_option("--pmax", cfg.p_max, "Packet size bound P2 (exclusive)");
  sub->add_option("--dist", raw.dist, "uniform | exp-transform | exp-recurrence");
  sub->add_option("--lambda", cfg.rate, "Exponential rate");
  sub->add_flag("--reseed-per-node", cfg.reseed_per_node, "Restart the recurrence at every node");
}

void AddTopology(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tr", cfg.ranges, "Transmission ranges")->delimiter(',');
  sub->add_option("--epsilon", cfg.epsilon, "Distance tolerance added to each range");
}

void AddSuite(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  SuiteConfig& s = cfg.suite;
  sub->add_option("--alpha-ks", s.alpha_ks, "KS significance level");
  sub->add_option("--alpha-chi2", s.alpha_chi2, "Chi-square significance level");
  sub->add_option("--alpha-auto", s.alpha_autocorrelation, "Autocorrelation significance level");
  sub->add_option("--alpha-circular", s.alpha_circular, "Circular correlation significance level");
  sub->add_option("--classes", s.classes, "Chi-square classes");
  sub->add_option("--lags", s.lags, "Autocorrelation lags")->delimiter(',');
  sub->add_option("--start", s.autocorrelation_start, "Autocorrelation start index (1-based)");
  sub->add_option("--circular-lag", s.circular_lag, "Lag of the circular x,y correlation");
  sub->add_option("--subsample", raw.subsample, "Quarter layout: contiguous | strided");
  sub->add_option("--sigma", raw.sigma, "Autocorrelation deviation: as-printed | classical");
  sub->add_option("--lag-indexing", raw.lag_indexing, "standard | as-printed");
  sub->add_option("--critical-slack", s.critical_slack, "Added to every critical value");
}

// Applies the string-valued options on top of `cfg`.
void Resolve(const RawOptions& raw, const CLI::App& sub, RunConfig& cfg) {
  if (!raw.mode.empty()) cfg.mode = ParseDeploymentMode(raw.mode);
  if (!raw.y_increment.empty()) cfg.y_increment = ParseYIncrement(raw.y_increment);
  if (!raw.dist.empty()) cfg.distribution = ParseTrafficDistribution(raw.dist);
  if (!raw.format.empty()) cfg.format = ParseFileFormat(raw.format);
  if (!raw.subsample.empty()) cfg.suite.subsample = ParseSubsampleScheme(raw.subsample);
  if (!raw.sigma.empty()) cfg.suite.sigma = ParseSigmaForm(raw.sigma);
  if (!raw.lag_indexing.empty()) cfg.suite.lag_indexing = ParseLagIndexing(raw.lag_indexing);
  if (sub.get_option_no_throw("--height") && sub.count("--height") > 0) {
    cfg.area_height = raw.height;
  }
}

DeploymentOptions MakeDeploymentOptions(const RunConfig& cfg, const ConstantTable* table) {
  DeploymentOptions o;
  o.y_increment = cfg.y_increment;
  o.height = cfg.area_height;
  o.table = table;
  return o;
}

TrafficOptions MakeTrafficOptions(const RunConfig& cfg, const ConstantTable* table) {
  TrafficOptions o;
  o.rate = cfg.rate;
  o.reseed_per_node = cfg.reseed_per_node;
  o.table = table;
  return o;
}

Deployment MakeDeployment(const RunConfig& cfg, const ConstantTable* table) {
  return Deploy(cfg.mode, cfg.nodes, cfg.area, cfg.seed, MakeDeploymentOptions(cfg, table));
}

TrafficMatrix MakeTraffic(const RunConfig& cfg, const ConstantTable* table) {
  return GenerateTraffic(cfg.distribution, cfg.nodes, cfg.slots, cfg.p_min, cfg.p_max,
                         MakeTrafficOptions(cfg, table));
}

Dataset LoadDataset(const RunConfig& cfg) {
  CsvDefaults d;
  d.area = cfg.area;
  d.area_height = cfg.area_height;
  d.p_min = cfg.p_min;
  d.p_max = cfg.p_max;
  return ParseDataset(ReadFile(cfg.input), d);
}

// Writes `contents` to cfg.output, or to `out` when no path was given.
// Returns true when a file was written.
bool Emit(const RunConfig& cfg, const std::string& contents, std::ostream& out) {
  if (cfg.output.empty()) {
    out << contents;
    return false;
  }
  WriteFileAtomic(cfg.output, contents);
  return true;
}

std::string Fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int CmdDeploy(const RunConfig& cfg, const ConstantTable* table, std::ostream& out,
              std::ostream& err) {
  const Deployment d = MakeDeployment(cfg, table);
  std::string body;
  switch (cfg.format) {
    case FileFormat::kCsv: body = DeploymentToCsv(d); break;
    case FileFormat::kJson: body = DeploymentToJson(d).dump(2) + "\n"; break;
    case FileFormat::kSvg: body = DeploymentToSvg(d); break;
  }
  const bool to_file = Emit(cfg, body, out);
  (to_file ? out : err) << "deploy seed=" << d.seed << " a=" << Fmt6(d.params.a)
                        << " c=" << Fmt6(d.params.c) << " mode=" << ToString(d.mode)
                        << " n=" << d.node_count() << " area=" << FormatDouble(d.area_width)
                        << "x" << FormatDouble(d.area_height) << "\n";
  return 0;
}

int CmdTraffic(const RunConfig& cfg, const ConstantTable* table, std::ostream& out,
               std::ostream& err) {
  const TrafficMatrix t = MakeTraffic(cfg, table);
  std::string body;
  switch (cfg.format) {
    case FileFormat::kCsv: body = TrafficToCsv(t); break;
    case FileFormat::kJson: body = TrafficToJson(t).dump(2) + "\n"; break;
    case FileFormat::kSvg: throw ParameterError("svg output is only available for deployments");
  }
  const bool to_file = Emit(cfg, body, out);
  (to_file ? out : err) << "traffic dist=" << ToString(t.distribution) << " x0=" << Fmt6(t.params.seed)
                        << " a=" << Fmt6(t.params.a) << " c=" << Fmt6(t.params.c)
                        << " n=" << t.nodes() << " t=" << t.slots()
                        << " range=[" << FormatDouble(t.p_min) << ", " << FormatDouble(t.p_max) << ")\n";
  return 0;
}

int CmdAnalyze(const RunConfig& cfg, const ConstantTable* table, const std::string& edges_out,
               std::ostream& out) {
  Deployment d;
  if (cfg.input.empty()) {
    d = MakeDeployment(cfg, table);
  } else {
    Dataset ds = LoadDataset(cfg);
    if (!std::holds_alternative<Deployment>(ds)) {
      throw ParameterError("analyze needs a deployment dataset");
    }
    d = std::get<Deployment>(std::move(ds));
  }
  if (cfg.ranges.empty()) throw ParameterError("analyze needs at least one --tr");

  Json rows = Json::array();
  std::ostringstream text;
  text << "range    edges    isolated  min-deg  max-deg  mean-deg\n";
  for (double r : cfg.ranges) {
    const RadiusGraph g = BuildGraph(d, r, cfg.epsilon);
    const DegreeStats s = ComputeDegreeStats(g);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-9s%-9zu%-10zu%-9u%-9u%.4f\n", FormatDouble(r).c_str(),
                  g.edges.size(), s.isolated, s.min, s.max, s.mean);
    text << buf;
    rows.push_back(Json{{"range", r},
                        {"epsilon", cfg.epsilon},
                        {"edges", g.edges.size()},
                        {"isolated", s.isolated},
                        {"min_degree", s.min},
                        {"max_degree", s.max},
                        {"mean_degree", s.mean}});
  }
  if (!edges_out.empty()) {
    const RadiusGraph g = BuildGraph(d, cfg.ranges.front(), cfg.epsilon);
    const bool json = edges_out.size() >= 5 && edges_out.ends_with(".json");
    WriteFileAtomic(edges_out, json ? GraphToJson(g, d.points).dump(2) + "\n"
                                    : GraphToCsv(g, d.points));
  }
  if (cfg.format == FileFormat::kJson) {
    Emit(cfg, Json{{"kind", "analysis"}, {"node_count", d.node_count()}, {"ranges", rows}}.dump(2) + "\n",
         out);
  } else {
    Emit(cfg, text.str(), out);
  }
  return 0;
}

std::string RenderReports(const SuiteResult& result) {
  std::ostringstream text;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-17s%-10s%-8s%-12s%-12s%s\n", "test", "subject", "n",
                "statistic", "critical", "verdict");
  text << buf;
  for (const TestReport& r : result.reports) {
    std::snprintf(buf, sizeof buf, "%-17s%-10s%-8zu%-12.6f%-12.6f%s\n",
                  std::string(ToString(r.test)).c_str(), r.subject.c_str(), r.sample_size,
                  r.statistic, r.critical_value, std::string(ToString(r.verdict)).c_str());
    text << buf;
  }
  text << "overall:";
  for (const auto& [kind, verdict] : result.overall) {
    text << ' ' << ToString(kind) << '=' << ToString(verdict);
  }
  text << '\n';
  return text.str();
}

int CmdValidate(const RunConfig& cfg, const ConstantTable* table, const std::string& source,
                std::ostream& out) {
  SuiteInput input;
  if (!cfg.input.empty()) {
    std::visit([&](const auto& ds) { input = MakeSuiteInput(ds); }, LoadDataset(cfg));
  } else if (source == "deployment") {
    input = MakeSuiteInput(MakeDeployment(cfg, table));
  } else if (source == "traffic") {
    input = MakeSuiteInput(MakeTraffic(cfg, table));
  } else {
    throw ParameterError("unknown --source: " + source);
  }
  const SuiteResult result = RunSuite(input, cfg.suite);
  Json j = Json{{"kind", "validation"},
                {"all_satisfied", result.AllSatisfied()},
                {"reports", ReportsToJson(result.reports)}};
  if (cfg.format == FileFormat::kJson) {
    Emit(cfg, j.dump(2) + "\n", out);
  } else {
    out << RenderReports(result);
    if (!cfg.output.empty()) WriteFileAtomic(cfg.output, j.dump(2) + "\n");
  }
  return result.AllSatisfied() ? 0 : 2;
}

int CmdReport(const RunConfig& cfg, const ConstantTable* table, const std::string& kind,
              std::ostream& out) {
  if (kind == "seeds") {
    SeedReportConfig sc;
    sc.nodes = cfg.nodes;
    sc.area = cfg.area;
    sc.ranges = cfg.ranges;
    sc.epsilon = cfg.epsilon;
    sc.suite = cfg.suite;
    sc.deployment = MakeDeploymentOptions(cfg, table);
    const auto rows = BuildSeedReport(cfg.seeds, sc);
    const auto agreement = CompareWithReference(rows, cfg.ranges);
    if (cfg.format == FileFormat::kJson) {
      Json j = SeedReportToJson(rows, cfg.ranges);
      Json agree = Json::array();
      for (const auto& a : agreement) {
        agree.push_back(Json{{"seed", a.seed},
                             {"constants_match", a.constants_match},
                             {"isolated_matches", a.isolated_matches},
                             {"verdict_matches", a.verdict_matches}});
      }
      j["reference_agreement"] = agree;
      Emit(cfg, j.dump(2) + "\n", out);
    } else {
      std::string text = RenderSeedReport(rows, cfg.ranges);
      if (!agreement.empty()) text += "reference agreement\n" + RenderAgreement(agreement);
      Emit(cfg, text, out);
    }
    return 0;
  }
  if (kind == "traffic") {
    TrafficReferenceConfig tc;
    tc.p_min = cfg.p_min;
    tc.p_max = cfg.p_max;
    tc.rate = cfg.rate;
    tc.table = table;
    const auto diffs = CompareTrafficWithReference(tc);
    Emit(cfg,
         cfg.format == FileFormat::kJson ? TrafficDiffToJson(diffs).dump(2) + "\n"
                                         : RenderTrafficDiff(diffs),
         out);
    return 0;
  }
  throw ParameterError("unknown report kind: " + kind);
}

// --config is read before CLI11 parses so explicit options land on top of it.
std::string FindConfigPath(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string_view a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.starts_with("--config=")) return std::string(a.substr(9));
  }
  return {};
}

}  // namespace

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  RawOptions raw;
  try {
    const std::string config_path = FindConfigPath(argc, argv);
    if (!config_path.empty()) cfg = RunConfigFromJson(Json::parse(ReadFile(config_path)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Synthetic wireless sensor network datasets and randomness checks", "wsnsynth"};
  app.set_version_flag("--version", WSNSYNTH_VERSION);
  app.require_subcommand(1);

  CLI::App* deploy = app.add_subcommand("deploy", "Generate node coordinates");
  AddCommon(deploy, cfg, raw);
  AddDeployment(deploy, cfg, raw);

  CLI::App* traffic = app.add_subcommand("traffic", "Generate a packet-size matrix");
  AddCommon(traffic, cfg, raw);
  traffic->add_option("--nodes", cfg.nodes, "Node count");
  AddTraffic(traffic, cfg, raw);

  CLI::App* analyze = app.add_subcommand("analyze", "Radius-graph connectivity of a deployment");
  AddCommon(analyze, cfg, raw);
  AddDeployment(analyze, cfg, raw);
  AddTopology(analyze, cfg);
  analyze->add_option("--in", cfg.input, "Deployment file (generated from options when omitted)");
  analyze->add_option("--edges-out", raw.edges_out, "Edge list of the first range (.csv or .json)");

  CLI::App* validate = app.add_subcommand("validate", "Run the randomness test suite");
  AddCommon(validate, cfg, raw);
  AddDeployment(validate, cfg, raw);
  AddTraffic(validate, cfg, raw);
  AddSuite(validate, cfg, raw);
  validate->add_option("--in", cfg.input, "Dataset file (generated from options when omitted)");
  validate->add_option("--source", raw.source, "What to generate without --in: deployment | traffic");

  CLI::App* report = app.add_subcommand("report", "Batch report over seeds or traffic generators");
  AddCommon(report, cfg, raw);
  AddDeployment(report, cfg, raw);
  AddTraffic(report, cfg, raw);
  AddTopology(report, cfg);
  AddSuite(report, cfg, raw);
  report->add_option("--seeds", cfg.seeds, "Seeds of the batch report")->delimiter(',');
  report->add_option("--kind", raw.report_kind, "seeds | traffic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = ParseCommand(sub->get_name());
    Resolve(raw, *sub, cfg);
    if (raw.dump_config) {
      out << RunConfigToJson(cfg).dump(2) << "\n";
      return 0;
    }
    std::optional<ConstantTable> custom;
    if (!cfg.constants_file.empty()) {
      custom = ConstantTableFromJson(Json::parse(ReadFile(cfg.constants_file)));
    }
    const ConstantTable* table = custom ? &*custom : nullptr;
    switch (cfg.command) {
      case Command::kDeploy: return CmdDeploy(cfg, table, out, err);
      case Command::kTraffic: return CmdTraffic(cfg, table, out, err);
      case Command::kAnalyze: return CmdAnalyze(cfg, table, raw.edges_out, out);
      case Command::kValidate: return CmdValidate(cfg, table, raw.source, out);
      case Command::kReport: return CmdReport(cfg, table, raw.report_kind, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int RunCli(int argc, char** argv) { return RunCli(argc, argv, std::cout, std::cerr); }

}  // namespace wsnsynth
