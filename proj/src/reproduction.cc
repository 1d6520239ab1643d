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

#include "wsnsynth/reproduction.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include "wsnsynth/error.h"
#include "wsnsynth/generator.h"
#include "wsnsynth/topology.h"

namespace wsnsynth {
namespace {

ModeOutcome RunMode(DeploymentMode mode, std::uint64_t seed, const SeedReportConfig& config) {
  const Deployment deployment =
      Deploy(mode, config.nodes, config.area, seed, config.deployment);
  ModeOutcome out;
  out.isolated = IsolatedCounts(deployment.points, config.ranges, config.epsilon);
  const SuiteResult suite = RunSuite(MakeSuiteInput(deployment), config.suite);
  out.ks = suite.OverallFor(TestKind::kKs);
  out.chi2 = suite.OverallFor(TestKind::kChi2);
  out.autocorrelation = suite.OverallFor(TestKind::kAutocorrelation);
  out.circular = suite.OverallFor(TestKind::kCircular);
  return out;
}

std::string VerdictCell(const std::optional<Verdict>& v) {
  return v ? std::string(ToString(*v)) : std::string("-");
}

Json VerdictJson(const std::optional<Verdict>& v) {
  return v ? Json(std::string(ToString(*v))) : Json(nullptr);
}

Json ModeJson(const ModeOutcome& m, std::span<const double> ranges) {
  Json isolated = Json::object();
  for (std::size_t i = 0; i < ranges.size() && i < m.isolated.size(); ++i) {
    isolated[FormatDouble(ranges[i])] = m.isolated[i];
  }
  return Json{{"isolated", isolated},
              {"ks", VerdictJson(m.ks)},
              {"chi2", VerdictJson(m.chi2)},
              {"autocorrelation", VerdictJson(m.autocorrelation)},
              {"circular", VerdictJson(m.circular)}};
}

bool SameAt6(double x, double y) { return std::round(x * 1e6) == std::round(y * 1e6); }

std::size_t ModeAgreement(const ModeOutcome& got, const ReferenceModeRow& ref,
                          bool compare_isolated, std::size_t* isolated_matches) {
  if (compare_isolated) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (got.isolated[i] == static_cast<std::size_t>(ref.isolated[i])) ++*isolated_matches;
    }
  }
  std::size_t verdicts = 0;
  if (got.ks == ref.ks) ++verdicts;
  if (got.chi2 == ref.chi2) ++verdicts;
  if (got.autocorrelation == ref.autocorrelation) ++verdicts;
  return verdicts;
}

TrafficBlockDiff Diff(std::string generator, std::string block, const TrafficMatrix& got,
                      bool exponential_block) {
  const auto rows = ReferenceTrafficRows();
  TrafficBlockDiff d;
  d.generator = std::move(generator);
  d.reference_block = std::move(block);
  d.in_range = true;
  bool prefix = true;
  double sum = 0.0;
  for (std::size_t r = 0; r < rows.size() && r < got.nodes(); ++r) {
    const auto& ref = exponential_block ? rows[r].exponential : rows[r].uniform;
    for (std::size_t s = 0; s < ref.size() && s < got.slots(); ++s) {
      const double v = got.at(r, s);
      const double diff = std::fabs(v - ref[s]);
      const bool match = std::round(v * 100.0) == std::round(ref[s] * 100.0);
      ++d.cells;
      if (match) ++d.matches;
      prefix = prefix && match;
      if (prefix) ++d.matching_prefix;
      d.max_abs_diff = std::max(d.max_abs_diff, diff);
      sum += diff;
    }
  }
  for (double v : got.values()) {
    if (!(v >= got.p_min && v < got.p_max)) d.in_range = false;
  }
  d.mean_abs_diff = d.cells ? sum / static_cast<double>(d.cells) : 0.0;
  return d;
}

}  // namespace

std::vector<SeedReportRow> BuildSeedReport(std::span<const std::uint64_t> seeds,
                                           const SeedReportConfig& config) {
  if (seeds.empty()) throw ParameterError("seed report needs at least one seed");
  if (config.ranges.empty()) throw ParameterError("seed report needs at least one range");
  const ConstantTable& table =
      config.deployment.table ? *config.deployment.table : ConstantTable::Canonical();

  std::vector<SeedReportRow> rows(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  const long n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      SeedReportRow& row = rows[i];
      row.seed = seeds[i];
      const Constants k = config.deployment.constants
                              ? *config.deployment.constants
                              : DeriveConstants(seeds[i], table);
      row.a = k.a;
      row.c = k.c;
      row.non_grid = RunMode(DeploymentMode::kNonGrid, seeds[i], config);
      row.grid = RunMode(DeploymentMode::kGrid, seeds[i], config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string RenderSeedReport(std::span<const SeedReportRow> rows,
                             std::span<const double> ranges) {
  std::ostringstream out;
  char buf[64];
  auto cell = [&](const std::string& s, int w) {
    std::snprintf(buf, sizeof buf, "%-*s", w, s.c_str());
    out << buf;
  };
  for (const char* mode : {"non-grid", "grid"}) {
    out << mode << '\n';
    cell("X[0]", 6);
    cell("a", 10);
    cell("c", 10);
    for (double r : ranges) cell("TR=" + FormatDouble(r), 8);
    cell("KS-Test", 10);
    cell("Chi2Test", 10);
    cell("Autocorrelation", 16);
    out << '\n';
    for (const auto& row : rows) {
      const ModeOutcome& m = std::string(mode) == "grid" ? row.grid : row.non_grid;
      cell(std::to_string(row.seed), 6);
      std::snprintf(buf, sizeof buf, "%-10.6f%-10.6f", row.a, row.c);
      out << buf;
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        cell(i < m.isolated.size() ? std::to_string(m.isolated[i]) : "-", 8);
      }
      cell(VerdictCell(m.ks), 10);
      cell(VerdictCell(m.chi2), 10);
      cell(VerdictCell(m.autocorrelation), 16);
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

Json SeedReportToJson(std::span<const SeedReportRow> rows, std::span<const double> ranges) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    arr.push_back(Json{{"seed", row.seed},
                       {"a", row.a},
                       {"c", row.c},
                       {"non_grid", ModeJson(row.non_grid, ranges)},
                       {"grid", ModeJson(row.grid, ranges)}});
  }
  return Json{{"kind", "seed_report"}, {"rows", arr}};
}

std::vector<SeedAgreement> CompareWithReference(std::span<const SeedReportRow> rows,
                                                std::span<const double> ranges) {
  const bool compare_isolated =
      std::equal(ranges.begin(), ranges.end(), kReferenceRanges.begin(), kReferenceRanges.end());
  std::vector<SeedAgreement> out;
  for (const auto& row : rows) {
    for (const auto& ref : ReferenceSeedRows()) {
      if (ref.seed != row.seed) continue;
      SeedAgreement a;
      a.seed = row.seed;
      a.constants_match = SameAt6(row.a, ref.a) && SameAt6(row.c, ref.c);
      a.verdict_matches =
          ModeAgreement(row.non_grid, ref.non_grid, compare_isolated, &a.isolated_matches) +
          ModeAgreement(row.grid, ref.grid, compare_isolated, &a.isolated_matches);
      out.push_back(a);
      break;
    }
  }
  return out;
}

std::string RenderAgreement(std::span<const SeedAgreement> agreement) {
  std::ostringstream out;
  std::size_t iso = 0, ver = 0, consts = 0;
  out << "seed  constants  isolated  verdicts\n";
  char buf[96];
  for (const auto& a : agreement) {
    std::snprintf(buf, sizeof buf, "%-6llu%-11s%zu/6%6s%zu/6\n",
                  static_cast<unsigned long long>(a.seed), a.constants_match ? "match" : "differ",
                  a.isolated_matches, "", a.verdict_matches);
    out << buf;
    iso += a.isolated_matches;
    ver += a.verdict_matches;
    consts += a.constants_match ? 1 : 0;
  }
  out << "total: constants " << consts << '/' << agreement.size() << ", isolated " << iso << '/'
      << 6 * agreement.size() << ", verdicts " << ver << '/' << 6 * agreement.size() << '\n';
  return out.str();
}

FittedTrafficBlocks FittedReferenceTraffic(std::size_t nodes, std::size_t slots, double p_min,
                                           double p_max, double rate,
                                           const ConstantTable& table) {
  if (nodes == 0 || slots == 0) throw ParameterError("traffic needs nodes, slots >= 1");
  if (!(p_min >= 0.0 && p_max > p_min)) throw ParameterError("need p_max > p_min >= 0");
  if (!(rate > 0.0)) throw ParameterError("rate must be positive");

  const std::uint64_t lo = FloorIndex(p_min);
  GeneratorParams params;
  params.seed = table.Wrapped(FloorIndex(p_max));
  params.a = table.Wrapped(lo);
  params.c = table.Wrapped(lo + table.half());
  params.modulus = p_max - p_min;
  params.allow_degenerate = true;

  FittedTrafficBlocks out{TrafficMatrix(nodes, slots), TrafficMatrix(nodes, slots)};
  for (TrafficMatrix* m : {&out.exponential, &out.uniform}) {
    m->p_min = p_min;
    m->p_max = p_max;
    m->rate = rate;
    m->params = params;
  }
  out.exponential.distribution = TrafficDistribution::kExponentialTransform;
  out.uniform.distribution = TrafficDistribution::kUniform;

  auto step = [&](double x) { return RealMod(params.a * x + params.c, params.modulus) + p_min; };
  double x = step(params.seed);  // x_1
  auto& ev = out.exponential.mutable_values();
  auto& uv = out.uniform.mutable_values();
  for (std::size_t k = 0; k < nodes * slots; ++k) {
    const double next = step(x);
    ev[k] = RealMod(-GuardedLog1m(x / p_max) / rate, params.modulus) + p_min;
    uv[k] = next;
    x = next;
  }
  return out;
}

std::vector<TrafficBlockDiff> CompareTrafficWithReference(const TrafficReferenceConfig& config) {
  const std::size_t nodes = ReferenceTrafficRows().size();
  const std::size_t slots = 5;
  const ConstantTable& table = config.table ? *config.table : ConstantTable::Canonical();
  TrafficOptions opts;
  opts.rate = config.rate;
  opts.table = &table;

  std::vector<TrafficBlockDiff> out;
  out.push_back(Diff("uniform", "uniform",
                     TrafficUniform(nodes, slots, config.p_min, config.p_max, opts), false));
  out.push_back(Diff("exp-transform", "exponential",
                     TrafficExponentialTransform(nodes, slots, config.p_min, config.p_max, opts),
                     true));
  out.push_back(Diff("exp-recurrence", "exponential",
                     TrafficExponentialRecurrence(nodes, slots, config.p_min, config.p_max, opts),
                     true));
  const std::pair<const char*, const ConstantTable*> fitted[] = {
      {"fitted", &table}, {"fitted-high-precision", &ConstantTable::HighPrecision()}};
  for (const auto& [name, t] : fitted) {
    const FittedTrafficBlocks f =
        FittedReferenceTraffic(nodes, slots, config.p_min, config.p_max, config.rate, *t);
    out.push_back(Diff(name, "uniform", f.uniform, false));
    out.push_back(Diff(name, "exponential", f.exponential, true));
  }
  return out;
}

std::string RenderTrafficDiff(std::span<const TrafficBlockDiff> diffs) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-22s%-13s%-9s%-8s%-10s%-10s%s\n", "generator", "block",
                "matches", "prefix", "max|d|", "mean|d|", "in-range");
  out << buf;
  for (const auto& d : diffs) {
    std::snprintf(buf, sizeof buf, "%-22s%-13s%3zu/%-5zu%-8zu%-10.4f%-10.4f%s\n",
                  d.generator.c_str(), d.reference_block.c_str(), d.matches, d.cells,
                  d.matching_prefix, d.max_abs_diff, d.mean_abs_diff, d.in_range ? "yes" : "no");
    out << buf;
  }
  return out.str();
}

Json TrafficDiffToJson(std::span<const TrafficBlockDiff> diffs) {
  Json arr = Json::array();
  for (const auto& d : diffs) {
    arr.push_back(Json{{"generator", d.generator},
                       {"block", d.reference_block},
                       {"cells", d.cells},
                       {"matches", d.matches},
                       {"matching_prefix", d.matching_prefix},
                       {"max_abs_diff", d.max_abs_diff},
                       {"mean_abs_diff", d.mean_abs_diff},
                       {"in_range", d.in_range}});
  }
  return Json{{"kind", "traffic_diff"}, {"rows", arr}};
}

}  // namespace wsnsynth
