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

#ifndef WSNSYNTH_REPRODUCTION_H_
#define WSNSYNTH_REPRODUCTION_H_

// Batch reports over many seeds and their comparison with the published
// reference values in reference_data.h.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsnsynth/deployment.h"
#include "wsnsynth/io.h"
#include "wsnsynth/reference_data.h"
#include "wsnsynth/suite.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {

struct SeedReportConfig {
  std::size_t nodes = 100;
  double area = 100.0;
  std::vector<double> ranges = {10.0, 15.0, 20.0};
  double epsilon = 0.0;
  SuiteConfig suite;
  DeploymentOptions deployment;
};

struct ModeOutcome {
  std::vector<std::size_t> isolated;  // one per configured range
  std::optional<Verdict> ks;
  std::optional<Verdict> chi2;
  std::optional<Verdict> autocorrelation;
  std::optional<Verdict> circular;
};

struct SeedReportRow {
  std::uint64_t seed = 0;
  double a = 0.0;
  double c = 0.0;
  ModeOutcome non_grid;
  ModeOutcome grid;
};

// Both deployment modes per seed, isolated counts per range and suite
// verdicts. Seeds are processed in parallel; rows come back in input order.
std::vector<SeedReportRow> BuildSeedReport(std::span<const std::uint64_t> seeds,
                                           const SeedReportConfig& config = {});

// Fixed-width table: seed, a, c, then isolated counts and KS / Chi2 /
// Autocorrelation verdicts for the non-grid and grid deployments.
std::string RenderSeedReport(std::span<const SeedReportRow> rows,
                             std::span<const double> ranges);
Json SeedReportToJson(std::span<const SeedReportRow> rows, std::span<const double> ranges);

struct SeedAgreement {
  std::uint64_t seed = 0;
  bool constants_match = false;      // a and c equal at 6 decimals
  std::size_t isolated_matches = 0;  // of 6 cells
  std::size_t verdict_matches = 0;   // of 6 cells
};

// Rows whose seed appears in the reference table; isolated counts are
// compared only when `ranges` equals kReferenceRanges.
std::vector<SeedAgreement> CompareWithReference(std::span<const SeedReportRow> rows,
                                                std::span<const double> ranges);
std::string RenderAgreement(std::span<const SeedAgreement> agreement);

// Cell-by-cell comparison of one generated 80 x 5 block with a reference
// block at two decimals.
struct TrafficBlockDiff {
  std::string generator;
  std::string reference_block;  // "exponential" or "uniform"
  std::size_t cells = 0;
  std::size_t matches = 0;          // cells equal after rounding to 2 decimals
  std::size_t matching_prefix = 0;  // leading cells (row-major) that match
  double max_abs_diff = 0.0;
  double mean_abs_diff = 0.0;
  bool in_range = false;  // every generated value in [p_min, p_max)
};

// Packet streams that reproduce the leading reference cells: x0 =
// table[floor(P2)], a = table[floor(P1)], c = table[floor(P1) + |table|/2],
// x <- (a x + c) mod (P2 - P1) + P1 carried across nodes. The uniform block
// holds x_{k+1} and the exponential block (-ln(1 - x_k / P2) / rate) mod
// (P2 - P1) + P1 for k = 1..n*t.
struct FittedTrafficBlocks {
  TrafficMatrix exponential;
  TrafficMatrix uniform;
};
FittedTrafficBlocks FittedReferenceTraffic(std::size_t nodes, std::size_t slots, double p_min,
                                           double p_max, double rate,
                                           const ConstantTable& table);

struct TrafficReferenceConfig {
  double p_min = 2.0;
  double p_max = 10.0;
  double rate = 1.0;
  const ConstantTable* table = nullptr;  // nullptr selects the canonical table
};

// Runs the three generators (and the fitted streams, with both the given
// table and the high-precision table) at the reference shape and compares
// each against the matching reference block.
std::vector<TrafficBlockDiff> CompareTrafficWithReference(const TrafficReferenceConfig& config = {});
std::string RenderTrafficDiff(std::span<const TrafficBlockDiff> diffs);
Json TrafficDiffToJson(std::span<const TrafficBlockDiff> diffs);

}  // namespace wsnsynth

#endif  // WSNSYNTH_REPRODUCTION_H_
