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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "wsnsynth/error.h"
#include "wsnsynth/reference_data.h"
#include "wsnsynth/reproduction.h"

namespace wsnsynth {
namespace {

std::vector<std::uint64_t> ReferenceSeeds() {
  std::vector<std::uint64_t> seeds;
  for (const auto& row : ReferenceSeedRows()) seeds.push_back(row.seed);
  return seeds;
}

TEST(ReferenceDataTest, Shape) {
  EXPECT_EQ(ReferenceSeedRows().size(), 20u);
  EXPECT_EQ(ReferenceTrafficRows().size(), 80u);
  EXPECT_EQ(ReferenceTrafficRows()[0].exponential[0], 3.63);
  EXPECT_EQ(ReferenceTrafficRows()[0].uniform[0], 6.06);
}

TEST(SeedReportTest, ConstantsMatchReference) {
  const auto seeds = ReferenceSeeds();
  const auto rows = BuildSeedReport(seeds);
  ASSERT_EQ(rows.size(), 20u);
  const auto agreement = CompareWithReference(rows, kReferenceRanges);
  ASSERT_EQ(agreement.size(), 20u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].seed, seeds[i]);
    EXPECT_TRUE(agreement[i].constants_match) << seeds[i];
    EXPECT_EQ(rows[i].non_grid.autocorrelation, Verdict::kSatisfied);
    EXPECT_EQ(rows[i].grid.autocorrelation, Verdict::kSatisfied);
  }
}

TEST(SeedReportTest, DeterministicAndOrdered) {
  const std::vector<std::uint64_t> seeds = {365, 0, 43, 7, 1111, 2};
  const std::vector<double> ranges = {10, 15, 20};
  const auto a = RenderSeedReport(BuildSeedReport(seeds), ranges);
  const auto b = RenderSeedReport(BuildSeedReport(seeds), ranges);
  EXPECT_EQ(a, b);
  EXPECT_LT(a.find("365 "), a.find("1111 "));
  EXPECT_EQ(SeedReportToJson(BuildSeedReport(seeds), ranges),
            SeedReportToJson(BuildSeedReport(seeds), ranges));
}

TEST(SeedReportTest, SingleSeedSingleRange) {
  SeedReportConfig c;
  c.ranges = {12.5};
  const std::vector<std::uint64_t> seeds = {43};
  const auto rows = BuildSeedReport(seeds, c);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].non_grid.isolated.size(), 1u);
  const std::string text = RenderSeedReport(rows, c.ranges);
  EXPECT_NE(text.find("TR=12.5"), std::string::npos);
  // Isolated counts are only compared at the reference ranges.
  const auto agreement = CompareWithReference(rows, c.ranges);
  ASSERT_EQ(agreement.size(), 1u);
  EXPECT_EQ(agreement[0].isolated_matches, 0u);
}

TEST(SeedReportTest, Errors) {
  EXPECT_THROW(BuildSeedReport({}), ParameterError);
  SeedReportConfig c;
  c.nodes = 0;
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  EXPECT_THROW(BuildSeedReport(seeds, c), ParameterError);
}

TEST(TrafficReferenceTest, AllGeneratorsInRange) {
  const auto diffs = CompareTrafficWithReference();
  ASSERT_EQ(diffs.size(), 7u);
  for (const auto& d : diffs) {
    EXPECT_EQ(d.cells, 400u) << d.generator;
    EXPECT_TRUE(d.in_range) << d.generator;
    EXPECT_LE(d.matching_prefix, d.matches);
  }
}

TEST(TrafficReferenceTest, FittedStreamReproducesLeadingCells) {
  const FittedTrafficBlocks f =
      FittedReferenceTraffic(80, 5, 2, 10, 1, ConstantTable::HighPrecision());
  const auto& ref = ReferenceTrafficRows()[0];
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(f.uniform.at(0, k), ref.uniform[k], 0.005 + 1e-9) << k;
    EXPECT_NEAR(f.exponential.at(0, k), ref.exponential[k], 0.005 + 1e-9) << k;
  }
}

TEST(TrafficReferenceTest, FittedExponentialLagsUniformByOneStep) {
  const FittedTrafficBlocks f = FittedReferenceTraffic(10, 5, 2, 10, 1, ConstantTable::Canonical());
  for (std::size_t k = 1; k < 50; ++k) {
    const double x = f.uniform.values()[k - 1];
    EXPECT_NEAR(f.exponential.values()[k], std::fmod(-std::log(1 - x / 10), 8.0) + 2, 1e-12);
  }
}

}  // namespace
}  // namespace wsnsynth
