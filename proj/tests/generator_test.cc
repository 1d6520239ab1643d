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
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "wsnsynth/constants.h"
#include "wsnsynth/error.h"
#include "wsnsynth/generator.h"
#include "wsnsynth/reference_data.h"

namespace wsnsynth {
namespace {

TEST(ConstantTableTest, CanonicalOrder) {
  const std::vector<double> expected = {4.669202, 3.359886, 3.275823, 2.807770, 2.685452,
                                        2.584982, 2.502908, 2.295587, 1.902161, 1.705211,
                                        1.324718, 1.618034, 3.141593, 2.718282};
  const ConstantTable& t = ConstantTable::Canonical();
  ASSERT_EQ(t.size(), 14u);
  EXPECT_EQ(t.half(), 7u);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(t[i], expected[i]) << i;
}

TEST(ConstantTableTest, HighPrecisionRoundsToCanonical) {
  const ConstantTable& hp = ConstantTable::HighPrecision();
  const ConstantTable& c = ConstantTable::Canonical();
  ASSERT_EQ(hp.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_NEAR(hp[i], c[i], 5e-7) << i;
  }
}

TEST(ConstantTableTest, RejectsBadTables) {
  EXPECT_THROW(ConstantTable({1.0}), ParameterError);
  EXPECT_THROW(ConstantTable({1.0, 1.0}), ParameterError);
  EXPECT_THROW(ConstantTable({1.0, -2.0}), ParameterError);
  EXPECT_THROW(ConstantTable({1.0, 0.0}), ParameterError);
  EXPECT_THROW(ConstantTable({1.0, NAN}), ParameterError);
  EXPECT_NO_THROW(ConstantTable({1.0, 2.0}));
}

TEST(DeriveConstantsTest, Examples) {
  EXPECT_EQ(DeriveConstants(43).a, 3.359886);
  EXPECT_EQ(DeriveConstants(43).c, 1.902161);
  EXPECT_EQ(DeriveConstants(0).a, 4.669202);
  EXPECT_EQ(DeriveConstants(0).c, 2.295587);
  EXPECT_EQ(DeriveConstants(14).a, DeriveConstants(0).a);
  EXPECT_EQ(DeriveConstants(14).c, DeriveConstants(0).c);
  EXPECT_EQ(DeriveConstants(1111).a, 2.584982);
  EXPECT_EQ(DeriveConstants(1111).c, 3.141593);
}

TEST(DeriveConstantsTest, PublishedSeedRowsAtSixDecimals) {
  for (const auto& row : ReferenceSeedRows()) {
    const Constants k = DeriveConstants(row.seed);
    EXPECT_EQ(std::llround(k.a * 1e6), std::llround(row.a * 1e6)) << row.seed;
    EXPECT_EQ(std::llround(k.c * 1e6), std::llround(row.c * 1e6)) << row.seed;
  }
}

TEST(DeriveConstantsTest, TotalAndNeverEqual) {
  const ConstantTable& t = ConstantTable::Canonical();
  for (std::uint64_t s = 0; s <= 10000; ++s) {
    const Constants k = DeriveConstants(s);
    ASSERT_EQ(k.a, t[s % 14]);
    ASSERT_EQ(k.c, t[(s + 7) % 14]);
    ASSERT_NE(k.a, k.c);
  }
  const Constants big = DeriveConstants(UINT64_MAX);
  EXPECT_EQ(big.a, t[UINT64_MAX % 14]);
}

TEST(FloorIndexTest, Basics) {
  EXPECT_EQ(FloorIndex(10.0), 10u);
  EXPECT_EQ(FloorIndex(1.324718), 1u);
  EXPECT_EQ(FloorIndex(0.0), 0u);
  EXPECT_THROW(FloorIndex(-0.5), ParameterError);
}

TEST(LcgStepTest, Examples) {
  GeneratorParams p{43, 3.359886, 1.902161, 100, false};
  EXPECT_NEAR(LcgStep(43, p), 46.377259, 1e-6);
  EXPECT_EQ(LcgStep(0, GeneratorParams{0, 1, 0, 10, true}), 0.0);
  EXPECT_EQ(LcgStep(9.5, GeneratorParams{0, 1, 1, 10, true}), 0.5);
}

TEST(RealModTest, AlwaysInHalfOpenRange) {
  EXPECT_EQ(RealMod(-1.0, 10.0), 9.0);
  EXPECT_EQ(RealMod(10.0, 10.0), 0.0);
  EXPECT_LT(RealMod(std::nextafter(10.0, 0.0), 10.0), 10.0);
  // -tiny mod m rounds to m in floating point; it must be clamped back.
  const double r = RealMod(-1e-300, 10.0);
  EXPECT_GE(r, 0.0);
  EXPECT_LT(r, 10.0);
}

TEST(StreamTest, Examples) {
  const auto one = Stream(MakeParams(43, 100), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0], 46.377259, 1e-6);

  EXPECT_EQ(Stream(GeneratorParams{0, 1, 0, 10, true}, 3), (std::vector<double>{0, 0, 0}));

  const auto two = Stream(GeneratorParams{5, 2.584982, 3.141593, 100, false}, 2);
  // Independent hand iteration.
  const double x1 = 2.584982 * 5 + 3.141593;
  const double x2 = std::fmod(2.584982 * x1 + 3.141593, 100.0);
  EXPECT_NEAR(two[0], 16.066503, 1e-5);
  EXPECT_NEAR(two[0], x1, 1e-12);
  EXPECT_NEAR(two[1], x2, 1e-12);
}

TEST(StreamTest, Errors) {
  EXPECT_THROW(Stream(MakeParams(1, 100), 0), ParameterError);
  EXPECT_THROW(Stream(GeneratorParams{0, 2, 2, 10, false}, 1), ParameterError);
  EXPECT_THROW(Stream(GeneratorParams{0, 2, 3, 0, false}, 1), ParameterError);
  EXPECT_THROW(Stream(GeneratorParams{0, 2, 3, -1, false}, 1), ParameterError);
  EXPECT_NO_THROW(Stream(GeneratorParams{0, 2, 2, 10, true}, 1));
}

TEST(StreamTest, RangeAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double m = 1.0 + static_cast<double>(seed % 37) * 3.5;
    const auto a = Stream(MakeParams(seed, m), 500);
    const auto b = Stream(MakeParams(seed, m), 500);
    ASSERT_EQ(a, b);
    for (double v : a) {
      ASSERT_GE(v, 0.0);
      ASSERT_LT(v, m);
    }
  }
}

TEST(StreamTest, MatchesIterator) {
  const GeneratorParams p = MakeParams(87, 100);
  LcgStream it(p);
  const auto s = Stream(p, 50);
  for (double v : s) EXPECT_EQ(it.Next(), v);
  EXPECT_EQ(it.state(), s.back());
}

}  // namespace
}  // namespace wsnsynth
