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

#ifndef WSNSYNTH_REFERENCE_DATA_H_
#define WSNSYNTH_REFERENCE_DATA_H_

// Published reference values used as golden vectors: per-seed constants,
// isolated-node counts and verdicts for 20 seeds, and an 80 x 5 sample of
// exponential and uniform packet sizes (two decimals).

#include <array>
#include <cstdint>
#include <span>

#include "wsnsynth/randomness_tests.h"

namespace wsnsynth {

struct ReferenceModeRow {
  std::array<int, 3> isolated;  // transmission range 10, 15, 20
  Verdict ks;
  Verdict chi2;
  Verdict autocorrelation;
};

struct ReferenceSeedRow {
  std::uint64_t seed;
  double a;
  double c;
  ReferenceModeRow non_grid;
  ReferenceModeRow grid;
};

// Transmission ranges of the isolated-node columns.
inline constexpr std::array<double, 3> kReferenceRanges = {10.0, 15.0, 20.0};

std::span<const ReferenceSeedRow> ReferenceSeedRows();

struct ReferenceTrafficRow {
  std::array<double, 5> exponential;
  std::array<double, 5> uniform;
};

// Rows are nodes 1..80, columns slots t=1..5.
std::span<const ReferenceTrafficRow> ReferenceTrafficRows();

}  // namespace wsnsynth

#endif  // WSNSYNTH_REFERENCE_DATA_H_
