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

#ifndef WSNSYNTH_SUITE_H_
#define WSNSYNTH_SUITE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsnsynth/deployment.h"
#include "wsnsynth/randomness_tests.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {

struct SuiteConfig {
  double alpha_ks = 0.01;
  double alpha_chi2 = 0.001;
  double alpha_autocorrelation = 0.01;
  double alpha_circular = 0.001;
  std::size_t classes = 10;
  std::vector<std::size_t> lags = {1};
  std::size_t autocorrelation_start = 1;
  std::size_t circular_lag = 0;
  bool run_ks = true;
  bool run_chi2 = true;
  bool run_autocorrelation = true;
  bool run_circular = true;
  SubsampleScheme subsample = SubsampleScheme::kContiguous;
  SigmaForm sigma = SigmaForm::kAsPrinted;
  LagIndexing lag_indexing = LagIndexing::kStandard;
  double critical_slack = 0.0;
};

// A unit-interval stream with a label ("x", "y", "traffic").
struct NamedStream {
  std::string name;
  std::vector<double> values;
};

struct SuiteInput {
  std::vector<NamedStream> streams;
  // Indices into `streams` of the pair fed to the circular test.
  std::optional<std::pair<std::size_t, std::size_t>> circular_pair;
};

struct SuiteResult {
  std::vector<TestReport> reports;
  // A kind is Satisfied iff every report of that kind is.
  std::map<TestKind, Verdict> overall;

  bool AllSatisfied() const;
  std::optional<Verdict> OverallFor(TestKind kind) const;
};

// X and Y normalised by the area width and height; circular pair (x, y).
SuiteInput MakeSuiteInput(const Deployment& deployment);
// Row-major cells normalised by [p_min, p_max).
SuiteInput MakeSuiteInput(const TrafficMatrix& traffic);

// Every stream is tested in full and on its four sub-samples. A test is
// skipped on a sub-sample that cannot satisfy its size precondition (for
// example fewer than 5 * classes values for chi-square); a skipped full-sample
// test propagates the error. Report order is deterministic: stream, then
// full sample before quarters, then test kind.
SuiteResult RunSuite(const SuiteInput& input, const SuiteConfig& config = {});

}  // namespace wsnsynth

#endif  // WSNSYNTH_SUITE_H_
