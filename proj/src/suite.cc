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

#include "wsnsynth/suite.h"

#include <algorithm>

#include "wsnsynth/error.h"

namespace wsnsynth {

bool SuiteResult::AllSatisfied() const {
  return std::all_of(overall.begin(), overall.end(),
                     [](const auto& kv) { return kv.second == Verdict::kSatisfied; });
}

std::optional<Verdict> SuiteResult::OverallFor(TestKind kind) const {
  auto it = overall.find(kind);
  if (it == overall.end()) return std::nullopt;
  return it->second;
}

SuiteInput MakeSuiteInput(const Deployment& deployment) {
  std::vector<double> xs, ys;
  xs.reserve(deployment.node_count());
  ys.reserve(deployment.node_count());
  for (const Point& p : deployment.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  SuiteInput input;
  input.streams.push_back({"x", Normalize(xs, 0.0, deployment.area_width)});
  input.streams.push_back({"y", Normalize(ys, 0.0, deployment.area_height)});
  input.circular_pair = {0, 1};
  return input;
}

SuiteInput MakeSuiteInput(const TrafficMatrix& traffic) {
  SuiteInput input;
  input.streams.push_back({"traffic", Normalize(traffic.values(), traffic.p_min, traffic.p_max)});
  return input;
}

namespace {

bool KsFits(std::size_t n) { return n >= 5; }
bool Chi2Fits(std::size_t n, const SuiteConfig& c) { return c.classes >= 2 && n >= 5 * c.classes; }
bool AutoFits(std::size_t n, std::size_t start, std::size_t lag) {
  return start >= 1 && lag >= 1 && start + 2 * lag <= n;
}

void RunOn(const std::vector<double>& sample, const std::string& subject, bool full,
           const SuiteConfig& config, std::vector<TestReport>& out) {
  TestOptions base;
  base.critical_slack = config.critical_slack;
  auto push = [&](TestReport r) {
    r.subject = subject;
    out.push_back(std::move(r));
  };
  if (config.run_ks && (full || KsFits(sample.size()))) {
    push(KsTest(sample, config.alpha_ks, base));
  }
  if (config.run_chi2 && (full || Chi2Fits(sample.size(), config))) {
    push(Chi2Test(sample, config.classes, config.alpha_chi2, base));
  }
  if (config.run_autocorrelation) {
    AutocorrelationOptions opts;
    opts.critical_slack = config.critical_slack;
    opts.sigma = config.sigma;
    opts.indexing = config.lag_indexing;
    for (std::size_t lag : config.lags) {
      if (!full && !AutoFits(sample.size(), config.autocorrelation_start, lag)) continue;
      push(AutocorrelationTest(sample, config.autocorrelation_start, lag,
                               config.alpha_autocorrelation, opts));
    }
  }
}

}  // namespace

SuiteResult RunSuite(const SuiteInput& input, const SuiteConfig& config) {
  if (input.streams.empty()) throw ParameterError("suite input has no streams");
  SuiteResult result;
  for (const NamedStream& stream : input.streams) {
    if (stream.values.empty()) throw ParameterError("stream '" + stream.name + "' is empty");
    RunOn(stream.values, stream.name, true, config, result.reports);
    if (stream.values.size() >= 4) {
      for (std::size_t q = 0; q < 4; ++q) {
        RunOn(Subsample(stream.values, q, config.subsample),
              stream.name + "/q" + std::to_string(q + 1), false, config, result.reports);
      }
    }
  }
  if (config.run_circular && input.circular_pair) {
    const auto [ix, iy] = *input.circular_pair;
    CircularOptions opts;
    opts.critical_slack = config.critical_slack;
    opts.sigma = config.sigma;
    TestReport r = CircularCorrelationTest(input.streams.at(ix).values,
                                           input.streams.at(iy).values, config.circular_lag,
                                           config.alpha_circular, opts);
    r.subject = input.streams[ix].name + "," + input.streams[iy].name;
    result.reports.push_back(std::move(r));
  }
  for (const TestReport& r : result.reports) {
    auto [it, inserted] = result.overall.emplace(r.test, r.verdict);
    if (!inserted && r.verdict == Verdict::kRejected) it->second = Verdict::kRejected;
  }
  return result;
}

}  // namespace wsnsynth
