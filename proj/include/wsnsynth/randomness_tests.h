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

#ifndef WSNSYNTH_RANDOMNESS_TESTS_H_
#define WSNSYNTH_RANDOMNESS_TESTS_H_

// Uniformity and independence tests over unit-interval samples: one-sample
// Kolmogorov-Smirnov, chi-square goodness of fit, lagged autocorrelation
// and circular correlation. Verdicts are threshold comparisons against
// tabulated critical values; no p-values are computed.
//
// Chi-square direction: a sample is Satisfied when its statistic is at or
// below the critical value (the usual reading, and the only one under which
// large deviations are rejected).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsnsynth {

enum class TestKind { kKs, kChi2, kAutocorrelation, kCircular };
enum class Verdict { kSatisfied, kRejected };

std::string_view ToString(TestKind kind);  // "ks", "chi2", "autocorrelation", "circular"
TestKind ParseTestKind(std::string_view text);
std::string_view ToString(Verdict verdict);  // "Satisfied", "Rejected"
Verdict ParseVerdict(std::string_view text);

// (n or degrees of freedom, alpha) -> critical value.
using CriticalValueFn = std::function<double(std::size_t, double)>;

struct TestOptions {
  // Experimental slack added to the critical value before comparing. Zero
  // reproduces the plain test.
  double critical_slack = 0.0;
  // Replaces the built-in tables; required for alphas outside {0.001, 0.01, 0.05}.
  CriticalValueFn critical_value;
};

struct TestReport {
  TestKind test = TestKind::kKs;
  std::string subject;  // e.g. "x", "x/q2", "traffic"
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.0;
  Verdict verdict = Verdict::kSatisfied;
  std::size_t sample_size = 0;
  std::map<std::string, double> details;

  bool satisfied() const { return verdict == Verdict::kSatisfied; }
};

// (v - lower) / (upper - lower). Throws RangeError if any v is outside
// [lower, upper), ParameterError if upper <= lower.
std::vector<double> Normalize(std::span<const double> sample, double lower, double upper);

// How a sample is split into four sub-samples.
enum class SubsampleScheme {
  kContiguous,  // quarter k = [k*floor(n/4), (k+1)*floor(n/4)), last absorbs remainder
  kStrided,     // quarter k = elements whose index is k mod 4
};

std::string_view ToString(SubsampleScheme scheme);
SubsampleScheme ParseSubsampleScheme(std::string_view text);

// Throws ParameterError for index > 3, SampleSizeError for fewer than 4 values.
std::vector<double> Subsample(std::span<const double> sample, std::size_t index,
                              SubsampleScheme scheme = SubsampleScheme::kContiguous);

struct KsStatistic {
  double d_plus = 0.0;   // max_i (i/n - r_i)
  double d_minus = 0.0;  // max_i (r_i - (i-1)/n)
  double d = 0.0;        // max(d_plus, d_minus)
};

// Against the U[0,1) CDF; no size or range checks.
KsStatistic ComputeKsStatistic(std::span<const double> sample);

// Needs at least 5 values in [0, 1).
TestReport KsTest(std::span<const double> sample, double alpha, const TestOptions& options = {});

// Counts per equal-width class of [0, 1); values equal to 1 - ulp land in
// the last class.
std::vector<std::uint64_t> ClassCounts(std::span<const double> sample, std::size_t classes);

// sum_i (F_i - N/k)^2 / (N/k), evaluated as sum_i (k F_i - N)^2 / (k N) in
// integers and divided once.
double Chi2Statistic(std::span<const std::uint64_t> counts);

// Needs classes >= 2 and at least 5 * classes values in [0, 1).
TestReport Chi2Test(std::span<const double> sample, std::size_t classes, double alpha,
                    const TestOptions& options = {});

// Standard deviation used to normalise rho.
enum class SigmaForm {
  kAsPrinted,  // sqrt((13M + 7) / (12 (M + 1)))
  kClassical,  // sqrt(13M + 7) / (12 (M + 1))
};

// Index pattern of the lag products.
enum class LagIndexing {
  kStandard,   // R[i + k m] * R[i + (k+1) m]
  kAsPrinted,  // R[i + k M] * R[i + (k+1) m]; terms past the end count as zero
};

std::string_view ToString(SigmaForm form);  // "as-printed", "classical"
SigmaForm ParseSigmaForm(std::string_view text);
std::string_view ToString(LagIndexing indexing);  // "standard", "as-printed"
LagIndexing ParseLagIndexing(std::string_view text);

struct AutocorrelationOptions : TestOptions {
  SigmaForm sigma = SigmaForm::kAsPrinted;
  LagIndexing indexing = LagIndexing::kStandard;
};

// `start` is 1-based. M is the largest integer with start + (M+1) lag <= n;
// throws SampleSizeError unless M >= 1. statistic = |Z0|, Z0 = rho / sigma,
// compared with the two-sided normal quantile z_{alpha/2}.
TestReport AutocorrelationTest(std::span<const double> sample, std::size_t start,
                               std::size_t lag, double alpha,
                               const AutocorrelationOptions& options = {});

struct CircularOptions : TestOptions {
  SigmaForm sigma = SigmaForm::kAsPrinted;
};

// rho = (1/N) sum_k x[k] y[(k - lag) mod N] - 0.25, sigma over N, two-sided
// normal comparison of |rho / sigma|. Throws ParameterError on length
// mismatch or lag >= N, SampleSizeError for N < 2.
TestReport CircularCorrelationTest(std::span<const double> x, std::span<const double> y,
                                   std::size_t lag, double alpha,
                                   const CircularOptions& options = {});

}  // namespace wsnsynth

#endif  // WSNSYNTH_RANDOMNESS_TESTS_H_
