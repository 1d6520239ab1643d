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

#ifndef WSNSYNTH_CRITICAL_VALUES_H_
#define WSNSYNTH_CRITICAL_VALUES_H_

#include <array>
#include <cstddef>

namespace wsnsynth {

// Significance levels with built-in critical values.
inline constexpr std::array<double, 3> kTabulatedAlphas = {0.001, 0.01, 0.05};

bool IsTabulatedAlpha(double alpha);

// One-sample two-sided Kolmogorov-Smirnov critical value D_alpha. Exact
// quantiles of D_n for n <= 35; c(alpha) / sqrt(n) above that with
// c = 1.95, 1.63, 1.36 for alpha = 0.001, 0.01, 0.05.
// Throws ParameterError for n == 0 or an untabulated alpha.
double KsCriticalValue(std::size_t n, double alpha);

// Upper-alpha quantile of the chi-square distribution with `dof` degrees of
// freedom. Throws ParameterError for dof == 0 or an untabulated alpha.
double Chi2CriticalValue(std::size_t dof, double alpha);

// z such that P(|Z| > z) = alpha for standard normal Z.
double NormalTwoSidedCriticalValue(double alpha);

}  // namespace wsnsynth

#endif  // WSNSYNTH_CRITICAL_VALUES_H_
