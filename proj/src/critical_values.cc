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

#include "wsnsynth/critical_values.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <string>

#include "wsnsynth/error.h"

namespace wsnsynth {

namespace {

// Column for alpha in kTabulatedAlphas, or -1.
int AlphaColumn(double alpha) {
  for (std::size_t i = 0; i < kTabulatedAlphas.size(); ++i) {
    if (std::abs(alpha - kTabulatedAlphas[i]) < 1e-12) return static_cast<int>(i);
  }
  return -1;
}

int RequireAlpha(double alpha) {
  const int col = AlphaColumn(alpha);
  if (col < 0) {
    throw ParameterError("no built-in critical value for alpha=" + std::to_string(alpha) +
                         " (supported: 0.001, 0.01, 0.05)");
  }
  return col;
}

// Exact upper quantiles of the one-sample KS statistic D_n, columns
// alpha = 0.001, 0.01, 0.05.
constexpr double kKsExact[35][3] = {
    {0.99950, 0.99500, 0.97500}, {0.97764, 0.92929, 0.84189}, {0.92063, 0.82900, 0.70760},
    {0.85047, 0.73424, 0.62394}, {0.78137, 0.66853, 0.56328}, {0.72479, 0.61661, 0.51926},
    {0.67930, 0.57581, 0.48342}, {0.64098, 0.54179, 0.45427}, {0.60846, 0.51332, 0.43001},
    {0.58042, 0.48893, 0.40925}, {0.55588, 0.46770, 0.39122}, {0.53422, 0.44905, 0.37543},
    {0.51490, 0.43247, 0.36143}, {0.49753, 0.41762, 0.34890}, {0.48182, 0.40420, 0.33760},
    {0.46750, 0.39201, 0.32733}, {0.45440, 0.38086, 0.31796}, {0.44234, 0.37062, 0.30936},
    {0.43119, 0.36117, 0.30143}, {0.42085, 0.35241, 0.29408}, {0.41122, 0.34426, 0.28724},
    {0.40223, 0.33666, 0.28087}, {0.39380, 0.32954, 0.27490}, {0.38588, 0.32286, 0.26931},
    {0.37843, 0.31657, 0.26404}, {0.37139, 0.31063, 0.25907}, {0.36473, 0.30502, 0.25438},
    {0.35842, 0.29971, 0.24993}, {0.35242, 0.29466, 0.24571}, {0.34672, 0.28986, 0.24170},
    {0.34129, 0.28529, 0.23788}, {0.33611, 0.28094, 0.23424}, {0.33115, 0.27677, 0.23076},
    {0.32641, 0.27279, 0.22743}, {0.32187, 0.26897, 0.22425},
};

constexpr double kKsAsymptotic[3] = {1.95, 1.63, 1.36};

}  // namespace

bool IsTabulatedAlpha(double alpha) { return AlphaColumn(alpha) >= 0; }

double KsCriticalValue(std::size_t n, double alpha) {
  const int col = RequireAlpha(alpha);
  if (n == 0) throw ParameterError("KS critical value needs n >= 1");
  if (n <= 35) return kKsExact[n - 1][col];
  return kKsAsymptotic[col] / std::sqrt(static_cast<double>(n));
}

double Chi2CriticalValue(std::size_t dof, double alpha) {
  RequireAlpha(alpha);
  if (dof == 0) throw ParameterError("chi-square critical value needs dof >= 1");
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double NormalTwoSidedCriticalValue(double alpha) {
  RequireAlpha(alpha);
  const boost::math::normal dist;
  return boost::math::quantile(boost::math::complement(dist, alpha / 2.0));
}

}  // namespace wsnsynth
