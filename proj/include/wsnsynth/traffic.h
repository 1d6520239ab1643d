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

#ifndef WSNSYNTH_TRAFFIC_H_
#define WSNSYNTH_TRAFFIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsnsynth/constants.h"
#include "wsnsynth/generator.h"

namespace wsnsynth {

enum class TrafficDistribution { kUniform, kExponentialTransform, kExponentialRecurrence };

// "uniform", "exp-transform", "exp-recurrence".
std::string_view ToString(TrafficDistribution dist);
TrafficDistribution ParseTrafficDistribution(std::string_view text);

struct TrafficOptions {
  double rate = 1.0;  // lambda, exponential modes only
  // Restart the recurrence from x[0] at every node instead of carrying the
  // state across rows.
  bool reseed_per_node = false;
  const ConstantTable* table = nullptr;  // nullptr selects the canonical table
};

// n x t packet sizes (row = node, column = time slot), row-major.
class TrafficMatrix {
 public:
  TrafficMatrix() = default;
  TrafficMatrix(std::size_t nodes, std::size_t slots);

  std::size_t nodes() const { return nodes_; }
  std::size_t slots() const { return slots_; }
  double& at(std::size_t node, std::size_t slot) { return values_[node * slots_ + slot]; }
  double at(std::size_t node, std::size_t slot) const { return values_[node * slots_ + slot]; }
  std::span<const double> row(std::size_t node) const {
    return std::span<const double>(values_).subspan(node * slots_, slots_);
  }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  double p_min = 0.0;
  double p_max = 0.0;
  TrafficDistribution distribution = TrafficDistribution::kUniform;
  double rate = 1.0;
  bool reseed_per_node = false;
  GeneratorParams params;  // modulus = p_max - p_min

  bool operator==(const TrafficMatrix&) const = default;

 private:
  std::size_t nodes_ = 0;
  std::size_t slots_ = 0;
  std::vector<double> values_;
};

// x[0] = table[floor(P2)], a = table[floor(x[0])], c = table[floor(x[0]) + |table|/2];
// each cell x <- (a (a x + c)) mod (P2 - P1) + P1, row-major.
// Throws ParameterError unless p_max > p_min >= 0 and nodes, slots >= 1.
TrafficMatrix TrafficUniform(std::size_t nodes, std::size_t slots, double p_min, double p_max,
                             const TrafficOptions& options = {});

// Same recurrence; each cell holds (-ln(1 - x / P2) / rate) mod (P2 - P1) + P1.
TrafficMatrix TrafficExponentialTransform(std::size_t nodes, std::size_t slots, double p_min,
                                          double p_max, const TrafficOptions& options = {});

// Diagonal recurrence over a t x t working table W (zero-initialised,
// W[0][0] = table[floor(P2)]): W[i%t][j%t] = (a W[(i-1)%t][(j-1)%t] + c)
// mod (P2 - P1) + P1 with a = table[floor(P1)], c = table[floor(W[0][0]) +
// |table|/2]. Cell (i, j) of the output is the value written at step (i, j).
TrafficMatrix TrafficExponentialRecurrence(std::size_t nodes, std::size_t slots, double p_min,
                                           double p_max, const TrafficOptions& options = {});

TrafficMatrix GenerateTraffic(TrafficDistribution dist, std::size_t nodes, std::size_t slots,
                              double p_min, double p_max, const TrafficOptions& options = {});

// Inverse CDF of Exp(rate): -ln(1 - r) / rate. Throws DomainError unless
// 0 <= r < 1, ParameterError unless rate > 0.
double ExpInverseTransform(double r, double rate);

// ln(1 - ratio) with the argument floored at 1e-12 so ratio -> 1 stays finite.
double GuardedLog1m(double ratio);

struct MinExponentialsResult {
  double empirical_rate = 0.0;  // 1 / mean of the per-draw minimum
  std::vector<double> selection_freqs;  // share of draws each index was the minimum
};

// Monte-Carlo check of min(X_1..X_n) ~ Exp(sum rates) with
// P(X_k is the minimum) = rate_k / sum rates. Draws come from inverse
// transform over a 64-bit Mersenne Twister; the work is split in fixed
// shards with independent seeds so the result does not depend on thread count.
// Throws ParameterError on fewer than 2 rates, non-positive rates or fewer
// than 1000 samples.
MinExponentialsResult MinExponentialsCheck(std::span<const double> rates, std::size_t samples,
                                           std::uint64_t seed = 1);

namespace serial {
MinExponentialsResult MinExponentialsCheck(std::span<const double> rates, std::size_t samples,
                                           std::uint64_t seed = 1);
}  // namespace serial

}  // namespace wsnsynth

#endif  // WSNSYNTH_TRAFFIC_H_
