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

#include "wsnsynth/traffic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "wsnsynth/error.h"

namespace wsnsynth {

std::string_view ToString(TrafficDistribution dist) {
  switch (dist) {
    case TrafficDistribution::kUniform:
      return "uniform";
    case TrafficDistribution::kExponentialTransform:
      return "exp-transform";
    case TrafficDistribution::kExponentialRecurrence:
      return "exp-recurrence";
  }
  return "uniform";
}

TrafficDistribution ParseTrafficDistribution(std::string_view text) {
  if (text == "uniform") return TrafficDistribution::kUniform;
  if (text == "exp-transform" || text == "exponential-transform") {
    return TrafficDistribution::kExponentialTransform;
  }
  if (text == "exp-recurrence" || text == "exponential-recurrence") {
    return TrafficDistribution::kExponentialRecurrence;
  }
  throw ParameterError("unknown traffic distribution '" + std::string(text) + "'");
}

TrafficMatrix::TrafficMatrix(std::size_t nodes, std::size_t slots)
    : nodes_(nodes), slots_(slots), values_(nodes * slots, 0.0) {}

namespace {

void CheckArgs(std::size_t nodes, std::size_t slots, double p_min, double p_max) {
  if (nodes == 0 || slots == 0) throw ParameterError("nodes and slots must be at least 1");
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || p_min < 0.0) {
    throw ParameterError("packet bounds must be finite and p_min >= 0");
  }
  if (p_max <= p_min) throw ParameterError("p_max must be greater than p_min");
}

void CheckRate(double rate) {
  if (!std::isfinite(rate) || rate <= 0.0) throw ParameterError("rate must be positive");
}

const ConstantTable& TableOf(const TrafficOptions& options) {
  return options.table ? *options.table : ConstantTable::Canonical();
}

// Shared state of the uniform and transform generators.
GeneratorParams UniformParams(double p_min, double p_max, const ConstantTable& table) {
  const double x0 = table.Wrapped(FloorIndex(p_max));
  const std::uint64_t idx = FloorIndex(x0);
  GeneratorParams params{x0, table.Wrapped(idx), table.Wrapped(idx + table.half()),
                         p_max - p_min, false};
  params.Validate();
  return params;
}

// x <- (a (a x + c)) mod (P2 - P1) + P1
double UniformStep(double x, const GeneratorParams& p, double p_min) {
  const double inner = p.a * x + p.c;
  return RealMod(p.a * inner, p.modulus) + p_min;
}

template <typename CellFn>
TrafficMatrix RunScalarRecurrence(std::size_t nodes, std::size_t slots, double p_min,
                                  double p_max, const TrafficOptions& options,
                                  TrafficDistribution dist, CellFn cell) {
  TrafficMatrix m(nodes, slots);
  m.p_min = p_min;
  m.p_max = p_max;
  m.distribution = dist;
  m.rate = options.rate;
  m.reseed_per_node = options.reseed_per_node;
  m.params = UniformParams(p_min, p_max, TableOf(options));
  double x = m.params.seed;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (options.reseed_per_node) x = m.params.seed;
    for (std::size_t j = 0; j < slots; ++j) {
      x = UniformStep(x, m.params, p_min);
      m.at(i, j) = cell(x);
    }
  }
  return m;
}

}  // namespace

TrafficMatrix TrafficUniform(std::size_t nodes, std::size_t slots, double p_min, double p_max,
                             const TrafficOptions& options) {
  CheckArgs(nodes, slots, p_min, p_max);
  return RunScalarRecurrence(nodes, slots, p_min, p_max, options, TrafficDistribution::kUniform,
                             [](double x) { return x; });
}

TrafficMatrix TrafficExponentialTransform(std::size_t nodes, std::size_t slots, double p_min,
                                          double p_max, const TrafficOptions& options) {
  CheckArgs(nodes, slots, p_min, p_max);
  CheckRate(options.rate);
  const double span = p_max - p_min;
  const double rate = options.rate;
  return RunScalarRecurrence(
      nodes, slots, p_min, p_max, options, TrafficDistribution::kExponentialTransform,
      [=](double x) { return RealMod(-GuardedLog1m(x / p_max) / rate, span) + p_min; });
}

TrafficMatrix TrafficExponentialRecurrence(std::size_t nodes, std::size_t slots, double p_min,
                                           double p_max, const TrafficOptions& options) {
  CheckArgs(nodes, slots, p_min, p_max);
  const ConstantTable& table = TableOf(options);
  const double x00 = table.Wrapped(FloorIndex(p_max));
  GeneratorParams params{x00, table.Wrapped(FloorIndex(p_min)),
                         table.Wrapped(FloorIndex(x00) + table.half()), p_max - p_min,
                         /*allow_degenerate=*/true};  // the slots are independent here
  params.Validate();

  TrafficMatrix m(nodes, slots);
  m.p_min = p_min;
  m.p_max = p_max;
  m.distribution = TrafficDistribution::kExponentialRecurrence;
  m.rate = options.rate;
  m.reseed_per_node = options.reseed_per_node;
  m.params = params;

  const std::size_t t = slots;
  std::vector<double> work(t * t, 0.0);
  auto w = [&](std::size_t r, std::size_t c) -> double& { return work[r * t + c]; };
  w(0, 0) = x00;
  // Loop indices are 1-based as in the reference loop: i = 1..n, j = 1..t.
  for (std::size_t i = 1; i <= nodes; ++i) {
    if (options.reseed_per_node && i > 1) {
      std::fill(work.begin(), work.end(), 0.0);
      w(0, 0) = x00;
    }
    for (std::size_t j = 1; j <= t; ++j) {
      const double prev = w((i - 1) % t, (j - 1) % t);
      const double next = RealMod(params.a * prev + params.c, params.modulus) + p_min;
      w(i % t, j % t) = next;
      m.at(i - 1, j - 1) = next;
    }
  }
  return m;
}

TrafficMatrix GenerateTraffic(TrafficDistribution dist, std::size_t nodes, std::size_t slots,
                              double p_min, double p_max, const TrafficOptions& options) {
  switch (dist) {
    case TrafficDistribution::kUniform:
      return TrafficUniform(nodes, slots, p_min, p_max, options);
    case TrafficDistribution::kExponentialTransform:
      return TrafficExponentialTransform(nodes, slots, p_min, p_max, options);
    case TrafficDistribution::kExponentialRecurrence:
      return TrafficExponentialRecurrence(nodes, slots, p_min, p_max, options);
  }
  throw ParameterError("unknown traffic distribution");
}

double GuardedLog1m(double ratio) {
  constexpr double kFloor = 1e-12;
  const double arg = ratio >= 1.0 - kFloor ? kFloor : 1.0 - ratio;
  return std::log(arg);
}

double ExpInverseTransform(double r, double rate) {
  CheckRate(rate);
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("inverse transform needs 0 <= r < 1");
  return -std::log1p(-r) / rate;
}

namespace {

constexpr std::size_t kShards = 64;

struct ShardTally {
  double min_sum = 0.0;
  std::vector<std::uint64_t> wins;
};

void CheckRates(std::span<const double> rates, std::size_t samples) {
  if (rates.size() < 2) throw ParameterError("need at least two rates");
  for (double r : rates) CheckRate(r);
  if (samples < 1000) throw ParameterError("need at least 1000 samples");
}

ShardTally RunShard(std::span<const double> rates, std::size_t begin, std::size_t end,
                    std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  std::mt19937_64 rng(seq);
  ShardTally tally;
  tally.wins.assign(rates.size(), 0);
  for (std::size_t s = begin; s < end; ++s) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < rates.size(); ++k) {
      // 53 random bits -> [0, 1)
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double x = ExpInverseTransform(u, rates[k]);
      if (x < best) {
        best = x;
        best_k = k;
      }
    }
    tally.min_sum += best;
    ++tally.wins[best_k];
  }
  return tally;
}

MinExponentialsResult Merge(const std::vector<ShardTally>& tallies, std::size_t rate_count,
                            std::size_t samples) {
  double min_sum = 0.0;
  std::vector<std::uint64_t> wins(rate_count, 0);
  for (const ShardTally& t : tallies) {
    min_sum += t.min_sum;
    for (std::size_t k = 0; k < rate_count; ++k) wins[k] += t.wins[k];
  }
  MinExponentialsResult result;
  result.empirical_rate = static_cast<double>(samples) / min_sum;
  for (std::uint64_t w : wins) {
    result.selection_freqs.push_back(static_cast<double>(w) / static_cast<double>(samples));
  }
  return result;
}

std::size_t ShardBegin(std::size_t shard, std::size_t samples) {
  return shard * samples / kShards;
}

}  // namespace

MinExponentialsResult MinExponentialsCheck(std::span<const double> rates, std::size_t samples,
                                           std::uint64_t seed) {
  CheckRates(rates, samples);
  std::vector<ShardTally> tallies(kShards);
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < kShards; ++k) {
    tallies[k] = RunShard(rates, ShardBegin(k, samples), ShardBegin(k + 1, samples), seed, k);
  }
  return Merge(tallies, rates.size(), samples);
}

namespace serial {

MinExponentialsResult MinExponentialsCheck(std::span<const double> rates, std::size_t samples,
                                           std::uint64_t seed) {
  CheckRates(rates, samples);
  std::vector<ShardTally> tallies;
  for (std::size_t k = 0; k < kShards; ++k) {
    tallies.push_back(
        RunShard(rates, ShardBegin(k, samples), ShardBegin(k + 1, samples), seed, k));
  }
  return Merge(tallies, rates.size(), samples);
}

}  // namespace serial

}  // namespace wsnsynth
