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

// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wsnsynth/deployment.h"
#include "wsnsynth/topology.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {
namespace {

std::vector<Point> Points(std::size_t n) {
  return DeployNonGrid(n, 1000.0, 43).points;
}

const std::vector<double> kRanges = {10.0, 15.0, 20.0, 40.0, 80.0};

void BM_BuildGraphSerial(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::BuildGraph(pts, 40.0));
}

void BM_BuildGraphParallel(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildGraph(pts, 40.0));
}

void BM_IsolatedCountsSerial(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::IsolatedCounts(pts, kRanges, 0.0));
}

void BM_IsolatedCountsParallel(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IsolatedCounts(pts, kRanges, 0.0));
}

void BM_DistanceMatrixSerial(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::ComputeDistanceMatrix(pts));
}

void BM_DistanceMatrixParallel(benchmark::State& state) {
  const auto pts = Points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeDistanceMatrix(pts));
}

const double kRates[] = {1.0, 2.0, 3.0};

void BM_MinExponentialsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::MinExponentialsCheck(kRates, static_cast<std::size_t>(state.range(0))));
  }
}

void BM_MinExponentialsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinExponentialsCheck(kRates, static_cast<std::size_t>(state.range(0))));
  }
}

BENCHMARK(BM_BuildGraphSerial)->Arg(1000)->Arg(4000);
BENCHMARK(BM_BuildGraphParallel)->Arg(1000)->Arg(4000);
BENCHMARK(BM_IsolatedCountsSerial)->Arg(1000)->Arg(4000);
BENCHMARK(BM_IsolatedCountsParallel)->Arg(1000)->Arg(4000);
BENCHMARK(BM_DistanceMatrixSerial)->Arg(1000)->Arg(3000);
BENCHMARK(BM_DistanceMatrixParallel)->Arg(1000)->Arg(3000);
BENCHMARK(BM_MinExponentialsSerial)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_MinExponentialsParallel)->Arg(100000)->Arg(1000000);

}  // namespace
}  // namespace wsnsynth

BENCHMARK_MAIN();
