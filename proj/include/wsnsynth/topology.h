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

#ifndef WSNSYNTH_TOPOLOGY_H_
#define WSNSYNTH_TOPOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wsnsynth/deployment.h"

namespace wsnsynth {

// Unit-disk graph over a deployment: nodes u != v share an edge iff their
// Euclidean distance is <= range + epsilon. Node ids are 0-based here and
// 1-based in exported files.
struct RadiusGraph {
  std::size_t node_count = 0;
  double transmission_range = 0.0;
  double epsilon = 0.0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, lexicographic
  std::vector<std::uint32_t> degrees;

  bool operator==(const RadiusGraph&) const = default;
};

// Row-major symmetric n x n distance matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct DegreeStats {
  std::uint32_t min = 0;
  std::uint32_t max = 0;
  double mean = 0.0;
  std::size_t isolated = 0;
};

double Distance(const Point& p, const Point& q);

// Throws ParameterError on an empty point set, range <= 0 or epsilon < 0.
RadiusGraph BuildGraph(std::span<const Point> points, double range, double epsilon = 0.0);
RadiusGraph BuildGraph(const Deployment& deployment, double range, double epsilon = 0.0);

std::size_t IsolatedCount(const RadiusGraph& graph);

// Isolated-node count for each range without materialising the edge lists.
std::vector<std::size_t> IsolatedCounts(std::span<const Point> points,
                                        std::span<const double> ranges, double epsilon = 0.0);

DistanceMatrix ComputeDistanceMatrix(std::span<const Point> points);

DegreeStats ComputeDegreeStats(const RadiusGraph& graph);

// Single-threaded reference implementations; results are identical to the
// OpenMP kernels above.
namespace serial {
RadiusGraph BuildGraph(std::span<const Point> points, double range, double epsilon = 0.0);
std::vector<std::size_t> IsolatedCounts(std::span<const Point> points,
                                        std::span<const double> ranges, double epsilon = 0.0);
DistanceMatrix ComputeDistanceMatrix(std::span<const Point> points);
}  // namespace serial

}  // namespace wsnsynth

#endif  // WSNSYNTH_TOPOLOGY_H_
