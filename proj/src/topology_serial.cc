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

// Serial reference kernels. Kept deliberately plain: they are the oracle the
// OpenMP kernels in topology.cc are checked against.

#include "wsnsynth/error.h"
#include "wsnsynth/topology.h"

namespace wsnsynth {

namespace detail {
void CheckGraphArgs(std::span<const Point> points, double range, double epsilon);
void FillDegrees(RadiusGraph& g);
}  // namespace detail

namespace serial {

RadiusGraph BuildGraph(std::span<const Point> points, double range, double epsilon) {
  detail::CheckGraphArgs(points, range, epsilon);
  const double limit = range + epsilon;
  RadiusGraph g;
  g.node_count = points.size();
  g.transmission_range = range;
  g.epsilon = epsilon;
  for (std::size_t u = 0; u < points.size(); ++u) {
    for (std::size_t v = u + 1; v < points.size(); ++v) {
      if (Distance(points[u], points[v]) <= limit) {
        g.edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      }
    }
  }
  detail::FillDegrees(g);
  return g;
}

std::vector<std::size_t> IsolatedCounts(std::span<const Point> points,
                                        std::span<const double> ranges, double epsilon) {
  std::vector<std::size_t> counts;
  for (double r : ranges) {
    const RadiusGraph g = serial::BuildGraph(points, r, epsilon);
    std::size_t isolated = 0;
    for (std::uint32_t d : g.degrees) isolated += d == 0 ? 1 : 0;
    counts.push_back(isolated);
  }
  return counts;
}

DistanceMatrix ComputeDistanceMatrix(std::span<const Point> points) {
  if (points.empty()) throw ParameterError("deployment has no nodes");
  DistanceMatrix m(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j) m(i, j) = Distance(points[i], points[j]);
    }
  }
  return m;
}

}  // namespace serial

}  // namespace wsnsynth
