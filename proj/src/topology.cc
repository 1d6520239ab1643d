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

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsnsynth/error.h"
#include "wsnsynth/topology.h"

namespace wsnsynth {

namespace detail {

void CheckGraphArgs(std::span<const Point> points, double range, double epsilon) {
  if (points.empty()) throw ParameterError("deployment has no nodes");
  if (points.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError("too many nodes for a radius graph");
  }
  if (!std::isfinite(range) || range <= 0.0) {
    throw ParameterError("transmission range must be positive");
  }
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw ParameterError("epsilon must be non-negative");
  }
}

void FillDegrees(RadiusGraph& g) {
  g.degrees.assign(g.node_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++g.degrees[u];
    ++g.degrees[v];
  }
}

}  // namespace detail

double Distance(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

RadiusGraph BuildGraph(std::span<const Point> points, double range, double epsilon) {
  detail::CheckGraphArgs(points, range, epsilon);
  const double limit = range + epsilon;
  const std::size_t n = points.size();

  // Per-row neighbour lists (v > u) concatenated in row order, so the edge
  // list matches the serial kernel exactly.
  std::vector<std::vector<std::uint32_t>> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (Distance(points[u], points[v]) <= limit) {
        rows[u].push_back(static_cast<std::uint32_t>(v));
      }
    }
  }

  RadiusGraph g;
  g.node_count = n;
  g.transmission_range = range;
  g.epsilon = epsilon;
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  g.edges.reserve(total);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint32_t v : rows[u]) g.edges.emplace_back(static_cast<std::uint32_t>(u), v);
  }
  detail::FillDegrees(g);
  return g;
}

RadiusGraph BuildGraph(const Deployment& deployment, double range, double epsilon) {
  return BuildGraph(std::span<const Point>(deployment.points), range, epsilon);
}

std::size_t IsolatedCount(const RadiusGraph& graph) {
  return static_cast<std::size_t>(
      std::count(graph.degrees.begin(), graph.degrees.end(), std::uint32_t{0}));
}

std::vector<std::size_t> IsolatedCounts(std::span<const Point> points,
                                        std::span<const double> ranges, double epsilon) {
  std::vector<std::size_t> counts;
  for (double r : ranges) {
    detail::CheckGraphArgs(points, r, epsilon);
    const double limit = r + epsilon;
    const auto n = static_cast<std::ptrdiff_t>(points.size());
    std::size_t isolated = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : isolated)
    for (std::ptrdiff_t u = 0; u < n; ++u) {
      bool alone = true;
      for (std::ptrdiff_t v = 0; v < n && alone; ++v) {
        if (v != u && Distance(points[u], points[v]) <= limit) alone = false;
      }
      if (alone) ++isolated;
    }
    counts.push_back(isolated);
  }
  return counts;
}

DistanceMatrix ComputeDistanceMatrix(std::span<const Point> points) {
  if (points.empty()) throw ParameterError("deployment has no nodes");
  const std::size_t n = points.size();
  DistanceMatrix m(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = Distance(points[i], points[j]);
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

DegreeStats ComputeDegreeStats(const RadiusGraph& graph) {
  DegreeStats s;
  if (graph.degrees.empty()) return s;
  const auto [lo, hi] = std::minmax_element(graph.degrees.begin(), graph.degrees.end());
  s.min = *lo;
  s.max = *hi;
  s.mean = 2.0 * static_cast<double>(graph.edges.size()) / static_cast<double>(graph.node_count);
  s.isolated = IsolatedCount(graph);
  return s;
}

}  // namespace wsnsynth
