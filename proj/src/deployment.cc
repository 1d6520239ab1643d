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

#include "wsnsynth/deployment.h"

#include <cmath>
#include <string>

#include "wsnsynth/error.h"

namespace wsnsynth {

std::string_view ToString(DeploymentMode mode) {
  return mode == DeploymentMode::kGrid ? "grid" : "non-grid";
}

DeploymentMode ParseDeploymentMode(std::string_view text) {
  if (text == "grid") return DeploymentMode::kGrid;
  if (text == "non-grid" || text == "nongrid") return DeploymentMode::kNonGrid;
  throw ParameterError("unknown deployment mode '" + std::string(text) + "'");
}

std::string_view ToString(YIncrement inc) { return inc == YIncrement::kC ? "c" : "a"; }

YIncrement ParseYIncrement(std::string_view text) {
  if (text == "a") return YIncrement::kA;
  if (text == "c") return YIncrement::kC;
  throw ParameterError("y increment must be 'a' or 'c', got '" + std::string(text) + "'");
}

namespace {

void CheckArgs(std::size_t node_count, double area, const DeploymentOptions& options) {
  if (node_count == 0) throw ParameterError("node count must be at least 1");
  if (!std::isfinite(area) || area <= 0.0) throw ParameterError("area must be positive");
  if (options.height && (!std::isfinite(*options.height) || *options.height <= 0.0)) {
    throw ParameterError("area height must be positive");
  }
}

GeneratorParams BuildParams(std::uint64_t seed, double modulus,
                            const DeploymentOptions& options) {
  const ConstantTable& table = options.table ? *options.table : ConstantTable::Canonical();
  const Constants k = options.constants ? *options.constants : DeriveConstants(seed, table);
  GeneratorParams params{static_cast<double>(seed), k.a, k.c, modulus,
                         options.allow_degenerate};
  params.Validate();
  return params;
}

// Runs both coordinate recurrences for `count` steps.
std::vector<Point> RunRecurrences(const GeneratorParams& params, YIncrement y_increment,
                                  std::size_t count) {
  GeneratorParams y_params = params;
  y_params.c = y_increment == YIncrement::kA ? params.a : params.c;
  y_params.allow_degenerate = true;  // y <- a*y + a is the reference form
  LcgStream xs(params);
  LcgStream ys(y_params);
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = xs.Next();
    points.push_back({x, ys.Next()});
  }
  return points;
}

void ApplyHeight(Deployment& d, const DeploymentOptions& options) {
  d.area_height = d.area_width;
  if (!options.height || *options.height == d.area_width) return;
  const double scale = *options.height / d.area_width;
  for (Point& p : d.points) p.y *= scale;
  d.area_height = *options.height;
}

}  // namespace

Deployment DeployNonGrid(std::size_t node_count, double area, std::uint64_t seed,
                         const DeploymentOptions& options) {
  CheckArgs(node_count, area, options);
  Deployment d;
  d.mode = DeploymentMode::kNonGrid;
  d.seed = seed;
  d.area_width = area;
  d.y_increment = options.y_increment;
  d.params = BuildParams(seed, area, options);
  d.points = RunRecurrences(d.params, options.y_increment, node_count);
  ApplyHeight(d, options);
  return d;
}

Deployment DeployGrid(std::size_t node_count, double area, std::uint64_t seed,
                      const DeploymentOptions& options) {
  CheckArgs(node_count, area, options);
  const double m1 = area / 2.0;
  const std::size_t block = (node_count + 3) / 4;

  Deployment d;
  d.mode = DeploymentMode::kGrid;
  d.seed = seed;
  d.area_width = area;
  d.y_increment = options.y_increment;
  d.params = BuildParams(seed, m1, options);

  const std::vector<Point> base = RunRecurrences(d.params, options.y_increment, block);
  const Point offsets[4] = {{0.0, 0.0}, {m1, m1}, {m1, 0.0}, {0.0, m1}};
  d.points.reserve(node_count);
  for (const Point& off : offsets) {
    for (const Point& p : base) {
      if (d.points.size() == node_count) break;
      d.points.push_back({p.x + off.x, p.y + off.y});
    }
  }
  ApplyHeight(d, options);
  return d;
}

Deployment Deploy(DeploymentMode mode, std::size_t node_count, double area, std::uint64_t seed,
                  const DeploymentOptions& options) {
  return mode == DeploymentMode::kGrid ? DeployGrid(node_count, area, seed, options)
                                       : DeployNonGrid(node_count, area, seed, options);
}

}  // namespace wsnsynth
