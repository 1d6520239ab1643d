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

#ifndef WSNSYNTH_DEPLOYMENT_H_
#define WSNSYNTH_DEPLOYMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsnsynth/constants.h"
#include "wsnsynth/generator.h"

namespace wsnsynth {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

enum class DeploymentMode { kNonGrid, kGrid };

// Increment used by the Y recurrence. The reference algorithm uses the
// multiplier (y <- a*y + a); kC gives the symmetric y <- a*y + c variant.
enum class YIncrement { kA, kC };

std::string_view ToString(DeploymentMode mode);
DeploymentMode ParseDeploymentMode(std::string_view text);
std::string_view ToString(YIncrement inc);
YIncrement ParseYIncrement(std::string_view text);

struct DeploymentOptions {
  YIncrement y_increment = YIncrement::kA;
  // Rectangular area: Y is scaled by height / width after generation.
  std::optional<double> height;
  // Replaces the seed-derived (a, c). Equal values need allow_degenerate.
  std::optional<Constants> constants;
  bool allow_degenerate = false;
  const ConstantTable* table = nullptr;  // nullptr selects the canonical table
};

// Node coordinates plus the provenance needed to regenerate them.
struct Deployment {
  std::vector<Point> points;
  double area_width = 0.0;
  double area_height = 0.0;
  DeploymentMode mode = DeploymentMode::kNonGrid;
  std::uint64_t seed = 0;
  // Recurrence parameters; modulus is the area (non-grid) or half of it (grid).
  GeneratorParams params;
  YIncrement y_increment = YIncrement::kA;

  std::size_t node_count() const { return points.size(); }
  bool operator==(const Deployment&) const = default;
};

// X[i] = (a X[i-1] + c) mod area, Y[i] = (a Y[i-1] + a) mod area,
// X[0] = Y[0] = seed; point i = (X[i], Y[i]) for i = 1..node_count.
// Throws ParameterError on node_count == 0 or area <= 0.
Deployment DeployNonGrid(std::size_t node_count, double area, std::uint64_t seed,
                         const DeploymentOptions& options = {});

// Quadrant layout: ceil(node_count / 4) base points from the same recurrences
// with modulus area / 2, then the base block translated by (+m1, +m1),
// (+m1, 0) and (0, +m1). The last block is truncated to reach node_count.
Deployment DeployGrid(std::size_t node_count, double area, std::uint64_t seed,
                      const DeploymentOptions& options = {});

Deployment Deploy(DeploymentMode mode, std::size_t node_count, double area, std::uint64_t seed,
                  const DeploymentOptions& options = {});

}  // namespace wsnsynth

#endif  // WSNSYNTH_DEPLOYMENT_H_
