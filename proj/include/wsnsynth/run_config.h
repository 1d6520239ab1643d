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

#ifndef WSNSYNTH_RUN_CONFIG_H_
#define WSNSYNTH_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsnsynth/deployment.h"
#include "wsnsynth/io.h"
#include "wsnsynth/suite.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {

enum class Command { kDeploy, kTraffic, kAnalyze, kValidate, kReport };

std::string_view ToString(Command command);
Command ParseCommand(std::string_view text);

// Every CLI option with its default. Serialises to JSON so a run can be
// recorded next to its output and replayed with --config.
struct RunConfig {
  Command command = Command::kDeploy;

  // deploy
  std::uint64_t seed = 43;
  std::size_t nodes = 100;
  double area = 100.0;
  std::optional<double> area_height;
  DeploymentMode mode = DeploymentMode::kNonGrid;
  YIncrement y_increment = YIncrement::kA;

  // traffic
  std::size_t slots = 5;
  double p_min = 2.0;
  double p_max = 10.0;
  TrafficDistribution distribution = TrafficDistribution::kUniform;
  double rate = 1.0;
  bool reseed_per_node = false;

  // analyze / report
  std::vector<double> ranges = {10.0, 15.0, 20.0};
  double epsilon = 0.0;
  std::vector<std::uint64_t> seeds = {0,  2,  3,  5,  7,   12,  14,  24,  43,  59,
                                      65, 70, 76, 87, 144, 147, 192, 251, 365, 1111};

  // validate
  SuiteConfig suite;

  // files
  std::string input;
  std::string output;
  FileFormat format = FileFormat::kCsv;
  std::string constants_file;

  bool operator==(const RunConfig&) const;
};

Json RunConfigToJson(const RunConfig& config);
// Missing keys keep their defaults; unknown values throw ParseError.
RunConfig RunConfigFromJson(const Json& j);

}  // namespace wsnsynth

#endif  // WSNSYNTH_RUN_CONFIG_H_
