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

#ifndef WSNSYNTH_IO_H_
#define WSNSYNTH_IO_H_

// File formats.
//
//   deployment CSV   node_id,x,y               (node_id from 1)
//   traffic CSV      node_id,t1,...,tT
//   edge-list CSV    u,v,distance              (1-based ids, u < v)
//   JSON             {"meta": {...}, "points" | "values" | "edges": ...}
//
// Numbers are written in the shortest decimal form that parses back to the
// same double, so every format round-trips losslessly.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "wsnsynth/constants.h"
#include "wsnsynth/deployment.h"
#include "wsnsynth/randomness_tests.h"
#include "wsnsynth/topology.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {

using Json = nlohmann::ordered_json;

std::string FormatDouble(double value);
// Throws ParseError unless the whole of `text` is a finite number.
double ParseDouble(std::string_view text);

std::string DeploymentToCsv(const Deployment& deployment);
Json DeploymentToJson(const Deployment& deployment);
std::string TrafficToCsv(const TrafficMatrix& traffic);
Json TrafficToJson(const TrafficMatrix& traffic);
std::string GraphToCsv(const RadiusGraph& graph, std::span<const Point> points);
Json GraphToJson(const RadiusGraph& graph, std::span<const Point> points);
Json ReportToJson(const TestReport& report);
Json ReportsToJson(std::span<const TestReport> reports);
TestReport ReportFromJson(const Json& j);
// Flat scatter plot, one circle per node; optional range circles.
std::string DeploymentToSvg(const Deployment& deployment, std::optional<double> range = {});

// CSV carries no metadata: the area comes from the caller, provenance is left
// default. Throws ParseError on a bad header, short row or non-numeric cell.
Deployment DeploymentFromCsv(std::string_view text, double area_width,
                             std::optional<double> area_height = {});
Deployment DeploymentFromJson(const Json& j);
TrafficMatrix TrafficFromCsv(std::string_view text, double p_min, double p_max);
TrafficMatrix TrafficFromJson(const Json& j);

Json ConstantTableToJson(const ConstantTable& table);
ConstantTable ConstantTableFromJson(const Json& j);

enum class FileFormat { kCsv, kJson, kSvg };
std::string_view ToString(FileFormat format);
FileFormat ParseFileFormat(std::string_view text);

using Dataset = std::variant<Deployment, TrafficMatrix>;

struct CsvDefaults {
  double area = 100.0;
  std::optional<double> area_height;
  double p_min = 2.0;
  double p_max = 10.0;
};

// Detects JSON by a leading '{', otherwise reads CSV and tells deployments
// from traffic by the header.
Dataset ParseDataset(std::string_view text, const CsvDefaults& defaults = {});

std::string ReadFile(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace wsnsynth

#endif  // WSNSYNTH_IO_H_
