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

#include "wsnsynth/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "wsnsynth/error.h"

#ifndef WSNSYNTH_VERSION
#define WSNSYNTH_VERSION "dev"
#endif

namespace wsnsynth {

std::string FormatDouble(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double ParseDouble(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

// Every row written by this library ends in a newline, so a missing final
// newline means the file was cut short, possibly inside a number.
std::vector<std::string_view> SplitLines(std::string_view text) {
  if (!text.empty() && text.back() != '\n') {
    throw ParseError("CSV does not end with a newline (truncated file?)");
  }
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const std::size_t comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

void CheckNodeId(std::string_view field, std::size_t expected, std::size_t line_no) {
  const double id = ParseDouble(field);
  if (id != static_cast<double>(expected)) {
    throw ParseError("line " + std::to_string(line_no) + ": expected node_id " +
                     std::to_string(expected));
  }
}

Json BaseMeta(std::string_view kind) {
  Json meta;
  meta["kind"] = kind;
  meta["tool"] = "wsnsynth";
  meta["tool_version"] = WSNSYNTH_VERSION;
  return meta;
}

template <typename T>
T Require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string DeploymentToCsv(const Deployment& deployment) {
  std::string out = "node_id,x,y\n";
  for (std::size_t i = 0; i < deployment.points.size(); ++i) {
    const Point& p = deployment.points[i];
    out += std::to_string(i + 1);
    out += ',';
    out += FormatDouble(p.x);
    out += ',';
    out += FormatDouble(p.y);
    out += '\n';
  }
  return out;
}

Json DeploymentToJson(const Deployment& d) {
  Json meta = BaseMeta("deployment");
  meta["seed"] = d.seed;
  meta["a"] = d.params.a;
  meta["c"] = d.params.c;
  meta["modulus"] = d.params.modulus;
  meta["allow_degenerate"] = d.params.allow_degenerate;
  meta["mode"] = ToString(d.mode);
  meta["y_increment"] = ToString(d.y_increment);
  meta["area"] = d.area_width;
  meta["area_height"] = d.area_height;
  meta["node_count"] = d.node_count();
  Json points = Json::array();
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    points.push_back({{"node_id", i + 1}, {"x", d.points[i].x}, {"y", d.points[i].y}});
  }
  return Json{{"meta", std::move(meta)}, {"points", std::move(points)}};
}

Deployment DeploymentFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("meta") || !j.contains("points")) {
    throw ParseError("deployment JSON needs 'meta' and 'points'");
  }
  const Json& meta = j.at("meta");
  if (Require<std::string>(meta, "kind") != "deployment") {
    throw ParseError("JSON document is not a deployment");
  }
  Deployment d;
  d.seed = Require<std::uint64_t>(meta, "seed");
  d.params.seed = static_cast<double>(d.seed);
  d.params.a = Require<double>(meta, "a");
  d.params.c = Require<double>(meta, "c");
  d.params.modulus = Require<double>(meta, "modulus");
  d.params.allow_degenerate = meta.value("allow_degenerate", false);
  try {
    d.mode = ParseDeploymentMode(Require<std::string>(meta, "mode"));
    d.y_increment = ParseYIncrement(meta.value("y_increment", std::string("a")));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  d.area_width = Require<double>(meta, "area");
  d.area_height = meta.contains("area_height") ? Require<double>(meta, "area_height") : d.area_width;
  if (!(d.area_width > 0.0) || !(d.area_height > 0.0)) throw ParseError("area must be positive");
  const Json& points = j.at("points");
  if (!points.is_array() || points.empty()) throw ParseError("'points' must be a non-empty array");
  for (const Json& p : points) d.points.push_back({Require<double>(p, "x"), Require<double>(p, "y")});
  if (meta.contains("node_count") && Require<std::size_t>(meta, "node_count") != d.points.size()) {
    throw ParseError("node_count does not match the number of points");
  }
  return d;
}

Deployment DeploymentFromCsv(std::string_view text, double area_width,
                             std::optional<double> area_height) {
  const auto lines = SplitLines(text);
  if (lines.empty() || lines.front() != "node_id,x,y") {
    throw ParseError("deployment CSV must start with 'node_id,x,y'");
  }
  if (lines.size() < 2) throw ParseError("deployment CSV has no rows");
  if (!(area_width > 0.0)) throw ParseError("area must be positive");
  Deployment d;
  d.area_width = area_width;
  d.area_height = area_height.value_or(area_width);
  d.params.modulus = area_width;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = SplitFields(lines[i]);
    if (f.size() != 3) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected 3 fields, got " +
                       std::to_string(f.size()));
    }
    CheckNodeId(f[0], i, i + 1);
    d.points.push_back({ParseDouble(f[1]), ParseDouble(f[2])});
  }
  return d;
}

std::string TrafficToCsv(const TrafficMatrix& traffic) {
  std::string out = "node_id";
  for (std::size_t j = 0; j < traffic.slots(); ++j) out += ",t" + std::to_string(j + 1);
  out += '\n';
  for (std::size_t i = 0; i < traffic.nodes(); ++i) {
    out += std::to_string(i + 1);
    for (double v : traffic.row(i)) {
      out += ',';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

Json TrafficToJson(const TrafficMatrix& t) {
  Json meta = BaseMeta("traffic");
  meta["distribution"] = ToString(t.distribution);
  meta["p_min"] = t.p_min;
  meta["p_max"] = t.p_max;
  meta["rate"] = t.rate;
  meta["reseed_per_node"] = t.reseed_per_node;
  meta["nodes"] = t.nodes();
  meta["slots"] = t.slots();
  meta["x0"] = t.params.seed;
  meta["a"] = t.params.a;
  meta["c"] = t.params.c;
  meta["modulus"] = t.params.modulus;
  meta["allow_degenerate"] = t.params.allow_degenerate;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.nodes(); ++i) {
    const auto r = t.row(i);
    rows.push_back(Json(std::vector<double>(r.begin(), r.end())));
  }
  return Json{{"meta", std::move(meta)}, {"values", std::move(rows)}};
}

TrafficMatrix TrafficFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("meta") || !j.contains("values")) {
    throw ParseError("traffic JSON needs 'meta' and 'values'");
  }
  const Json& meta = j.at("meta");
  if (Require<std::string>(meta, "kind") != "traffic") {
    throw ParseError("JSON document is not a traffic matrix");
  }
  const Json& rows = j.at("values");
  if (!rows.is_array() || rows.empty() || !rows.front().is_array() || rows.front().empty()) {
    throw ParseError("'values' must be a non-empty array of rows");
  }
  TrafficMatrix t(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != t.slots()) {
      throw ParseError("traffic row " + std::to_string(i + 1) + " has the wrong length");
    }
    for (std::size_t k = 0; k < t.slots(); ++k) {
      if (!rows[i][k].is_number()) throw ParseError("traffic cell is not a number");
      t.at(i, k) = rows[i][k].get<double>();
    }
  }
  try {
    t.distribution = ParseTrafficDistribution(Require<std::string>(meta, "distribution"));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  t.p_min = Require<double>(meta, "p_min");
  t.p_max = Require<double>(meta, "p_max");
  if (!(t.p_max > t.p_min)) throw ParseError("p_max must exceed p_min");
  t.rate = meta.value("rate", 1.0);
  t.reseed_per_node = meta.value("reseed_per_node", false);
  t.params.seed = meta.value("x0", 0.0);
  t.params.a = meta.value("a", 0.0);
  t.params.c = meta.value("c", 0.0);
  t.params.modulus = meta.value("modulus", t.p_max - t.p_min);
  t.params.allow_degenerate = meta.value("allow_degenerate", false);
  return t;
}

TrafficMatrix TrafficFromCsv(std::string_view text, double p_min, double p_max) {
  const auto lines = SplitLines(text);
  if (lines.empty()) throw ParseError("traffic CSV is empty");
  const auto header = SplitFields(lines.front());
  if (header.size() < 2 || header[0] != "node_id") {
    throw ParseError("traffic CSV must start with 'node_id,t1,...'");
  }
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k] != "t" + std::to_string(k)) throw ParseError("bad traffic CSV header");
  }
  if (lines.size() < 2) throw ParseError("traffic CSV has no rows");
  if (!(p_max > p_min)) throw ParseError("p_max must exceed p_min");
  const std::size_t slots = header.size() - 1;
  TrafficMatrix t(lines.size() - 1, slots);
  t.p_min = p_min;
  t.p_max = p_max;
  t.params.modulus = p_max - p_min;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = SplitFields(lines[i]);
    if (f.size() != slots + 1) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(slots + 1) + " fields, got " + std::to_string(f.size()));
    }
    CheckNodeId(f[0], i, i + 1);
    for (std::size_t k = 0; k < slots; ++k) t.at(i - 1, k) = ParseDouble(f[k + 1]);
  }
  return t;
}

std::string GraphToCsv(const RadiusGraph& graph, std::span<const Point> points) {
  std::string out = "u,v,distance\n";
  for (const auto& [u, v] : graph.edges) {
    out += std::to_string(u + 1) + ',' + std::to_string(v + 1) + ',' +
           FormatDouble(Distance(points[u], points[v])) + '\n';
  }
  return out;
}

Json GraphToJson(const RadiusGraph& graph, std::span<const Point> points) {
  Json meta = BaseMeta("graph");
  meta["node_count"] = graph.node_count;
  meta["transmission_range"] = graph.transmission_range;
  meta["epsilon"] = graph.epsilon;
  meta["edge_count"] = graph.edges.size();
  meta["isolated"] = IsolatedCount(graph);
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges) {
    edges.push_back({{"u", u + 1}, {"v", v + 1}, {"distance", Distance(points[u], points[v])}});
  }
  return Json{{"meta", std::move(meta)}, {"degrees", graph.degrees}, {"edges", std::move(edges)}};
}

Json ReportToJson(const TestReport& r) {
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  return Json{{"test", ToString(r.test)},
              {"subject", r.subject},
              {"statistic", r.statistic},
              {"critical_value", r.critical_value},
              {"alpha", r.alpha},
              {"verdict", ToString(r.verdict)},
              {"sample_size", r.sample_size},
              {"details", std::move(details)}};
}

Json ReportsToJson(std::span<const TestReport> reports) {
  Json arr = Json::array();
  for (const TestReport& r : reports) arr.push_back(ReportToJson(r));
  return arr;
}

TestReport ReportFromJson(const Json& j) {
  TestReport r;
  r.test = ParseTestKind(Require<std::string>(j, "test"));
  r.subject = j.value("subject", std::string());
  r.statistic = Require<double>(j, "statistic");
  r.critical_value = Require<double>(j, "critical_value");
  r.alpha = Require<double>(j, "alpha");
  r.verdict = ParseVerdict(Require<std::string>(j, "verdict"));
  r.sample_size = Require<std::size_t>(j, "sample_size");
  if (j.contains("details")) {
    for (const auto& [k, v] : j.at("details").items()) r.details[k] = v.get<double>();
  }
  return r;
}

std::string DeploymentToSvg(const Deployment& d, std::optional<double> range) {
  constexpr double kPx = 600.0;
  const double sx = kPx / d.area_width;
  const double sy = kPx / d.area_height;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPx << "\" height=\"" << kPx
      << "\" viewBox=\"0 0 " << kPx << ' ' << kPx << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\" stroke=\"black\"/>\n";
  for (const Point& p : d.points) {
    // SVG y grows downward.
    const std::string cx = FormatDouble(p.x * sx);
    const std::string cy = FormatDouble(kPx - p.y * sy);
    if (range) {
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << FormatDouble(*range * sx)
          << "\" fill=\"none\" stroke=\"#9ecae1\" stroke-width=\"0.5\"/>\n";
    }
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"#08519c\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Json ConstantTableToJson(const ConstantTable& table) {
  return Json(std::vector<double>(table.values().begin(), table.values().end()));
}

ConstantTable ConstantTableFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("constant table must be a JSON array of numbers");
  std::vector<double> values;
  for (const Json& v : j) {
    if (!v.is_number()) throw ParseError("constant table entries must be numbers");
    values.push_back(v.get<double>());
  }
  try {
    return ConstantTable(std::move(values));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

std::string_view ToString(FileFormat format) {
  switch (format) {
    case FileFormat::kCsv:
      return "csv";
    case FileFormat::kJson:
      return "json";
    case FileFormat::kSvg:
      return "svg";
  }
  return "csv";
}

FileFormat ParseFileFormat(std::string_view text) {
  if (text == "csv") return FileFormat::kCsv;
  if (text == "json") return FileFormat::kJson;
  if (text == "svg") return FileFormat::kSvg;
  throw ParameterError("unknown format '" + std::string(text) + "'");
}

Dataset ParseDataset(std::string_view text, const CsvDefaults& defaults) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("dataset is empty");
  if (text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("meta")) throw ParseError("JSON dataset has no 'meta'");
    const std::string kind = j.at("meta").value("kind", std::string());
    if (kind == "deployment") return DeploymentFromJson(j);
    if (kind == "traffic") return TrafficFromJson(j);
    throw ParseError("unknown dataset kind '" + kind + "'");
  }
  if (text.substr(first).starts_with("node_id,x,y")) {
    return DeploymentFromCsv(text, defaults.area, defaults.area_height);
  }
  return TrafficFromCsv(text, defaults.p_min, defaults.p_max);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace wsnsynth
