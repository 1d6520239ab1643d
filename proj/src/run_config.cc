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

#include "wsnsynth/run_config.h"

#include <string>

#include "wsnsynth/error.h"

namespace wsnsynth {

std::string_view ToString(Command command) {
  switch (command) {
    case Command::kDeploy:
      return "deploy";
    case Command::kTraffic:
      return "traffic";
    case Command::kAnalyze:
      return "analyze";
    case Command::kValidate:
      return "validate";
    case Command::kReport:
      return "report";
  }
  return "deploy";
}

Command ParseCommand(std::string_view text) {
  if (text == "deploy") return Command::kDeploy;
  if (text == "traffic") return Command::kTraffic;
  if (text == "analyze") return Command::kAnalyze;
  if (text == "validate") return Command::kValidate;
  if (text == "report") return Command::kReport;
  throw ParseError("unknown command '" + std::string(text) + "'");
}

namespace {

bool SameSuite(const SuiteConfig& a, const SuiteConfig& b) {
  return a.alpha_ks == b.alpha_ks && a.alpha_chi2 == b.alpha_chi2 &&
         a.alpha_autocorrelation == b.alpha_autocorrelation &&
         a.alpha_circular == b.alpha_circular && a.classes == b.classes && a.lags == b.lags &&
         a.autocorrelation_start == b.autocorrelation_start &&
         a.circular_lag == b.circular_lag && a.run_ks == b.run_ks && a.run_chi2 == b.run_chi2 &&
         a.run_autocorrelation == b.run_autocorrelation && a.run_circular == b.run_circular &&
         a.subsample == b.subsample && a.sigma == b.sigma && a.lag_indexing == b.lag_indexing &&
         a.critical_slack == b.critical_slack;
}

template <typename T>
void Read(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config field '") + key + "': " + e.what());
  }
}

// Converts ParameterError from the enum parsers into ParseError.
template <typename Fn>
auto Enum(Fn fn) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  return command == o.command && seed == o.seed && nodes == o.nodes && area == o.area &&
         area_height == o.area_height && mode == o.mode && y_increment == o.y_increment &&
         slots == o.slots && p_min == o.p_min && p_max == o.p_max &&
         distribution == o.distribution && rate == o.rate &&
         reseed_per_node == o.reseed_per_node && ranges == o.ranges && epsilon == o.epsilon &&
         seeds == o.seeds && SameSuite(suite, o.suite) && input == o.input &&
         output == o.output && format == o.format && constants_file == o.constants_file;
}

Json RunConfigToJson(const RunConfig& c) {
  Json suite{{"alpha_ks", c.suite.alpha_ks},
             {"alpha_chi2", c.suite.alpha_chi2},
             {"alpha_autocorrelation", c.suite.alpha_autocorrelation},
             {"alpha_circular", c.suite.alpha_circular},
             {"classes", c.suite.classes},
             {"lags", c.suite.lags},
             {"autocorrelation_start", c.suite.autocorrelation_start},
             {"circular_lag", c.suite.circular_lag},
             {"run_ks", c.suite.run_ks},
             {"run_chi2", c.suite.run_chi2},
             {"run_autocorrelation", c.suite.run_autocorrelation},
             {"run_circular", c.suite.run_circular},
             {"subsample", ToString(c.suite.subsample)},
             {"sigma", ToString(c.suite.sigma)},
             {"lag_indexing", ToString(c.suite.lag_indexing)},
             {"critical_slack", c.suite.critical_slack}};
  Json j{{"command", ToString(c.command)},
         {"seed", c.seed},
         {"nodes", c.nodes},
         {"area", c.area},
         {"area_height", c.area_height ? Json(*c.area_height) : Json(nullptr)},
         {"mode", ToString(c.mode)},
         {"y_increment", ToString(c.y_increment)},
         {"slots", c.slots},
         {"p_min", c.p_min},
         {"p_max", c.p_max},
         {"distribution", ToString(c.distribution)},
         {"rate", c.rate},
         {"reseed_per_node", c.reseed_per_node},
         {"ranges", c.ranges},
         {"epsilon", c.epsilon},
         {"seeds", c.seeds},
         {"suite", std::move(suite)},
         {"input", c.input},
         {"output", c.output},
         {"format", ToString(c.format)},
         {"constants_file", c.constants_file}};
  return j;
}

RunConfig RunConfigFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  RunConfig c;
  if (j.contains("command")) c.command = ParseCommand(j.at("command").get<std::string>());
  Read(j, "seed", c.seed);
  Read(j, "nodes", c.nodes);
  Read(j, "area", c.area);
  if (j.contains("area_height") && !j.at("area_height").is_null()) {
    c.area_height = j.at("area_height").get<double>();
  }
  if (j.contains("mode")) {
    c.mode = Enum([&] { return ParseDeploymentMode(j.at("mode").get<std::string>()); });
  }
  if (j.contains("y_increment")) {
    c.y_increment = Enum([&] { return ParseYIncrement(j.at("y_increment").get<std::string>()); });
  }
  Read(j, "slots", c.slots);
  Read(j, "p_min", c.p_min);
  Read(j, "p_max", c.p_max);
  if (j.contains("distribution")) {
    c.distribution =
        Enum([&] { return ParseTrafficDistribution(j.at("distribution").get<std::string>()); });
  }
  Read(j, "rate", c.rate);
  Read(j, "reseed_per_node", c.reseed_per_node);
  Read(j, "ranges", c.ranges);
  Read(j, "epsilon", c.epsilon);
  Read(j, "seeds", c.seeds);
  if (j.contains("suite")) {
    const Json& s = j.at("suite");
    Read(s, "alpha_ks", c.suite.alpha_ks);
    Read(s, "alpha_chi2", c.suite.alpha_chi2);
    Read(s, "alpha_autocorrelation", c.suite.alpha_autocorrelation);
    Read(s, "alpha_circular", c.suite.alpha_circular);
    Read(s, "classes", c.suite.classes);
    Read(s, "lags", c.suite.lags);
    Read(s, "autocorrelation_start", c.suite.autocorrelation_start);
    Read(s, "circular_lag", c.suite.circular_lag);
    Read(s, "run_ks", c.suite.run_ks);
    Read(s, "run_chi2", c.suite.run_chi2);
    Read(s, "run_autocorrelation", c.suite.run_autocorrelation);
    Read(s, "run_circular", c.suite.run_circular);
    if (s.contains("subsample")) {
      c.suite.subsample =
          Enum([&] { return ParseSubsampleScheme(s.at("subsample").get<std::string>()); });
    }
    if (s.contains("sigma")) c.suite.sigma = Enum([&] { return ParseSigmaForm(s.at("sigma").get<std::string>()); });
    if (s.contains("lag_indexing")) {
      c.suite.lag_indexing = Enum([&] { return ParseLagIndexing(s.at("lag_indexing").get<std::string>()); });
    }
    Read(s, "critical_slack", c.suite.critical_slack);
  }
  Read(j, "input", c.input);
  Read(j, "output", c.output);
  if (j.contains("format")) {
    c.format = Enum([&] { return ParseFileFormat(j.at("format").get<std::string>()); });
  }
  Read(j, "constants_file", c.constants_file);
  return c;
}

}  // namespace wsnsynth
