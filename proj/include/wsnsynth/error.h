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

#ifndef WSNSYNTH_ERROR_H_
#define WSNSYNTH_ERROR_H_

#include <stdexcept>
#include <string>

namespace wsnsynth {

// Invalid input parameters (node count, area, packet bounds, alpha, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Sample value outside the declared [lower, upper) range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Sample too short for the requested statistic.
class SampleSizeError : public std::length_error {
 public:
  explicit SampleSizeError(const std::string& what) : std::length_error(what) {}
};

// Malformed dataset, config or constants file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsnsynth

#endif  // WSNSYNTH_ERROR_H_
