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

#include "wsnsynth/constants.h"

#include <cmath>
#include <string>
#include <utility>

#include "wsnsynth/error.h"

namespace wsnsynth {

ConstantTable::ConstantTable(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw ParameterError("constant table needs at least 2 entries, got " +
                         std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
      throw ParameterError("constant table entry " + std::to_string(i) +
                           " is not a positive finite number");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (values_[i] == values_[j]) {
        throw ParameterError("constant table entries " + std::to_string(j) + " and " +
                             std::to_string(i) + " are equal");
      }
    }
  }
}

const ConstantTable& ConstantTable::Canonical() {
  static const ConstantTable kTable({
      4.669202,  // Feigenbaum delta
      3.359886,  // reciprocal Fibonacci constant
      3.275823,  // Levy's constant
      2.807770,  // Fransen-Robinson constant
      2.685452,  // Khinchin's constant
      2.584982,  // Sierpinski's constant
      2.502908,  // Feigenbaum alpha
      2.295587,  // universal parabolic constant
      1.902161,  // Brun's constant
      1.705211,  // Niven's constant
      1.324718,  // plastic number
      1.618034,  // golden ratio
      3.141593,  // pi
      2.718282,  // e
  });
  return kTable;
}

const ConstantTable& ConstantTable::HighPrecision() {
  static const ConstantTable kTable({
      4.669201609102990, 3.359885666243177, 3.275822918721811, 2.807770242028519,
      2.685452001065306, 2.584981759579253, 2.502907875095892, 2.295587149392638,
      1.902160583104,    1.705211140105367, 1.324717957244746, 1.618033988749895,
      3.141592653589793, 2.718281828459045,
  });
  return kTable;
}

Constants DeriveConstants(std::uint64_t seed, const ConstantTable& table) {
  const std::uint64_t n = table.size();
  return Constants{table[seed % n], table[(seed % n + table.half()) % n]};
}

std::uint64_t FloorIndex(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError("table index source must be a non-negative finite number");
  }
  return static_cast<std::uint64_t>(std::floor(value));
}

}  // namespace wsnsynth
