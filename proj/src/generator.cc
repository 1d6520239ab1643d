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

#include "wsnsynth/generator.h"

#include <cmath>

#include "wsnsynth/error.h"

namespace wsnsynth {

void GeneratorParams::Validate() const {
  if (!std::isfinite(seed) || !std::isfinite(a) || !std::isfinite(c) ||
      !std::isfinite(modulus)) {
    throw ParameterError("generator parameters must be finite");
  }
  if (modulus <= 0.0) throw ParameterError("modulus must be positive");
  if (a == c && !allow_degenerate) {
    throw ParameterError("multiplier and increment are equal (a == c); "
                         "set allow_degenerate to force it");
  }
}

GeneratorParams MakeParams(std::uint64_t seed, double modulus, const ConstantTable& table) {
  const Constants k = DeriveConstants(seed, table);
  GeneratorParams params{static_cast<double>(seed), k.a, k.c, modulus, false};
  params.Validate();
  return params;
}

double RealMod(double x, double modulus) {
  double r = x - std::floor(x / modulus) * modulus;
  // Rounding in floor(x / m) * m can land a hair outside [0, m).
  if (r < 0.0) r = 0.0;
  if (r >= modulus) r = std::nextafter(modulus, 0.0);
  return r;
}

double LcgStep(double x, const GeneratorParams& params) {
  const double ax = params.a * x;
  return RealMod(ax + params.c, params.modulus);
}

LcgStream::LcgStream(const GeneratorParams& params) : params_(params), state_(params.seed) {
  params_.Validate();
}

double LcgStream::Next() {
  state_ = LcgStep(state_, params_);
  return state_;
}

std::vector<double> Stream(const GeneratorParams& params, std::size_t count) {
  if (count == 0) throw ParameterError("stream length must be at least 1");
  LcgStream stream(params);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.Next());
  return out;
}

}  // namespace wsnsynth
