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

#ifndef WSNSYNTH_GENERATOR_H_
#define WSNSYNTH_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wsnsynth/constants.h"

namespace wsnsynth {

// Everything needed to regenerate a stream: x[0], the derived pair (a, c)
// and the modulus. `seed` is a real because the traffic generators start
// from a table constant rather than from an integer.
struct GeneratorParams {
  double seed = 0.0;
  double a = 0.0;
  double c = 0.0;
  double modulus = 1.0;
  // Permits a == c. Only useful to reproduce the degenerate diagonal layout.
  bool allow_degenerate = false;

  // Throws ParameterError on modulus <= 0, non-finite members, or a == c
  // without allow_degenerate.
  void Validate() const;

  bool operator==(const GeneratorParams&) const = default;
};

// Derives (a, c) from an integer seed; seed doubles as x[0].
GeneratorParams MakeParams(std::uint64_t seed, double modulus,
                           const ConstantTable& table = ConstantTable::Canonical());

// Real remainder x - floor(x / m) * m, always in [0, m) for m > 0.
double RealMod(double x, double modulus);

// (a * x + c) mod m.
double LcgStep(double x, const GeneratorParams& params);

// Single-owner iterator over the congruential sequence starting at seed.
// Not thread-safe; independent instances are.
class LcgStream {
 public:
  explicit LcgStream(const GeneratorParams& params);

  double Next();
  double state() const { return state_; }
  const GeneratorParams& params() const { return params_; }

 private:
  GeneratorParams params_;
  double state_;
};

// First `count` elements after the seed. Throws ParameterError on count == 0.
std::vector<double> Stream(const GeneratorParams& params, std::size_t count);

}  // namespace wsnsynth

#endif  // WSNSYNTH_GENERATOR_H_
