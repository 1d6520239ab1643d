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

#ifndef WSNSYNTH_CONSTANTS_H_
#define WSNSYNTH_CONSTANTS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wsnsynth {

// Ordered list of positive, pairwise-distinct real constants that seeds are
// mapped onto. The canonical table holds 14 well-known mathematical
// constants (Feigenbaum delta, reciprocal Fibonacci, Levy, Fransen-Robinson,
// Khinchin, Sierpinski, Feigenbaum alpha, universal parabolic, Brun, Niven,
// plastic number, golden ratio, pi, e) truncated to 6 decimal places.
class ConstantTable {
 public:
  // Throws ParameterError unless `values` has at least two entries, all
  // finite, strictly positive and pairwise distinct.
  explicit ConstantTable(std::vector<double> values);

  static const ConstantTable& Canonical();
  // The same constants, same order, at full double precision.
  static const ConstantTable& HighPrecision();

  double operator[](std::size_t index) const { return values_[index]; }
  std::size_t size() const { return values_.size(); }
  // floor(|table| / 2); the offset between the multiplier and increment slots.
  std::size_t half() const { return values_.size() / 2; }
  std::span<const double> values() const { return values_; }

  // Entry at `index mod size()`.
  double Wrapped(std::uint64_t index) const { return values_[index % values_.size()]; }

  bool operator==(const ConstantTable&) const = default;

 private:
  std::vector<double> values_;
};

struct Constants {
  double a = 0.0;  // multiplier
  double c = 0.0;  // increment
};

// a = table[seed mod |table|], c = table[(seed + |table|/2) mod |table|].
// For any table accepted by ConstantTable the two slots differ, so a != c.
Constants DeriveConstants(std::uint64_t seed,
                          const ConstantTable& table = ConstantTable::Canonical());

// Index used when a real-valued quantity (a packet bound, a constant used as
// a seed) selects a table slot: floor(value), rejected when negative.
std::uint64_t FloorIndex(double value);

}  // namespace wsnsynth

#endif  // WSNSYNTH_CONSTANTS_H_
