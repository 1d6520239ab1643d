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

#include "wsnsynth/reference_data.h"

namespace wsnsynth {

std::span<const ReferenceSeedRow> ReferenceSeedRows() {
  // {seed, a, c, {non-grid isolated @10/15/20}, KS, chi2, autocorrelation,
  //  {grid isolated @10/15/20}, KS, chi2, autocorrelation}
  static constexpr ReferenceSeedRow kRows[] = {
      {0, 4.669202, 2.295587, {{10, 1, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{15, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {2, 3.275823, 1.705211, {{11, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{8, 4, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied}},
      {3, 2.807770, 1.324718, {{8, 2, 0}, Verdict::kRejected, Verdict::kRejected, Verdict::kSatisfied},
       {{13, 2, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {5, 2.584982, 3.141593, {{11, 1, 1}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{12, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {7, 2.295587, 4.669202, {{1, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{11, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {12, 3.141593, 2.584982, {{5, 2, 1}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied},
       {{9, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {14, 4.669202, 2.295587, {{8, 2, 0}, Verdict::kRejected, Verdict::kRejected, Verdict::kSatisfied},
       {{14, 2, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied}},
      {24, 1.324718, 2.807770, {{11, 2, 2}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{11, 0, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied}},
      {43, 3.359886, 1.902161, {{8, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{17, 1, 1}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {59, 2.807770, 1.324718, {{8, 1, 1}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{12, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {65, 1.705211, 3.275823, {{6, 0, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied},
       {{8, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {70, 4.669202, 2.295587, {{11, 3, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{7, 0, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied}},
      {76, 2.502908, 2.718282, {{5, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{9, 3, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied}},
      {87, 2.807770, 1.324718, {{9, 2, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied},
       {{8, 2, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied}},
      {144, 2.685452, 1.618034, {{8, 1, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied},
       {{6, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {147, 2.295587, 4.669202, {{8, 1, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{21, 6, 0}, Verdict::kSatisfied, Verdict::kRejected, Verdict::kSatisfied}},
      {192, 1.324718, 2.807770, {{13, 3, 1}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{8, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {251, 2.718282, 2.502908, {{9, 1, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied},
       {{4, 0, 0}, Verdict::kRejected, Verdict::kSatisfied, Verdict::kSatisfied}},
      {365, 3.359886, 1.902161, {{4, 1, 0}, Verdict::kRejected, Verdict::kRejected, Verdict::kSatisfied},
       {{16, 1, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
      {1111, 2.584982, 3.141593, {{9, 3, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied},
       {{8, 0, 0}, Verdict::kSatisfied, Verdict::kSatisfied, Verdict::kSatisfied}},
  };
  return kRows;
}

std::span<const ReferenceTrafficRow> ReferenceTrafficRows() {
  // {{exponential t1..t5}, {uniform t1..t5}}
  static constexpr ReferenceTrafficRow kRows[] = {
      {{3.63, 2.93, 3.41, 2.59, 2.26}, {6.06, 7.55, 4.44, 2.26, 3.1}},  // 1
      {{2.37, 2.88, 3.18, 2.27, 2.42}, {5.86, 6.91, 2.36, 3.43, 6.93}},  // 2
      {{3.18, 2.28, 2.45, 3.38, 2.54}, {2.41, 3.59, 7.47, 4.18, 9.41}},  // 3
      {{4.84, 2.29, 2.52, 4.21, 4.18}, {2.54, 4.03, 8.9, 8.86, 8.74}},  // 4
      {{4.07, 3.8, 3.22, 2.33, 2.66}, {8.35, 7.04, 2.78, 4.81, 3.45}},  // 5
      {{2.42, 3.2, 2.31, 2.57, 7.69}, {7, 2.64, 4.35, 9.97, 4.35}},  // 6
      {{2.57, 7.61, 2.57, 7, 2.55}, {9.96, 4.34, 9.93, 4.24, 9.61}},  // 7
      {{5.23, 2.38, 2.94, 3.46, 2.66}, {3.17, 6.1, 7.67, 4.84, 3.56}},  // 8
      {{2.44, 3.34, 2.49, 3.79, 3.19}, {7.37, 3.85, 8.32, 6.97, 2.53}},  // 9
      {{2.29, 2.51, 4.11, 3.9, 3.41}, {3.99, 8.79, 8.5, 7.56, 4.47}},  // 10
      {{2.59, 2.27, 2.41, 3.14, 7.91}, {2.34, 3.39, 6.8, 9.97, 4.37}},  // 11
      {{2.58, 2.23, 2.27, 2.43, 3.25}, {2.04, 2.38, 3.49, 7.13, 3.07}},  // 12
      {{2.37, 2.86, 3.09, 4.83, 2.29}, {5.78, 6.63, 9.41, 2.54, 4.01}},  // 13
      {{2.51, 4.17, 4.05, 3.75, 3.13}, {8.86, 8.72, 8.26, 6.76, 9.86}},  // 14
      {{6.27, 2.51, 4.14, 3.98, 3.57}, {4.01, 8.83, 8.62, 7.93, 5.67}},  // 15
      {{2.84, 2.99, 3.78, 3.19, 2.29}, {6.29, 8.32, 6.96, 2.5, 3.9}},  // 16
      {{2.49, 3.88, 3.37, 2.53, 4.45}, {8.47, 7.45, 4.1, 9.14, 9.65}},  // 17
      {{5.34, 2.4, 3.05, 4.36, 4.76}, {3.3, 6.52, 9.06, 9.37, 2.4}},  // 18
      {{2.27, 2.44, 3.33, 2.48, 3.76}, {3.56, 7.37, 3.84, 8.28, 6.84}},  // 19
      {{3.15, 2.24, 2.31, 2.58, 2.24}, {2.12, 2.66, 4.41, 2.17, 2.8}},  // 20
      {{2.33, 2.67, 2.46, 3.5, 2.73}, {4.88, 3.68, 7.77, 5.17, 4.65}},  // 21
      {{2.62, 2.35, 2.75, 2.7, 2.54}, {2.92, 5.29, 5.02, 4.15, 9.31}},  // 22
      {{4.68, 2.25, 2.35, 2.76, 2.72}, {2.21, 2.94, 5.32, 5.14, 4.56}},  // 23
      {{2.61, 2.31, 2.57, 6.63, 2.54}, {2.63, 4.33, 9.9, 4.14, 9.28}},  // 24
      {{4.63, 2.24, 2.3, 2.56, 5.97}, {2.11, 2.63, 4.31, 9.81, 3.85}},  // 25
      {{2.49, 3.78, 3.18, 2.27, 2.42}, {8.31, 6.92, 2.37, 3.46, 7.04}},  // 26
      {{3.22, 2.33, 2.66, 2.43, 3.27}, {2.78, 4.82, 3.5, 7.18, 3.22}},  // 27
      {{2.39, 2.98, 3.7, 3.04, 4.22}, {6.25, 8.17, 6.47, 8.91, 8.89}},  // 28
      {{4.2, 4.15, 4.01, 3.65, 2.96}, {8.84, 8.66, 8.08, 6.17, 7.9}},  // 29
      {{3.56, 2.82, 2.93, 3.39, 2.56}, {5.6, 6.04, 7.5, 4.27, 9.69}},  // 30
      {{5.48, 2.42, 3.21, 2.31, 2.59}, {3.45, 7.01, 2.67, 4.46, 2.32}},  // 31
      {{2.26, 2.4, 3.07, 4.49, 5.7}, {3.31, 6.55, 9.17, 9.75, 3.65}},  // 32
      {{2.45, 3.46, 2.66, 2.43, 3.28}, {7.67, 4.83, 3.51, 7.22, 3.34}},  // 33
      {{2.41, 3.1, 5.04, 2.34, 2.73}, {6.66, 9.52, 2.9, 5.2, 4.74}},  // 34
      {{2.64, 2.39, 2.99, 3.75, 3.13}, {3.23, 6.27, 8.26, 6.76, 9.86}},  // 35
      {{6.3, 2.51, 4.18, 4.09, 3.85}, {4.02, 8.87, 8.77, 8.42, 7.29}},  // 36
      {{3.3, 2.44, 3.36, 2.52, 4.27}, {3.58, 7.43, 4.05, 8.97, 9.07}},  // 37
      {{4.38, 4.86, 2.3, 2.55, 4.99}, {9.43, 2.6, 4.21, 9.5, 2.81}},  // 38
      {{2.33, 2.68, 2.48, 3.66, 2.98}, {4.91, 3.79, 8.11, 6.26, 8.22}},  // 39
      {{3.73, 3.09, 4.86, 2.3, 2.54}, {6.63, 9.43, 2.58, 4.17, 9.36}},  // 40
      {{4.75, 2.27, 2.42, 3.21, 2.31}, {2.36, 3.45, 7.01, 2.68, 4.47}},  // 41
      {{2.59, 2.27, 2.42, 3.2, 2.3}, {2.36, 3.44, 6.98, 2.57, 4.13}},  // 42
      {{2.53, 4.55, 6.79, 2.54, 4.87}, {9.22, 9.92, 4.19, 9.43, 2.61}},  // 43
      {{2.3, 2.55, 5.21, 2.38, 2.92}, {4.24, 9.6, 3.15, 6.01, 7.41}},  // 44
      {{3.35, 2.51, 4.04, 3.71, 3.05}, {3.96, 8.69, 8.18, 6.52, 9.05}},  // 45
      {{4.35, 4.74, 2.27, 2.41, 3.12}, {9.35, 2.34, 3.37, 6.74, 9.78}},  // 46
      {{5.8, 2.47, 3.57, 2.84, 2.99}, {3.73, 7.93, 5.67, 6.27, 8.25}},  // 47
      {{3.74, 3.12, 5.71, 2.46, 3.47}, {6.73, 9.75, 3.66, 7.69, 4.9}},  // 48
      {{2.67, 2.47, 3.62, 2.91, 3.31}, {3.76, 8.02, 5.98, 7.31, 3.64}},  // 49
      {{2.45, 3.44, 2.63, 2.36, 2.8}, {7.62, 4.67, 2.99, 5.51, 5.76}},  // 50
      {{2.86, 3.07, 4.56, 7.02, 2.55}, {6.57, 9.23, 9.93, 4.25, 9.61}},  // 51
      {{5.26, 2.39, 2.97, 3.6, 2.88}, {3.2, 6.19, 7.98, 5.86, 6.91}},  // 52
      {{3.17, 2.26, 2.41, 3.08, 4.77}, {2.33, 3.33, 6.62, 9.38, 2.42}},  // 53
      {{2.28, 2.45, 3.42, 2.61, 2.3}, {3.63, 7.58, 4.55, 2.62, 4.27}},  // 54
      {{2.56, 5.51, 2.43, 3.24, 2.36}, {9.7, 3.48, 7.11, 3.01, 5.56}},  // 55
      {{2.81, 2.9, 3.24, 2.36, 2.8}, {5.92, 7.11, 2.99, 5.51, 5.76}},  // 56
      {{2.86, 3.07, 4.6, 2.23, 2.27}, {6.58, 9.26, 2.04, 2.38, 3.5}},  // 57
      {{2.43, 3.27, 2.39, 2.99, 3.76}, {7.18, 3.23, 6.28, 8.28, 6.84}},  // 58
      {{3.15, 2.24, 2.3, 2.54, 4.7}, {2.1, 2.58, 4.16, 9.33, 2.26}},  // 59
      {{2.26, 2.37, 2.89, 3.21, 2.32}, {3.11, 5.9, 7.03, 2.74, 4.67}},  // 60
      {{2.63, 2.36, 2.82, 2.92, 3.36}, {3.02, 5.59, 6.02, 7.43, 4.03}},  // 61
      {{2.52, 4.21, 4.19, 4.13, 3.94}, {8.91, 8.88, 8.81, 8.57, 7.76}},  // 62
      {{3.5, 2.72, 2.6, 2.29, 2.52}, {5.14, 4.53, 2.54, 4.03, 8.9}},  // 63
      {{4.21, 4.18, 4.1, 3.85, 3.32}, {8.87, 8.77, 8.43, 7.33, 3.71}},  // 64
      {{2.46, 3.55, 2.8, 2.85, 3.03}, {7.87, 5.5, 5.71, 6.42, 8.74}},  // 65
      {{4.07, 3.8, 3.21, 2.32, 2.62}, {8.34, 7.03, 2.72, 4.61, 2.8}},  // 66
      {{2.33, 2.67, 2.47, 3.57, 2.82}, {4.89, 3.73, 7.91, 5.62, 6.1}},  // 67
      {{2.94, 3.47, 2.67, 2.47, 3.64}, {7.69, 4.91, 3.77, 8.07, 6.13}},  // 68
      {{2.95, 3.51, 2.74, 2.65, 2.4}, {7.78, 5.21, 4.76, 3.29, 6.47}},  // 69
      {{3.04, 4.22, 4.2, 4.16, 4.02}, {8.91, 8.9, 8.84, 8.68, 8.14}},  // 70
      {{3.68, 3.01, 3.94, 3.49, 2.71}, {6.37, 8.56, 7.75, 5.08, 4.34}},  // 71
      {{2.57, 6.69, 2.54, 4.72, 2.26}, {9.91, 4.16, 9.34, 2.31, 3.28}},  // 72
      {{2.4, 3.03, 4.13, 3.93, 3.48}, {6.44, 8.81, 8.56, 7.73, 5.03}},  // 73
      {{2.7, 2.54, 4.89, 2.31, 2.58}, {4.19, 9.45, 2.65, 4.38, 2.05}},  // 74
      {{2.23, 2.28, 2.46, 3.5, 2.73}, {2.44, 3.68, 7.78, 5.18, 4.67}},  // 75
      {{2.63, 2.36, 2.81, 2.88, 3.15}, {3, 5.53, 5.84, 6.83, 2.06}},  // 76
      {{2.23, 2.28, 2.48, 3.68, 3.01}, {2.47, 3.8, 8.14, 6.36, 8.55}},  // 77
      {{3.93, 3.48, 2.7, 2.53, 4.62}, {7.73, 5.02, 4.14, 9.27, 2.08}},  // 78
      {{2.23, 2.29, 2.51, 4.1, 3.85}, {2.53, 3.99, 8.77, 8.43, 7.33}},  // 79
      {{3.32, 2.46, 3.53, 2.78, 2.78}, {3.71, 7.84, 5.4, 5.4, 5.4}},  // 80
  };
  return kRows;
}

}  // namespace wsnsynth
