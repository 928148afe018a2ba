// Copyright 2026 The projstark Authors.
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

#ifndef PROJSTARK_WORKED_EXAMPLE_H_
#define PROJSTARK_WORKED_EXAMPLE_H_

// Two-dimensional reference system over F_331 with its published challenge
// lists and the values a correct implementation reproduces from them.

#include <array>
#include <cstdint>

#include "projstark/dynamics.h"
#include "projstark/transcript.h"

namespace projstark::worked_example {

inline constexpr uint64_t kModulus = 331;
inline constexpr uint64_t kGenerator = 2;
inline constexpr size_t kNumSteps = 29;

inline SystemSpec System() {
  SystemSpec spec;
  spec.a_hat = {{1, 0}, {-1, 1}};
  spec.z_upper = {100, 100};
  spec.z_lower = {0, 40};
  spec.z_init = {3, 100};
  spec.num_steps = kNumSteps;
  return spec;
}

inline constexpr std::array<uint64_t, 30> kTraceDomain = {
    1,   2,   4,   8,   16,  32,  64,  128, 256, 181, 31,  62,  124, 248, 165,
    330, 329, 327, 323, 315, 299, 267, 203, 75,  150, 300, 269, 207, 83,  166};

// gamma_{1,1}, gamma_{2,1}, gamma_{1,2}, ..., gamma_{2,4}.
inline constexpr std::array<uint64_t, 8> kGammas = {261, 308, 225, 47, 236, 41, 43, 212};
inline constexpr std::array<uint64_t, 5> kBetas = {149, 200, 23, 106, 252};
inline constexpr std::array<uint64_t, 2> kSamples = {87, 291};

inline InjectedChallenges Challenges() {
  return {{kGammas.begin(), kGammas.end()},
          {kBetas.begin(), kBetas.end()},
          {kSamples.begin(), kSamples.end()}};
}

// Trace-polynomial degrees in the order f_z1, f_z2, f_delta1, f_delta2,
// f_alpha_lo1, f_alpha_lo2, f_alpha_up1, f_alpha_up2.
inline constexpr std::array<int64_t, 8> kTraceDegrees = {0, 29, 0, 28, 0, 28, 0, 0};

// Published composition degrees, q_{1,1}, q_{2,1}, ..., q_{2,4}. A zero
// quotient is listed as degree 0.
inline constexpr std::array<int64_t, 8> kCompositionDegrees = {0, 28, 0, 28, 0, 27, 0, 0};

inline constexpr int64_t kCombinedDegreeBound = 28;

inline constexpr std::array<uint64_t, 29> kCombined = {
    72,  260, 273, 61, 25,  37,  225, 18,  311, 255, 292, 157, 83,  151, 31,
    172, 203, 244, 39, 65,  136, 317, 91,  84,  238, 325, 94,  24,  275};

inline constexpr std::array<uint64_t, 15> kLayer1 = {85,  94,  242, 259, 241, 184, 74, 172,
                                                     149, 125, 36,  29,  6,   29,  275};
inline constexpr std::array<uint64_t, 8> kLayer2 = {18, 75, 300, 50, 324, 209, 179, 275};
inline constexpr std::array<uint64_t, 4> kLayer3 = {88, 126, 166, 215};
inline constexpr std::array<uint64_t, 2> kLayer4 = {204, 117};
inline constexpr uint64_t kFinalConstant = 229;

inline constexpr std::array<int64_t, 5> kLayerDegrees = {14, 7, 3, 1, 0};

// Q_j(x^(2^j)) for j = 1..5, as computed by the query-phase identity.
inline constexpr std::array<uint64_t, 5> kChainAt87 = {128, 22, 101, 39, 229};
inline constexpr std::array<uint64_t, 5> kChainAt291 = {324, 35, 219, 110, 229};

// Row at which z2 first reaches its lower bound.
inline constexpr size_t kLowerBoundRow = 20;

}  // namespace projstark::worked_example

#endif  // PROJSTARK_WORKED_EXAMPLE_H_
