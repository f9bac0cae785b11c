// Copyright 2026 The trineq authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace trineq {

/// Seed for the deterministic generators. Same seed + same parameters gives
/// a bitwise-identical stream.
struct RngSeed {
  std::uint64_t value = 0;
};

/// SplitMix64: the fixed generator behind every random matrix and grid in
/// this project. The constants below are the algorithm; any implementation
/// that reproduces them (plus the Box-Muller transform in
/// next_complex_gaussian) reproduces our fuzz campaigns seed for seed.
class SplitMix64 {
 public:
  explicit SplitMix64(RngSeed seed) : state_(seed.value) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a logarithm argument.
  double next_unit_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts,
  /// from one Box-Muller pair (two u64 draws: radius first, angle second).
  std::complex<double> next_complex_gaussian() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  std::uint64_t state_;
};

/// Per-trial seed derivation for fuzz campaigns: base seed XOR trial index.
inline RngSeed derive_seed(RngSeed base, std::uint64_t trial_index) { return RngSeed{base.value ^ trial_index}; }

}  // namespace trineq
