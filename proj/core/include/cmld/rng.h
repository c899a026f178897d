// Copyright 2026 The cmld Authors.
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

#include <cstdint>
#include <random>

namespace cmld {

// All randomness flows through explicitly seeded mt19937_64 streams. Only the
// raw 64-bit output is consumed (never std:: distributions), so a given seed
// produces the same draws on every standard library.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed of sub-stream `stream` of `seed`. Distinct (seed, stream) pairs give
// unrelated streams.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

inline Rng MakeStream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(DeriveSeed(seed, stream));
}

// Uniform value with the low `bits` bits random (bits <= 64).
inline std::uint64_t RandomBits(Rng& rng, int bits) {
  if (bits <= 0) return 0;
  std::uint64_t x = rng();
  return bits >= 64 ? x : (x & ((std::uint64_t{1} << bits) - 1));
}

// Uniform integer in [0, n), n >= 1. Rejection sampling on a power-of-two
// mask.
std::uint64_t UniformBelow(Rng& rng, std::uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cmld
