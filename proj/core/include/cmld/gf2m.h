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
#include <memory>
#include <vector>

#include "cmld/rng.h"

namespace cmld {

// An element of GF(2^b): a polynomial over GF(2) of degree < b, one bit per
// coefficient.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

// Characteristic 2: addition is XOR and every element is its own negative.
constexpr FieldElement operator+(FieldElement a, FieldElement b) {
  return FieldElement{a.value ^ b.value};
}

inline FieldElement& operator+=(FieldElement& a, FieldElement b) {
  a.value ^= b.value;
  return a;
}

// The smallest irreducible polynomial of degree `bits` over GF(2), with bit
// `bits` set (x + 1 for degree 1). Valid for 1 <= bits <= 32.
std::uint64_t DefaultReductionPolynomial(int bits);

// Schoolbook shift-XOR product of a and b modulo `poly` (degree `bits`).
std::uint32_t CarrylessMulMod(std::uint32_t a, std::uint32_t b,
                              std::uint64_t poly, int bits);

// Arithmetic in F = GF(2^bits). Immutable after construction and cheap to
// copy; copies share the log/exp tables used for bits <= 16.
class FieldContext {
 public:
  static constexpr int kMinBits = 1;
  static constexpr int kMaxBits = 32;
  static constexpr int kMaxTableBits = 16;

  // Throws std::invalid_argument outside [kMinBits, kMaxBits].
  explicit FieldContext(int bits);

  // ceil(log2 k) + 5, clamped to kMaxBits. Covers both 3 + log2 k and
  // log2 k + 5.
  static int DefaultBitsForDegree(int k);

  int bits() const { return bits_; }
  std::uint64_t reduction_poly() const { return poly_; }
  std::uint64_t order() const { return std::uint64_t{1} << bits_; }

  FieldElement Zero() const { return FieldElement{0}; }
  FieldElement One() const { return FieldElement{1}; }

  FieldElement Add(FieldElement a, FieldElement b) const { return a + b; }

  FieldElement Mul(FieldElement a, FieldElement b) const {
    if (tables_ != nullptr) {
      if (a.value == 0 || b.value == 0) return FieldElement{0};
      const std::uint32_t* log = tables_->log.data();
      return FieldElement{tables_->exp[log[a.value] + log[b.value]]};
    }
    return FieldElement{CarrylessMulMod(a.value, b.value, poly_, bits_)};
  }

  // Uniform over all 2^bits elements, zero included.
  FieldElement Random(Rng& rng) const {
    return FieldElement{static_cast<std::uint32_t>(RandomBits(rng, bits_))};
  }

  bool Contains(FieldElement a) const {
    return static_cast<std::uint64_t>(a.value) < order();
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> exp;  // doubled, so log a + log b never wraps
  };

  int bits_;
  std::uint64_t poly_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace cmld
