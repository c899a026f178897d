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

#include "cmld/gf2m.h"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace cmld {
namespace {

// Lexicographically smallest irreducible of each degree 1..32, with x + 1
// (rather than x) for degree 1 so that every entry has constant term 1.
constexpr std::array<std::uint64_t, 33> kIrreducible = {
    0x0,                                                    //
    0x3,        0x7,        0xb,        0x13,               // 1-4
    0x25,       0x43,       0x83,       0x11b,              // 5-8
    0x203,      0x409,      0x805,      0x1009,             // 9-12
    0x201b,     0x4021,     0x8003,     0x1002b,            // 13-16
    0x20009,    0x40009,    0x80027,    0x100009,           // 17-20
    0x200005,   0x400003,   0x800021,   0x100001b,          // 21-24
    0x2000009,  0x400001b,  0x8000027,  0x10000003,         // 25-28
    0x20000005, 0x40000003, 0x80000009, 0x10000008dULL,     // 29-32
};

}  // namespace

std::uint64_t DefaultReductionPolynomial(int bits) {
  if (bits < FieldContext::kMinBits || bits > FieldContext::kMaxBits) {
    throw std::invalid_argument("unsupported field width: " +
                                std::to_string(bits));
  }
  return kIrreducible[bits];
}

std::uint32_t CarrylessMulMod(std::uint32_t a, std::uint32_t b,
                              std::uint64_t poly, int bits) {
  const std::uint64_t top = std::uint64_t{1} << bits;
  std::uint64_t x = a;
  std::uint64_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= x;
    b >>= 1;
    x <<= 1;
    if (x & top) x ^= poly;
  }
  return static_cast<std::uint32_t>(acc);
}

FieldContext::FieldContext(int bits)
    : bits_(bits), poly_(DefaultReductionPolynomial(bits)) {
  if (bits_ < 2 || bits_ > kMaxTableBits) return;

  // The reduction polynomial need not be primitive, so search for a
  // generator of the multiplicative group.
  const std::uint32_t group_order = static_cast<std::uint32_t>(order() - 1);
  auto tables = std::make_shared<Tables>();
  tables->log.assign(order(), 0);
  tables->exp.assign(2 * static_cast<std::size_t>(group_order), 0);
  for (std::uint32_t g = 2; g < order(); ++g) {
    std::uint32_t x = 1;
    std::uint32_t period = 0;
    do {
      tables->exp[period++] = x;
      x = CarrylessMulMod(x, g, poly_, bits_);
    } while (x != 1 && period < group_order);
    if (x == 1 && period == group_order) break;
  }
  for (std::uint32_t i = 0; i < group_order; ++i) {
    tables->log[tables->exp[i]] = i;
    tables->exp[i + group_order] = tables->exp[i];
  }
  tables_ = std::move(tables);
}

int FieldContext::DefaultBitsForDegree(int k) {
  int log2k = k <= 1 ? 0 : std::bit_width(static_cast<unsigned>(k - 1));
  int bits = log2k + 5;
  return bits > kMaxBits ? kMaxBits : bits;
}

}  // namespace cmld
