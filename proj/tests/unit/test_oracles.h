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

// Independent reference computations used only by tests.

#include <cstdint>
#include <vector>

namespace cmld::testing {

inline int PolyDegree(std::uint64_t p) {
  int d = -1;
  while (p != 0) {
    p >>= 1;
    ++d;
  }
  return d;
}

// Remainder of a by b over GF(2).
inline std::uint64_t PolyMod(std::uint64_t a, std::uint64_t b) {
  const int db = PolyDegree(b);
  for (int da = PolyDegree(a); da >= db; da = PolyDegree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

// Irreducibility over GF(2) by trial division with every polynomial of
// degree 1 .. deg(p)/2.
inline bool IsIrreducibleByTrialDivision(std::uint64_t p) {
  const int d = PolyDegree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; PolyDegree(q) <= d / 2; ++q) {
    if (PolyMod(p, q) == 0) return false;
  }
  return true;
}

// Product of polynomials over GF(2) reduced mod `poly`, computed on the full
// carry-less product first.
inline std::uint32_t ReferenceFieldMul(std::uint32_t a, std::uint32_t b,
                                       std::uint64_t poly) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) prod ^= static_cast<std::uint64_t>(a) << i;
  }
  return static_cast<std::uint32_t>(PolyMod(prod, poly));
}

// Coefficients of prod_i (v0 + v_i) over GF(2), by expanding the product
// into its 2^t subset terms: each subset S contributes the group element
// XOR_{i in S} v_i.
inline std::vector<int> ExpandPairProduct(const std::vector<std::uint32_t>& v,
                                          int dim) {
  std::vector<int> coeff(std::size_t{1} << dim, 0);
  const std::uint64_t subsets = std::uint64_t{1} << v.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if ((s >> i) & 1u) x ^= v[i];
    }
    coeff[x] ^= 1;
  }
  return coeff;
}

// GF(2) rank by brute force: the size of the largest subset whose nonempty
// sub-XORs are all nonzero, found via the span size (span = 2^rank).
inline int RankBySpan(const std::vector<std::uint32_t>& rows) {
  std::vector<std::uint32_t> span = {0};
  for (std::uint32_t r : rows) {
    bool inside = false;
    for (std::uint32_t s : span) inside |= (s == r);
    if (inside) continue;
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ r);
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

}  // namespace cmld::testing
