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

// Elements of R[Z2^k]: formal R-linear combinations of k-bit vectors, where
// the group product of two vectors is their XOR. Stored densely, one
// coefficient per vector.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cmld/coefficient_ring.h"

namespace cmld {

// A vector of Z2^dim. bits < 2^dim; the identity v0 is bits == 0.
struct GroupVector {
  int dim = 0;
  std::uint32_t bits = 0;

  friend constexpr bool operator==(GroupVector, GroupVector) = default;
};

constexpr GroupVector operator^(GroupVector a, GroupVector b) {
  return GroupVector{a.dim, a.bits ^ b.bits};
}

// Largest dimension any element may have (2^24 coefficients).
inline constexpr int kMaxGroupDimension = 24;

template <CoefficientRing Ring>
class GroupAlgebraElement {
 public:
  using Value = typename Ring::Value;

  GroupAlgebraElement() = default;

  // The zero element of R[Z2^dim].
  GroupAlgebraElement(const Ring& ring, int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxGroupDimension) {
      throw std::invalid_argument("group dimension out of range");
    }
    coeffs_.assign(std::size_t{1} << dim, ring.Zero());
  }

  int dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }

  const Value& operator[](std::uint32_t index) const { return coeffs_[index]; }
  Value& operator[](std::uint32_t index) { return coeffs_[index]; }

  std::span<const Value> coeffs() const { return coeffs_; }
  std::span<Value> coeffs() { return coeffs_; }

 private:
  int dim_ = 0;
  std::vector<Value> coeffs_;
};

namespace detail {

inline void CheckSameDim(int a, int b) {
  if (a != b) throw std::invalid_argument("group algebra dimension mismatch");
}

inline std::uint64_t Pow3(int n) {
  std::uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

// Sizes at or below this use the quadratic loop inside the Karatsuba split.
inline constexpr std::size_t kKaratsubaBase = 8;

template <CoefficientRing Ring>
void SchoolbookXor(const Ring& ring, const typename Ring::Value* a,
                   const typename Ring::Value* b, typename Ring::Value* out,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = ring.Zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.IsZero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      ring.MulAddTo(out[i ^ j], a[i], b[j]);
    }
  }
}

// (a0 + a1 g)(b0 + b1 g) with g^2 = 1 over a characteristic-2 ring:
//   low  = a0 b0 + a1 b1
//   high = (a0 + a1)(b0 + b1) + a0 b0 + a1 b1
// Three half-size products; scratch must hold 3n values.
template <CoefficientRing Ring>
void KaratsubaXor(const Ring& ring, const typename Ring::Value* a,
                  const typename Ring::Value* b, typename Ring::Value* out,
                  std::size_t n, typename Ring::Value* scratch) {
  if (n <= kKaratsubaBase) {
    SchoolbookXor(ring, a, b, out, n);
    return;
  }
  const std::size_t h = n / 2;
  auto* sum_a = scratch;
  auto* sum_b = scratch + h;
  auto* mid = scratch + 2 * h;
  auto* rest = scratch + 3 * h;

  KaratsubaXor(ring, a, b, out, h, rest);
  KaratsubaXor(ring, a + h, b + h, out + h, h, rest);
  for (std::size_t i = 0; i < h; ++i) {
    sum_a[i] = ring.Add(a[i], a[h + i]);
    sum_b[i] = ring.Add(b[i], b[h + i]);
  }
  KaratsubaXor(ring, sum_a, sum_b, mid, h, rest);
  for (std::size_t i = 0; i < h; ++i) {
    auto low = ring.Add(out[i], out[h + i]);
    out[h + i] = ring.Add(mid[i], low);
    out[i] = std::move(low);
  }
}

template <CoefficientRing Ring>
std::vector<std::uint32_t> Support(const Ring& ring,
                                   const GroupAlgebraElement<Ring>& a) {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (!ring.IsZero(a[i])) idx.push_back(i);
  }
  return idx;
}

}  // namespace detail

// 1 * v0.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> Identity(const Ring& ring, int dim) {
  GroupAlgebraElement<Ring> e(ring, dim);
  e[0] = ring.One();
  return e;
}

// v0 + v. Callers pass v != v0; for v == v0 the two terms cancel to zero.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> FromPair(const Ring& ring, GroupVector v) {
  GroupAlgebraElement<Ring> e(ring, v.dim);
  ring.AddTo(e[0], ring.One());
  ring.AddTo(e[v.bits], ring.One());
  return e;
}

template <CoefficientRing Ring>
bool IsZero(const Ring& ring, const GroupAlgebraElement<Ring>& a) {
  for (const auto& c : a.coeffs()) {
    if (!ring.IsZero(c)) return false;
  }
  return true;
}

template <CoefficientRing Ring>
std::size_t CountNonzero(const Ring& ring, const GroupAlgebraElement<Ring>& a) {
  std::size_t n = 0;
  for (const auto& c : a.coeffs()) n += ring.IsZero(c) ? 0 : 1;
  return n;
}

template <CoefficientRing Ring>
void AddInPlace(const Ring& ring, GroupAlgebraElement<Ring>& acc,
                const GroupAlgebraElement<Ring>& a) {
  detail::CheckSameDim(acc.dim(), a.dim());
  for (std::uint32_t i = 0; i < a.size(); ++i) ring.AddTo(acc[i], a[i]);
}

// acc += s * a for a field scalar s.
template <CoefficientRing Ring>
void AddScaledInPlace(const Ring& ring, GroupAlgebraElement<Ring>& acc,
                      const GroupAlgebraElement<Ring>& a, FieldElement s) {
  detail::CheckSameDim(acc.dim(), a.dim());
  if (s.value == 0) return;
  for (std::uint32_t i = 0; i < a.size(); ++i) ring.ScaledAddTo(acc[i], a[i], s);
}

template <CoefficientRing Ring>
GroupAlgebraElement<Ring> Add(const Ring& ring,
                              const GroupAlgebraElement<Ring>& a,
                              const GroupAlgebraElement<Ring>& b) {
  GroupAlgebraElement<Ring> out = a;
  AddInPlace(ring, out, b);
  return out;
}

// Multiplies every coefficient by the ring value s.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> Scale(const Ring& ring,
                                const GroupAlgebraElement<Ring>& a,
                                const typename Ring::Value& s) {
  GroupAlgebraElement<Ring> out(ring, a.dim());
  for (std::uint32_t i = 0; i < a.size(); ++i) out[i] = ring.Mul(a[i], s);
  return out;
}

// Reference XOR convolution: out[u ^ w] += a[u] b[w]. O(4^k).
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> MulSchoolbook(const Ring& ring,
                                        const GroupAlgebraElement<Ring>& a,
                                        const GroupAlgebraElement<Ring>& b) {
  detail::CheckSameDim(a.dim(), b.dim());
  GroupAlgebraElement<Ring> out(ring, a.dim());
  detail::SchoolbookXor(ring, a.coeffs().data(), b.coeffs().data(),
                        out.coeffs().data(), a.size());
  return out;
}

// O(3^k) split on the top coordinate.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> MulKaratsuba(const Ring& ring,
                                       const GroupAlgebraElement<Ring>& a,
                                       const GroupAlgebraElement<Ring>& b) {
  detail::CheckSameDim(a.dim(), b.dim());
  GroupAlgebraElement<Ring> out(ring, a.dim());
  std::vector<typename Ring::Value> scratch(3 * a.size(), ring.Zero());
  detail::KaratsubaXor(ring, a.coeffs().data(), b.coeffs().data(),
                       out.coeffs().data(), a.size(), scratch.data());
  return out;
}

// Product over the supports only: O(nnz(a) * nnz(b)).
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> MulSparse(const Ring& ring,
                                    const GroupAlgebraElement<Ring>& a,
                                    const GroupAlgebraElement<Ring>& b) {
  detail::CheckSameDim(a.dim(), b.dim());
  GroupAlgebraElement<Ring> out(ring, a.dim());
  const auto sa = detail::Support(ring, a);
  const auto sb = detail::Support(ring, b);
  for (std::uint32_t i : sa) {
    for (std::uint32_t j : sb) ring.MulAddTo(out[i ^ j], a[i], b[j]);
  }
  return out;
}

// a * (v0 + v) in O(2^k): out[w] = a[w] + a[w ^ v].
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> MulByPair(const Ring& ring,
                                    const GroupAlgebraElement<Ring>& a,
                                    GroupVector v) {
  detail::CheckSameDim(a.dim(), v.dim);
  GroupAlgebraElement<Ring> out(ring, a.dim());
  for (std::uint32_t w = 0; w < a.size(); ++w) {
    out[w] = ring.Add(a[w], a[w ^ v.bits]);
  }
  return out;
}

// Picks the sparse product when the supports are small enough to beat the
// O(3^k) split, which is the common case for low-degree circuit gates.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> Mul(const Ring& ring,
                              const GroupAlgebraElement<Ring>& a,
                              const GroupAlgebraElement<Ring>& b) {
  detail::CheckSameDim(a.dim(), b.dim());
  const std::uint64_t na = CountNonzero(ring, a);
  const std::uint64_t nb = CountNonzero(ring, b);
  if (na == 0 || nb == 0) return GroupAlgebraElement<Ring>(ring, a.dim());
  if (na * nb <= detail::Pow3(a.dim())) return MulSparse(ring, a, b);
  return MulKaratsuba(ring, a, b);
}

template <CoefficientRing Ring>
bool Equal(const GroupAlgebraElement<Ring>& a,
           const GroupAlgebraElement<Ring>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

}  // namespace cmld
