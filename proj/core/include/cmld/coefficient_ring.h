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

#include <algorithm>
#include <array>
#include <concepts>
#include <optional>
#include <stdexcept>

#include "cmld/gf2m.h"
#include "cmld/rng.h"

namespace cmld {

// Coefficient rings for the group algebra. Both rings are commutative of
// characteristic 2, so Add doubles as subtraction.
template <class R>
concept CoefficientRing =
    requires(const R& r, typename R::Value& acc, const typename R::Value& a,
             FieldElement s, Rng& rng) {
      { r.Zero() } -> std::same_as<typename R::Value>;
      { r.One() } -> std::same_as<typename R::Value>;
      { r.Add(a, a) } -> std::same_as<typename R::Value>;
      { r.Mul(a, a) } -> std::same_as<typename R::Value>;
      { r.IsZero(a) } -> std::same_as<bool>;
      { r.ScaleByField(a, s) } -> std::same_as<typename R::Value>;
      { r.Random(rng) } -> std::same_as<typename R::Value>;
      r.AddTo(acc, a);
      r.MulAddTo(acc, a, a);
      r.ScaledAddTo(acc, a, s);
      { r.field() } -> std::same_as<const FieldContext&>;
    };

// R = F itself.
class FieldRing {
 public:
  using Value = FieldElement;

  explicit FieldRing(FieldContext field) : field_(std::move(field)) {}

  const FieldContext& field() const { return field_; }

  Value Zero() const { return FieldElement{0}; }
  Value One() const { return FieldElement{1}; }
  Value Add(Value a, Value b) const { return a + b; }
  Value Mul(Value a, Value b) const { return field_.Mul(a, b); }
  bool IsZero(Value a) const { return a.value == 0; }
  Value ScaleByField(Value a, FieldElement s) const { return field_.Mul(a, s); }
  Value Random(Rng& rng) const { return field_.Random(rng); }

  void AddTo(Value& acc, Value a) const { acc += a; }
  void MulAddTo(Value& acc, Value a, Value b) const { acc += field_.Mul(a, b); }
  void ScaledAddTo(Value& acc, Value a, FieldElement s) const {
    acc += field_.Mul(a, s);
  }

 private:
  FieldContext field_;
};

// Univariate polynomial in an unevaluated indeterminate z over F, truncated
// above a degree cap fixed by its ring. Coefficients above `top` are zero.
struct ZPoly {
  static constexpr int kCapacity = 17;

  std::array<FieldElement, kCapacity> coeffs{};
  int top = -1;  // highest nonzero degree, -1 for the zero polynomial

  bool IsZero() const { return top < 0; }

  void Normalize(int from) {
    top = from;
    while (top >= 0 && coeffs[top].value == 0) --top;
  }

  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    return a.top == b.top && a.coeffs == b.coeffs;
  }
};

// Smallest d with a nonzero z^d coefficient, or nullopt for zero.
inline std::optional<int> MinNonzeroDegree(const ZPoly& p) {
  for (int d = 0; d <= p.top; ++d) {
    if (p.coeffs[d].value != 0) return d;
  }
  return std::nullopt;
}

// R = F[z] / (z^(cap+1)).
class ZPolyRing {
 public:
  using Value = ZPoly;
  static constexpr int kMaxDegreeCap = ZPoly::kCapacity - 1;

  ZPolyRing(FieldContext field, int degree_cap)
      : field_(std::move(field)), cap_(degree_cap) {
    if (degree_cap < 0 || degree_cap > kMaxDegreeCap) {
      throw std::invalid_argument("z-polynomial degree cap out of range");
    }
  }

  const FieldContext& field() const { return field_; }
  int degree_cap() const { return cap_; }

  Value Zero() const { return ZPoly{}; }
  Value One() const { return Monomial(0, FieldElement{1}); }

  // c * z^d (zero if d exceeds the cap).
  Value Monomial(int d, FieldElement c) const {
    ZPoly p;
    if (d <= cap_ && c.value != 0) {
      p.coeffs[d] = c;
      p.top = d;
    }
    return p;
  }

  Value Add(const Value& a, const Value& b) const {
    ZPoly out = a;
    AddTo(out, b);
    return out;
  }

  Value Mul(const Value& a, const Value& b) const {
    ZPoly out;
    MulAddTo(out, a, b);
    return out;
  }

  bool IsZero(const Value& a) const { return a.IsZero(); }

  Value ScaleByField(const Value& a, FieldElement s) const {
    ZPoly out;
    ScaledAddTo(out, a, s);
    return out;
  }

  Value Random(Rng& rng) const {
    ZPoly p;
    for (int d = 0; d <= cap_; ++d) p.coeffs[d] = field_.Random(rng);
    p.Normalize(cap_);
    return p;
  }

  void AddTo(Value& acc, const Value& a) const {
    const int hi = std::max(acc.top, a.top);
    for (int d = 0; d <= a.top; ++d) acc.coeffs[d] += a.coeffs[d];
    acc.Normalize(hi);
  }

  void MulAddTo(Value& acc, const Value& a, const Value& b) const {
    if (a.top < 0 || b.top < 0) return;
    for (int i = 0; i <= a.top; ++i) {
      const FieldElement ai = a.coeffs[i];
      if (ai.value == 0) continue;
      const int jmax = std::min(b.top, cap_ - i);
      for (int j = 0; j <= jmax; ++j) {
        acc.coeffs[i + j] += field_.Mul(ai, b.coeffs[j]);
      }
    }
    acc.Normalize(std::max(acc.top, std::min(a.top + b.top, cap_)));
  }

  void ScaledAddTo(Value& acc, const Value& a, FieldElement s) const {
    if (s.value == 0 || a.top < 0) return;
    for (int d = 0; d <= a.top; ++d) acc.coeffs[d] += field_.Mul(a.coeffs[d], s);
    acc.Normalize(std::max(acc.top, a.top));
  }

 private:
  FieldContext field_;
  int cap_;
};

static_assert(CoefficientRing<FieldRing>);
static_assert(CoefficientRing<ZPolyRing>);

}  // namespace cmld
