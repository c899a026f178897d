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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmld/gf2m.h"
#include "cmld/group_algebra.h"
#include "cmld/rng.h"

namespace cmld {

using GateId = std::uint32_t;
using VarId = std::uint32_t;

struct InputGate {
  VarId var;
};

struct AddGate {
  std::vector<GateId> children;
};

struct MulGate {
  GateId left;
  GateId right;
};

using Gate = std::variant<InputGate, AddGate, MulGate>;

// Arithmetic circuit over variables x_0, x_1, ... as an append-only DAG:
// every child id is smaller than its parent's, so gate order is a
// topological order. Input gates are shared, one per variable.
class Circuit {
 public:
  GateId NewInput(VarId var);
  // Throws std::invalid_argument for an empty child list or unknown ids.
  GateId NewAdd(std::vector<GateId> children);
  GateId NewMul(GateId left, GateId right);

  void SetOutput(GateId gate);

  std::span<const Gate> gates() const { return gates_; }
  const Gate& gate(GateId id) const { return gates_.at(id); }
  std::size_t size() const { return gates_.size(); }
  bool has_output() const { return output_.has_value(); }
  // The last gate appended unless SetOutput chose another.
  GateId output() const;

  // One past the largest variable id used by any input gate.
  VarId num_vars() const { return num_vars_; }
  // Sorted ids of the variables that appear in the circuit.
  std::vector<VarId> Variables() const;
  // Number of addition-gate input edges (the multipliers of Extend).
  std::size_t NumAddEdges() const { return add_edges_; }

 private:
  void CheckChild(GateId id) const;

  std::vector<Gate> gates_;
  std::vector<std::optional<GateId>> input_of_var_;
  std::optional<GateId> output_;
  VarId num_vars_ = 0;
  std::size_t add_edges_ = 0;
};

struct DegreeRange {
  int min_degree = 0;
  int max_degree = 0;

  friend bool operator==(DegreeRange, DegreeRange) = default;
};

// Per-gate degree bounds: inputs (1,1), additions (min of mins, max of
// maxes), multiplications add componentwise.
std::vector<DegreeRange> ComputeDegreeRanges(const Circuit& c);

// True iff the output gate is homogeneous of degree exactly k.
bool DegreeCheck(const Circuit& c, int k);

// One field multiplier per addition-gate input edge, indexed by
// (gate, child position).
class EdgeMultipliers {
 public:
  EdgeMultipliers() = default;

  // All-ones multipliers: evaluation then computes P(X) itself.
  static EdgeMultipliers Ones(const Circuit& c);

  FieldElement At(GateId add_gate, std::size_t position) const {
    return values_[offset_.at(add_gate) + position];
  }
  std::size_t size() const { return values_.size(); }
  std::span<const FieldElement> values() const { return values_; }

 private:
  friend EdgeMultipliers Extend(const Circuit&, const FieldContext&, Rng&);
  friend EdgeMultipliers MakeMultipliers(const Circuit&,
                                         std::span<const FieldElement>);

  std::vector<std::size_t> offset_;  // per gate; unused for non-additions
  std::vector<FieldElement> values_;
};

// Fresh i.i.d. uniform multipliers, drawn in gate order then child order.
EdgeMultipliers Extend(const Circuit& c, const FieldContext& field, Rng& rng);

// Multipliers given explicitly in the same order Extend draws them.
EdgeMultipliers MakeMultipliers(const Circuit& c,
                                std::span<const FieldElement> values);

// Evaluates the circuit over R[Z2^k] in gate order. Addition gates sum their
// children scaled by the edge multipliers. `assign` must hold a value for
// every variable that appears in the circuit (indexed by VarId); values of
// gates are released after their last use.
template <CoefficientRing Ring>
GroupAlgebraElement<Ring> Evaluate(
    const Circuit& c, const Ring& ring, const EdgeMultipliers& mult,
    std::span<const std::optional<GroupAlgebraElement<Ring>>> assign) {
  if (c.size() == 0) throw std::invalid_argument("empty circuit");
  const GateId out_id = c.output();
  const auto gates = c.gates();

  std::vector<GateId> last_use(gates.size(), 0);
  for (GateId g = 0; g < gates.size(); ++g) {
    if (const auto* add = std::get_if<AddGate>(&gates[g])) {
      for (GateId ch : add->children) last_use[ch] = g;
    } else if (const auto* mul = std::get_if<MulGate>(&gates[g])) {
      last_use[mul->left] = g;
      last_use[mul->right] = g;
    }
  }
  last_use[out_id] = static_cast<GateId>(gates.size());

  int dim = -1;
  std::vector<GroupAlgebraElement<Ring>> value(gates.size());
  auto release = [&](GateId child, GateId at) {
    if (last_use[child] == at) value[child] = GroupAlgebraElement<Ring>();
  };

  for (GateId g = 0; g <= out_id; ++g) {
    if (const auto* in = std::get_if<InputGate>(&gates[g])) {
      if (in->var >= assign.size() || !assign[in->var].has_value()) {
        throw std::invalid_argument("unassigned variable x" +
                                    std::to_string(in->var));
      }
      value[g] = *assign[in->var];
      if (dim < 0) dim = value[g].dim();
      detail::CheckSameDim(dim, value[g].dim());
    } else if (const auto* add = std::get_if<AddGate>(&gates[g])) {
      GroupAlgebraElement<Ring> acc(ring, value[add->children[0]].dim());
      for (std::size_t i = 0; i < add->children.size(); ++i) {
        AddScaledInPlace(ring, acc, value[add->children[i]], mult.At(g, i));
      }
      for (GateId ch : add->children) release(ch, g);
      value[g] = std::move(acc);
    } else {
      const auto& mul = std::get<MulGate>(gates[g]);
      value[g] = Mul(ring, value[mul.left], value[mul.right]);
      release(mul.left, g);
      release(mul.right, g);
    }
  }
  return std::move(value[out_id]);
}

}  // namespace cmld
