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

#include "cmld/circuit.h"

#include <algorithm>

namespace cmld {

void Circuit::CheckChild(GateId id) const {
  if (id >= gates_.size()) {
    throw std::invalid_argument("unknown child gate " + std::to_string(id));
  }
}

GateId Circuit::NewInput(VarId var) {
  if (var >= input_of_var_.size()) input_of_var_.resize(var + 1);
  if (input_of_var_[var]) return *input_of_var_[var];
  const auto id = static_cast<GateId>(gates_.size());
  gates_.push_back(InputGate{var});
  input_of_var_[var] = id;
  num_vars_ = std::max(num_vars_, var + 1);
  return id;
}

GateId Circuit::NewAdd(std::vector<GateId> children) {
  if (children.empty()) {
    throw std::invalid_argument("addition gate needs at least one child");
  }
  for (GateId ch : children) CheckChild(ch);
  add_edges_ += children.size();
  const auto id = static_cast<GateId>(gates_.size());
  gates_.push_back(AddGate{std::move(children)});
  return id;
}

GateId Circuit::NewMul(GateId left, GateId right) {
  CheckChild(left);
  CheckChild(right);
  const auto id = static_cast<GateId>(gates_.size());
  gates_.push_back(MulGate{left, right});
  return id;
}

void Circuit::SetOutput(GateId gate) {
  CheckChild(gate);
  output_ = gate;
}

GateId Circuit::output() const {
  if (output_) return *output_;
  if (gates_.empty()) throw std::logic_error("circuit has no gates");
  return static_cast<GateId>(gates_.size() - 1);
}

std::vector<VarId> Circuit::Variables() const {
  std::vector<VarId> vars;
  for (VarId v = 0; v < input_of_var_.size(); ++v) {
    if (input_of_var_[v]) vars.push_back(v);
  }
  return vars;
}

std::vector<DegreeRange> ComputeDegreeRanges(const Circuit& c) {
  const auto gates = c.gates();
  std::vector<DegreeRange> deg(gates.size());
  for (GateId g = 0; g < gates.size(); ++g) {
    if (std::holds_alternative<InputGate>(gates[g])) {
      deg[g] = {1, 1};
    } else if (const auto* add = std::get_if<AddGate>(&gates[g])) {
      DegreeRange r = deg[add->children[0]];
      for (GateId ch : add->children) {
        r.min_degree = std::min(r.min_degree, deg[ch].min_degree);
        r.max_degree = std::max(r.max_degree, deg[ch].max_degree);
      }
      deg[g] = r;
    } else {
      const auto& mul = std::get<MulGate>(gates[g]);
      deg[g] = {deg[mul.left].min_degree + deg[mul.right].min_degree,
                deg[mul.left].max_degree + deg[mul.right].max_degree};
    }
  }
  return deg;
}

bool DegreeCheck(const Circuit& c, int k) {
  if (c.size() == 0) return false;
  const DegreeRange r = ComputeDegreeRanges(c)[c.output()];
  return r.min_degree == k && r.max_degree == k;
}

EdgeMultipliers MakeMultipliers(const Circuit& c,
                                std::span<const FieldElement> values) {
  if (values.size() != c.NumAddEdges()) {
    throw std::invalid_argument("multiplier count does not match circuit");
  }
  EdgeMultipliers m;
  m.offset_.assign(c.size(), 0);
  m.values_.assign(values.begin(), values.end());
  std::size_t next = 0;
  const auto gates = c.gates();
  for (GateId g = 0; g < gates.size(); ++g) {
    if (const auto* add = std::get_if<AddGate>(&gates[g])) {
      m.offset_[g] = next;
      next += add->children.size();
    }
  }
  return m;
}

EdgeMultipliers EdgeMultipliers::Ones(const Circuit& c) {
  std::vector<FieldElement> ones(c.NumAddEdges(), FieldElement{1});
  return MakeMultipliers(c, ones);
}

EdgeMultipliers Extend(const Circuit& c, const FieldContext& field, Rng& rng) {
  std::vector<FieldElement> values(c.NumAddEdges());
  for (auto& v : values) v = field.Random(rng);
  return MakeMultipliers(c, values);
}

}  // namespace cmld
