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

#include "cmld/circuit_text.h"

#include <cctype>
#include <unordered_map>

#include "cmld/errors.h"

namespace cmld {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedCircuit Run() {
    SkipSpace();
    if (AtEnd()) Fail("empty circuit");
    const GateId out = ParseExpr();
    SkipSpace();
    if (!AtEnd()) Fail("unexpected text after expression");
    result_.circuit.SetOutput(out);
    return std::move(result_);
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw InputError(msg, line_, col_);
  }

  void SkipSpace() {
    while (!AtEnd()) {
      const char ch = Peek();
      if (ch == ';') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        Advance();
      } else {
        break;
      }
    }
  }

  static bool IsIdentChar(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }

  GateId ParseExpr() {
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() == '(') return ParseList();
    if (Peek() == ')') Fail("unbalanced ')'");
    return ParseAtom();
  }

  GateId ParseAtom() {
    const int line = line_;
    const int col = col_;
    std::string token;
    while (!AtEnd() && !std::isspace(static_cast<unsigned char>(Peek())) &&
           Peek() != '(' && Peek() != ')' && Peek() != ';') {
      token.push_back(Peek());
      Advance();
    }
    bool ok = token.size() >= 2 && token[0] == 'x';
    for (std::size_t i = 1; ok && i < token.size(); ++i) {
      ok = IsIdentChar(token[i]);
    }
    if (!ok) throw InputError("unknown token '" + token + "'", line, col);

    auto [it, inserted] = var_ids_.try_emplace(
        token, static_cast<VarId>(result_.var_names.size()));
    if (inserted) result_.var_names.push_back(token);
    return result_.circuit.NewInput(it->second);
  }

  GateId ParseList() {
    Advance();  // '('
    SkipSpace();
    if (AtEnd()) Fail("unbalanced '('");
    const char op = Peek();
    if (op != '+' && op != '*') Fail(std::string("unknown operator '") + op + "'");
    Advance();
    if (!AtEnd() && !std::isspace(static_cast<unsigned char>(Peek())) &&
        Peek() != '(' && Peek() != ';') {
      Fail("expected whitespace after operator");
    }

    std::vector<GateId> operands;
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail("unbalanced '('");
      if (Peek() == ')') {
        Advance();
        break;
      }
      operands.push_back(ParseExpr());
    }

    if (op == '+') {
      if (operands.empty()) Fail("'+' needs at least one operand");
      return result_.circuit.NewAdd(std::move(operands));
    }
    if (operands.size() < 2) Fail("'*' needs at least two operands");
    GateId acc = operands[0];
    for (std::size_t i = 1; i < operands.size(); ++i) {
      acc = result_.circuit.NewMul(acc, operands[i]);
    }
    return acc;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  ParsedCircuit result_;
  std::unordered_map<std::string, VarId> var_ids_;
};

void FormatGate(const Circuit& c, const std::vector<std::string>& names,
                GateId g, std::string& out, std::size_t max_bytes) {
  if (out.size() > max_bytes) {
    throw ResourceError("circuit text exceeds size limit");
  }
  const Gate& gate = c.gate(g);
  if (const auto* in = std::get_if<InputGate>(&gate)) {
    if (in->var < names.size() && !names[in->var].empty()) {
      out += names[in->var];
    } else {
      out += "x" + std::to_string(in->var);
    }
  } else if (const auto* add = std::get_if<AddGate>(&gate)) {
    out += "(+";
    for (GateId ch : add->children) {
      out += ' ';
      FormatGate(c, names, ch, out, max_bytes);
    }
    out += ')';
  } else {
    const auto& mul = std::get<MulGate>(gate);
    out += "(* ";
    FormatGate(c, names, mul.left, out, max_bytes);
    out += ' ';
    FormatGate(c, names, mul.right, out, max_bytes);
    out += ')';
  }
}

}  // namespace

ParsedCircuit ParseCircuit(std::string_view text) { return Parser(text).Run(); }

std::string FormatCircuit(const Circuit& c,
                          const std::vector<std::string>& var_names,
                          std::size_t max_bytes) {
  std::string out;
  FormatGate(c, var_names, c.output(), out, max_bytes);
  out += '\n';
  return out;
}

}  // namespace cmld
