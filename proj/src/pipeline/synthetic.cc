// Copyright 2026 The divtcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pipeline/synthetic.h"

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>

#include "classfile/opcodes.h"
#include "common/random.h"

namespace divtcp::pipeline {
namespace {

using classfile::Instruction;

constexpr std::array<std::string_view, 24> kWords = {
    "big",    "fraction", "format", "parse",  "value",  "number", "result", "expected",
    "actual", "string",   "buffer", "list",   "map",    "index",  "count",  "builder",
    "reader", "writer",   "config", "stream", "output", "input",  "node",   "cache"};

constexpr std::array<std::string_view, 8> kCalls = {
    "assertEquals", "assertTrue", "assertNotNull", "assertFalse",
    "getNumerator", "toString",   "valueOf",       "format"};

constexpr std::array<std::string_view, 5> kTypes = {"BigFraction", "String", "double", "int",
                                                    "List<String>"};

// Weighted instruction shapes: {weight, opcode, immediate bytes}. `new` is
// always followed by dup.
struct Shape {
  int weight;
  std::uint8_t opcode;
  int immediates;
  int pool_operands;
};

constexpr std::array<Shape, 20> kShapes = {{
    {10, 0x2A, 0, 0},  // aload_0
    {6, 0x2B, 0, 0},   // aload_1
    {4, 0x2C, 0, 0},   // aload_2
    {4, 0x19, 1, 0},   // aload n
    {4, 0x15, 1, 0},   // iload n
    {7, 0x1B, 0, 0},   // iload_1
    {10, 0x4C, 0, 0},  // astore_1
    {5, 0x3A, 1, 0},   // astore n
    {6, 0xB4, 0, 1},   // getfield
    {2, 0xB2, 0, 1},   // getstatic
    {10, 0xB6, 0, 1},  // invokevirtual
    {8, 0xB8, 0, 1},   // invokestatic
    {3, 0xB7, 0, 1},   // invokespecial
    {3, 0xBB, 0, 1},   // new (+ dup)
    {3, 0x03, 0, 0},   // iconst_0
    {3, 0x04, 0, 0},   // iconst_1
    {3, 0x10, 1, 0},   // bipush
    {6, 0x12, 0, 1},   // ldc
    {1, 0x0E, 0, 0},   // dconst_0
    {2, 0x57, 0, 0},   // pop
}};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t Below(std::uint64_t bound) { return UniformBelow(rng_, bound); }

  // target * [1 - spread, 1 + spread], at least 1.
  std::size_t Jitter(std::size_t target, double spread) {
    const auto span = static_cast<std::uint64_t>(static_cast<double>(target) * spread);
    const std::size_t low = target - std::min<std::size_t>(target - 1, span);
    return low + Below(2 * span + 1);
  }

  std::string Identifier() {
    std::string out(kWords[Below(kWords.size())]);
    const auto extra = Below(3);
    for (std::uint64_t i = 0; i < extra; ++i) {
      std::string word(kWords[Below(kWords.size())]);
      word[0] = static_cast<char>(word[0] - 'a' + 'A');
      out += word;
    }
    return out;
  }

  std::string Statement() {
    char number[24];
    std::snprintf(number, sizeof number, "%d", static_cast<int>(Below(2000)) - 1000);
    switch (Below(4)) {
      case 0:
        return "        " + std::string(kTypes[Below(kTypes.size())]) + " " + Identifier() +
               " = new BigFraction(" + number + ", " + std::to_string(Below(99) + 1) + ");";
      case 1:
        return "        " + std::string(kCalls[Below(4)]) + "(\"" + Identifier() + "\", " +
               Identifier() + "." + std::string(kCalls[4 + Below(4)]) + "());";
      case 2:
        return "        " + Identifier() + " = " + Identifier() + "." +
               std::string(kCalls[4 + Below(4)]) + "(" + Identifier() + ", " + number + ");";
      default:
        return "        // " + Identifier() + " " + Identifier() + " " + number;
    }
  }

  std::string Text(std::size_t index, std::size_t length) {
    std::string text = "    @Test\n    public void test" + std::to_string(index) + Identifier() +
                       "() {\n";
    while (text.size() + 6 < length) text += Statement() + "\n";
    text.resize(length - std::min<std::size_t>(length, 6));
    text += "\n    }";
    return text;
  }

  Instruction Make(std::uint8_t opcode, int immediates, int pool_operands, std::uint32_t& offset) {
    Instruction ins;
    ins.offset = offset;
    ins.opcode = opcode;
    for (int i = 0; i < immediates; ++i) {
      ins.immediates.push_back(static_cast<std::uint8_t>(opcode == 0x10 ? Below(128) : 1 + Below(8)));
    }
    for (int i = 0; i < pool_operands; ++i) {
      ins.cp_operands.push_back(static_cast<std::uint16_t>(1 + Below(opcode == 0x12 ? 255 : 400)));
    }
    offset += static_cast<std::uint32_t>(ins.EncodedLength());
    return ins;
  }

  classfile::InstructionSequence Bytecode(std::size_t length) {
    int total_weight = 0;
    for (const auto& s : kShapes) total_weight += s.weight;
    classfile::InstructionSequence seq;
    std::uint32_t offset = 0;
    std::size_t encoded = 0;  // opcode-imm bytes so far
    while (encoded + 1 < length) {
      auto pick = static_cast<int>(Below(static_cast<std::uint64_t>(total_weight)));
      const Shape* shape = &kShapes[0];
      for (const auto& s : kShapes) {
        if (pick < s.weight) {
          shape = &s;
          break;
        }
        pick -= s.weight;
      }
      seq.items.push_back(Make(shape->opcode, shape->immediates, shape->pool_operands, offset));
      encoded += 1 + static_cast<std::size_t>(shape->immediates);
      if (shape->opcode == classfile::op::kNew) {
        seq.items.push_back(Make(classfile::op::kDup, 0, 0, offset));
        ++encoded;
      }
    }
    seq.items.push_back(Make(classfile::op::kReturn, 0, 0, offset));
    return seq;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<corpus::TestCaseRecord> GenerateSynthetic(const SyntheticParams& params) {
  Generator gen(params.seed);
  std::vector<corpus::TestCaseRecord> records;
  records.reserve(params.count);
  const int width = params.count < 10000 ? 4 : 8;
  for (std::size_t i = 0; i < params.count; ++i) {
    char id[64];
    std::snprintf(id, sizeof id, "bench.Synthetic#test%0*zu", width, i);
    corpus::TestCaseRecord r;
    r.id = id;
    r.text = gen.Text(i, gen.Jitter(params.text_length, 0.15));
    r.instructions = gen.Bytecode(gen.Jitter(params.bytecode_length, 0.2));
    r.instructions->owner = r.id;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace divtcp::pipeline
