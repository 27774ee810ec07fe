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

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "classfile/class_file.h"
#include "classfile/opcodes.h"
#include "classfile/test_methods.h"
#include "common/error.h"
#include "common/io.h"
#include "corpus/corpus.h"
#include "corpus/encode.h"
#include "corpus/filter.h"
#include "distance/levenshtein.h"

namespace divtcp::corpus {
namespace {

namespace fs = std::filesystem;
using classfile::OpcodeCategory;

const fs::path kFixtures = DIVTCP_FIXTURES;
const std::string kPkg = "org.apache.commons.math3.fraction.";

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

std::map<std::string, TestCaseRecord> ClassRecords(const char* dir) {
  const auto loaded = LoadCorpus(std::nullopt, kFixtures / "classes" / dir);
  std::map<std::string, TestCaseRecord> out;
  for (const auto& r : loaded.records) out.emplace(r.id, r);
  return out;
}

std::string Hex(const TestCaseRecord& r, EncodingConfig config) {
  return EncodeBytecode(r, config).hex;
}

EncodingConfig Filtered(FilterSet set) {
  EncodingConfig c;
  c.filter = true;
  c.filter_set = std::move(set);
  return c;
}

TEST(FilterTest, Figure3KeepsConstantsFieldsCallsDupAndReturn) {
  auto records = ClassRecords("fig2");
  const auto config = Filtered(FilterSet::Figure3());
  EXPECT_EQ(Hex(records.at(kPkg + "BigFractionFormatTest#testFormatNegative"), config),
            "59 02 05 B7 B4 B6 B8 B4 B6 B8 B1");
  EXPECT_EQ(Hex(records.at(kPkg + "BigFractionFormatTest#testFormatZero"), config),
            "59 03 04 B7 B4 B6 B8 B4 B6 B8 B1");
  EXPECT_EQ(Hex(records.at(kPkg + "BigFractionFormatTest#testParseBig"), config),
            "B4 B6 B6 0E B8 B4 B6 B6 0E B8 B8 59 B7 10 63 10 06 B6 B8 B1");
}

TEST(FilterTest, NamedSetsByCategory) {
  const auto semantic = FilterSet::Semantic();
  EXPECT_TRUE(semantic.Keeps(0x12));   // ldc
  EXPECT_TRUE(semantic.Keeps(0x03));   // iconst_0
  EXPECT_TRUE(semantic.Keeps(0xB4));   // getfield
  EXPECT_TRUE(semantic.Keeps(0xB8));   // invokestatic
  EXPECT_FALSE(semantic.Keeps(0x59));  // dup
  EXPECT_FALSE(semantic.Keeps(0xB1));  // return
  EXPECT_FALSE(semantic.Keeps(0x2A));  // aload_0

  const auto fig3 = FilterSet::Figure3();
  EXPECT_FALSE(fig3.Keeps(0x12));
  EXPECT_FALSE(fig3.Keeps(0x13));
  EXPECT_FALSE(fig3.Keeps(0x14));
  EXPECT_TRUE(fig3.Keeps(0x59));
  EXPECT_TRUE(fig3.Keeps(0xB1));
  EXPECT_FALSE(fig3.Keeps(0xAC));  // ireturn
  EXPECT_FALSE(fig3.Keeps(0xBB));  // new
}

TEST(FilterTest, ParseNamesAndCategoryLists) {
  EXPECT_EQ(FilterSet::Parse("semantic"), FilterSet::Semantic());
  EXPECT_EQ(FilterSet::Parse("figure3"), FilterSet::Figure3());
  EXPECT_EQ(FilterSet::Parse("all"), FilterSet::All());
  const auto custom = FilterSet::Parse("custom:field,invoke");
  EXPECT_EQ(custom, FilterSet::FromCategories({OpcodeCategory::kField, OpcodeCategory::kInvoke}));
  EXPECT_EQ(FilterSet::Parse("field,invoke"), custom);
  EXPECT_EQ(CodeOf([] { FilterSet::Parse("bogus"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { FilterSet::Parse(""); }), ErrorCode::kInvalidArgument);
}

TEST(FilterTest, FilteringIsIdempotentForRandomSets) {
  auto records = ClassRecords("shapes");
  const auto fig2 = ClassRecords("fig2");
  records.insert(fig2.begin(), fig2.end());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FilterSet set = FilterSet::FromCategories({});
    for (int op = 0; op < 256; ++op) {
      if (rng() % 3 == 0) set.Add(static_cast<std::uint8_t>(op));
    }
    for (const auto& [id, r] : records) {
      const auto once = FilterInstructions(*r.instructions, set);
      EXPECT_EQ(FilterInstructions(once, set), once) << id;
    }
  }
}

TEST(FilterTest, FilteredNeverLongerAndStrictlyShorterOnFixtures) {
  const auto records = ClassRecords("fig2");
  for (const auto& set : {FilterSet::Semantic(), FilterSet::Figure3()}) {
    for (const auto& [id, r] : records) {
      const auto full = EncodeBytecode(r, {});
      const auto filtered = EncodeBytecode(r, Filtered(set));
      EXPECT_LT(filtered.tokens.size(), full.tokens.size()) << id << " " << set.name();
    }
  }
  const auto all = Filtered(FilterSet::All());
  for (const auto& [id, r] : ClassRecords("shapes")) {
    EXPECT_EQ(EncodeBytecode(r, all).tokens, EncodeBytecode(r, {}).tokens) << id;
    EXPECT_LE(EncodeBytecode(r, Filtered(FilterSet::Semantic())).tokens.size(),
              EncodeBytecode(r, {}).tokens.size());
  }
}

TEST(EncodeTest, RenamedLocalsAndCommentsLeaveOpcodesUnchanged) {
  const auto a = ClassRecords("fig2").at(kPkg + "BigFractionFormatTest#testFormatZero");
  const auto b = ClassRecords("fig2-variant").at(kPkg + "BigFractionFormatVariantTest#testFormatZero");
  EncodingConfig opcode_only;
  opcode_only.mode = EncodingMode::kOpcodeOnly;
  EXPECT_EQ(EncodeBytecode(a, opcode_only).tokens, EncodeBytecode(b, opcode_only).tokens);

  const auto texts = ParseTextCorpus(ReadFile(kFixtures / "texts/fig2.tsv"));
  const auto variant = ParseTextCorpus(ReadFile(kFixtures / "texts/fig2-variant.tsv"));
  std::string zero;
  for (const auto& [id, text] : texts) {
    if (id == a.id) zero = text;
  }
  ASSERT_FALSE(zero.empty());
  const TestCaseRecord ta{a.id, zero, std::nullopt};
  const TestCaseRecord tb{b.id, variant.at(0).second, std::nullopt};
  EXPECT_GT(distance::Levenshtein(EncodeText(ta).tokens, EncodeText(tb).tokens), 0u);
}

TEST(EncodeTest, FixtureTextLengths) {
  const auto loaded = LoadCorpus(kFixtures / "texts/fig2.tsv", std::nullopt);
  std::map<std::string, std::size_t> length;
  std::map<std::string, std::vector<std::uint8_t>> tokens;
  for (const auto& r : loaded.records) {
    const auto e = EncodeText(r);
    length[r.id] = e.tokens.size();
    tokens[r.id] = e.tokens;
  }
  EXPECT_EQ(length.at(kPkg + "BigFractionFormatTest#testFormatNegative"), 258u);
  EXPECT_EQ(length.at(kPkg + "BigFractionFormatTest#testFormatZero"), 252u);
  EXPECT_LE(length.at(kPkg + "BigFractionFormatTest#testParseBig"), 705u);
  EXPECT_EQ(distance::Levenshtein(tokens.at(kPkg + "BigFractionFormatTest#testFormatNegative"),
                                  tokens.at(kPkg + "BigFractionFormatTest#testFormatZero")),
            13u);

  const auto variant = LoadCorpus(kFixtures / "texts/fig2-variant.tsv", std::nullopt);
  EXPECT_EQ(EncodeText(variant.records.at(0)).tokens.size(), 320u);
}

TEST(EncodeTest, TextLineBreaksBecomeSingleSpaces) {
  const TestCaseRecord r{"t", std::string("a\r\nb\nc\rd\n\ne"), std::nullopt};
  const auto e = EncodeText(r);
  EXPECT_EQ(std::string(e.tokens.begin(), e.tokens.end()), "a b c d  e");
  EXPECT_EQ(e.kind, ArtifactKind::kText);
  EXPECT_EQ(e.Payload(), "a b c d  e");
}

TEST(EncodeTest, MissingSidesAreErrors) {
  const TestCaseRecord none{"t", std::nullopt, std::nullopt};
  EXPECT_EQ(CodeOf([&] { EncodeText(none); }), ErrorCode::kMissingText);
  EXPECT_EQ(CodeOf([&] { EncodeBytecode(none, {}); }), ErrorCode::kMissingBytecode);
}

TEST(EncodeTest, ModesOnWideAndPoolOperands) {
  // wide iload 256; sipush 1000; ldc_w #2; invokeinterface #3, 1
  const std::vector<std::uint8_t> code = {0xC4, 0x15, 0x01, 0x00, 0x11, 0x03, 0xE8, 0x13,
                                          0x00, 0x02, 0xB9, 0x00, 0x03, 0x01, 0x00};
  TestCaseRecord r{"t", std::nullopt, classfile::DecodeCode(code)};
  EXPECT_EQ(Hex(r, {}), "C4 15 01 00 11 03 E8 13 B9 01 00");
  EncodingConfig opcode_only;
  opcode_only.mode = EncodingMode::kOpcodeOnly;
  EXPECT_EQ(Hex(r, opcode_only), "C4 15 11 13 B9");
  EXPECT_EQ(ParseEncodingMode("opcode-only"), EncodingMode::kOpcodeOnly);
  EXPECT_EQ(ParseEncodingMode("opcode-imm"), EncodingMode::kOpcodePlusImmediates);
  EXPECT_EQ(ParseEncodingMode("opcode-plus-immediates"), EncodingMode::kOpcodePlusImmediates);
  EXPECT_FALSE(ParseEncodingMode("raw").has_value());
}

TEST(EncodeTest, SwitchPaddingIsNotATokenButSwitchTablesAre) {
  // iload_0 (offset 0), tableswitch at 1, two pad bytes to offset 4.
  std::vector<std::uint8_t> code = {0x1A, 0xAA, 0x00, 0x00};
  for (int v : {0, 0, 0, 20, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 19}) code.push_back(v);
  code.push_back(0x04);  // iconst_1
  code.push_back(0xAC);  // ireturn
  TestCaseRecord r{"t", std::nullopt, classfile::DecodeCode(code)};
  EXPECT_EQ(Hex(r, {}), "1A AA 00 00 00 14 00 00 00 01 00 00 00 01 00 00 00 13 04 AC");
}

TEST(EncodeTest, HexRoundTrips) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint8_t> bytes(rng() % 64);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
    const auto hex = ToHex(bytes);
    EXPECT_EQ(ParseHex(hex), bytes);
    EXPECT_EQ(ToHex(ParseHex(hex)), hex);
  }
  EXPECT_EQ(ToHex(std::vector<std::uint8_t>{0xBB, 0x59, 0xB1}), "BB 59 B1");
  EXPECT_EQ(ParseHex("bb 59 b1"), (std::vector<std::uint8_t>{0xBB, 0x59, 0xB1}));
  EXPECT_TRUE(ParseHex("").empty());
  for (const char* bad : {"B", "BB59", "ZZ", "BB  59", "BB 5", " BB"}) {
    EXPECT_EQ(CodeOf([&] { ParseHex(bad); }), ErrorCode::kMalformed) << bad;
  }
}

TEST(EncodeTest, EscapesRoundTrip) {
  const std::string raw = "a\tb\\c\nd\re";
  EXPECT_EQ(EscapeField(raw), "a\\tb\\\\c\\nd\\re");
  EXPECT_EQ(UnescapeField(EscapeField(raw)), raw);
  EXPECT_EQ(CodeOf([] { UnescapeField("abc\\"); }), ErrorCode::kMalformed);
  EXPECT_EQ(CodeOf([] { UnescapeField("a\\qb"); }), ErrorCode::kMalformed);
}

TEST(CorpusTest, MergesTextAndClassSources) {
  const auto loaded = LoadCorpus(kFixtures / "texts/fig2.tsv", kFixtures / "classes/fig2");
  ASSERT_EQ(loaded.records.size(), 3u);
  EXPECT_EQ(loaded.class_files, 1u);
  EXPECT_EQ(loaded.text_only, 0u);
  EXPECT_EQ(loaded.bytecode_only, 0u);
  EXPECT_TRUE(loaded.warnings.empty());
  for (const auto& r : loaded.records) {
    EXPECT_TRUE(r.text.has_value()) << r.id;
    EXPECT_TRUE(r.instructions.has_value()) << r.id;
  }
}

TEST(CorpusTest, UnmatchedIdsAreCountedAndWarned) {
  const auto loaded = LoadCorpus(kFixtures / "texts/fig2.tsv", kFixtures / "classes/fig2-variant");
  EXPECT_EQ(loaded.records.size(), 4u);
  EXPECT_EQ(loaded.text_only, 3u);
  EXPECT_EQ(loaded.bytecode_only, 1u);
  EXPECT_FALSE(loaded.warnings.empty());

  const auto text_only = LoadCorpus(kFixtures / "texts/fig2.tsv", std::nullopt);
  EXPECT_EQ(text_only.records.size(), 3u);
  EXPECT_TRUE(text_only.warnings.empty());
}

TEST(CorpusTest, LoadErrors) {
  EXPECT_EQ(CodeOf([] { LoadCorpus(std::nullopt, std::nullopt); }), ErrorCode::kMissingInput);
  EXPECT_EQ(CodeOf([] { LoadCorpus(kFixtures / "texts/absent.tsv", std::nullopt); }),
            ErrorCode::kIoFailure);

  const fs::path dir = fs::temp_directory_path() / "divtcp_corpus_dup";
  fs::remove_all(dir);
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  fs::copy_file(kFixtures / "classes/fig2/BigFractionFormatTest.class", dir / "a/X.class");
  fs::copy_file(kFixtures / "classes/fig2/BigFractionFormatTest.class", dir / "b/X.class");
  EXPECT_EQ(CodeOf([&] { LoadCorpus(std::nullopt, dir); }), ErrorCode::kDuplicateId);
  fs::remove_all(dir);
}

TEST(CorpusTest, TextCorpusParsing) {
  const auto parsed = ParseTextCorpus("a\tx\\ty\n\nb\tz\n");
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0].second, "x\ty");
  EXPECT_EQ(CodeOf([] { ParseTextCorpus("no tab here\n"); }), ErrorCode::kMalformed);
  EXPECT_EQ(CodeOf([] { ParseTextCorpus("a\tx\na\ty\n"); }), ErrorCode::kDuplicateId);
}

TEST(CorpusTest, EncodedCorpusRoundTrips) {
  const auto loaded = LoadCorpus(kFixtures / "texts/fig2.tsv", kFixtures / "classes/fig2");
  std::vector<EncodedArtifact> text, bytecode;
  for (const auto& r : loaded.records) {
    text.push_back(EncodeText(r));
    bytecode.push_back(EncodeBytecode(r, {}));
  }
  const auto text_back = ParseEncodedCorpus(SerializeEncodedCorpus(text), ArtifactKind::kText);
  const auto byte_back =
      ParseEncodedCorpus(SerializeEncodedCorpus(bytecode), ArtifactKind::kBytecode);
  ASSERT_EQ(text_back.size(), text.size());
  ASSERT_EQ(byte_back.size(), bytecode.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    EXPECT_EQ(text_back[i].id, text[i].id);
    EXPECT_EQ(text_back[i].tokens, text[i].tokens);
    EXPECT_EQ(byte_back[i].tokens, bytecode[i].tokens);
    EXPECT_EQ(byte_back[i].hex, bytecode[i].hex);
  }
  EXPECT_EQ(CodeOf([] { ParseEncodedCorpus("a\tZZ\n", ArtifactKind::kBytecode); }),
            ErrorCode::kMalformed);
  EXPECT_EQ(CodeOf([] { ParseEncodedCorpus("a\t01\na\t02\n", ArtifactKind::kBytecode); }),
            ErrorCode::kDuplicateId);
}

TEST(CorpusTest, ExtractionIsDeterministic) {
  const auto a = LoadCorpus(std::nullopt, kFixtures / "classes");
  const auto b = LoadCorpus(std::nullopt, kFixtures / "classes");
  ASSERT_EQ(a.records.size(), b.records.size());
  std::vector<EncodedArtifact> ea, eb;
  for (const auto& r : a.records) ea.push_back(EncodeBytecode(r, {}));
  for (const auto& r : b.records) eb.push_back(EncodeBytecode(r, {}));
  EXPECT_EQ(SerializeEncodedCorpus(ea), SerializeEncodedCorpus(eb));
}

}  // namespace
}  // namespace divtcp::corpus
