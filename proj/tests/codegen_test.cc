// Copyright 2026 The ldmf Authors.
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
#include "ldmf/codegen.h"

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gtest/gtest.h"
#include "ldmf/optimizer.h"
#include "ldmf/pipeline.h"
#include "ldmf/tagger.h"
#include "test_util.h"

namespace ldmf {
namespace {

using ::ldmf::testing::Box;
using ::ldmf::testing::Frame;
using ::ldmf::testing::OneScreen;
using ::ldmf::testing::TextNode;

DesignDocument Fixture(const std::string& name) {
  return ParseDocument(ReadFile(std::string(LDMF_TESTDATA_DIR) + "/" + name));
}

std::vector<std::string> OpNames(const std::vector<Instruction>& ops) {
  std::vector<std::string> out;
  for (const Instruction& i : ops) out.emplace_back(OpName(i));
  return out;
}

// Depth never negative and zero at the end, counted over bodies too.
bool Balanced(const std::vector<Instruction>& ops) {
  int depth = 0;
  for (const Instruction& i : ops) {
    if (const auto* def = std::get_if<DefineComponent>(&i.op)) {
      if (!Balanced(def->body)) return false;
    } else if (std::holds_alternative<BeginElement>(i.op)) {
      ++depth;
    } else if (std::holds_alternative<EndElement>(i.op)) {
      if (--depth < 0) return false;
    }
  }
  return depth == 0;
}

template <typename T>
int Count(const std::vector<Instruction>& ops) {
  int n = 0;
  for (const Instruction& i : ops) n += std::holds_alternative<T>(i.op);
  return n;
}

TEST(LowerToInstructionsTest, SingleTextScreen) {
  DesignDocument doc = OptimizeDocument(OneScreen(
      Frame("root", 0, 0, 400, 300, {TextNode("t", 20, 20, 100, 20, "Hi")})));
  TagMap tags = TagDocument(doc, RuleTableBackend());
  InstructionProgram p = LowerToInstructions(doc, tags, {});
  EXPECT_TRUE(p.components.empty());
  ASSERT_EQ(p.screens.size(), 1u);
  EXPECT_EQ(OpNames(p.screens[0].instructions),
            (std::vector<std::string>{"BeginElement", "SetLayout", "SetStyle",
                                      "BeginElement", "SetStyle", "EmitText",
                                      "EndElement", "EndElement"}));
  const auto& begin = std::get<BeginElement>(p.screens[0].instructions[3].op);
  EXPECT_EQ(begin.node_id, "t");
  EXPECT_EQ(begin.tag, "text");
  EXPECT_EQ(std::get<EmitText>(p.screens[0].instructions[5].op).content, "Hi");
}

TEST(LowerToInstructionsTest, FiveCardsInstantiatesOneComponent) {
  ConvertResult r = ConvertDocument(Fixture("five_cards.json"));
  ASSERT_EQ(r.program.components.size(), 1u);
  const auto& def = std::get<DefineComponent>(r.program.components[0].op);
  EXPECT_EQ(def.component_id, "Card");
  EXPECT_TRUE(Balanced(def.body));
  EXPECT_EQ(Count<Instantiate>(r.program.screens[0].instructions), 5);
  bool text_prop = false;
  for (const PropDef& p : def.props) text_prop |= p.kind == PropKind::kText;
  EXPECT_TRUE(text_prop);
  EXPECT_TRUE(Balanced(r.program.screens[0].instructions));
}

TEST(LowerToInstructionsTest, InstanceNodesCarryIdsInTemplateOrder) {
  ConvertResult r = ConvertDocument(Fixture("five_cards.json"));
  std::vector<std::string> ids;
  for (const Instruction& i : r.program.screens[0].instructions) {
    if (const auto* inst = std::get_if<Instantiate>(&i.op)) {
      ids.push_back(inst->nodes.front().node_id);
      ASSERT_EQ(inst->nodes.size(), 4u);
      EXPECT_EQ(inst->nodes[1].node_id, "img" + ids.back().substr(4));
      EXPECT_EQ(inst->bindings.size(), 3u);
    }
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"card0", "card1", "card2", "card3",
                                           "card4"}));
}

TEST(LowerToInstructionsTest, UnknownComponentIsUnresolved) {
  ConvertResult r = ConvertDocument(Fixture("five_cards.json"));
  ComponentizeResult c = Componentize(r.optimized, r.tags);
  ASSERT_FALSE(c.defs.empty());
  try {
    LowerToInstructions(c.doc, r.tags, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnresolvedComponent);
  }
}

TEST(ExpandInstantiateTest, ReproducesUncomponentizedLowering) {
  DesignDocument doc = Fixture("five_cards.json");
  ConvertResult with = ConvertDocument(doc);
  ConvertResult without = ConvertDocument(doc, {.components = false});
  std::vector<ElementNode> a = BuildElementTrees(
      with.program.screens[0].instructions, with.program.components);
  std::vector<ElementNode> b =
      BuildElementTrees(without.program.screens[0].instructions, {});
  ASSERT_EQ(a.size(), 1u);
  ASSERT_EQ(b.size(), 1u);
  // Compare through the flat instruction form of each tree.
  std::function<void(const ElementNode&, std::vector<std::string>&)> flatten =
      [&](const ElementNode& n, std::vector<std::string>& out) {
        out.push_back(n.begin.node_id + "|" + n.begin.css_class + "|" +
                      std::to_string(n.style.width) + "x" +
                      std::to_string(n.style.height) + "|" +
                      (n.text ? n.text->content : "") + "|" +
                      (n.image ? n.image->ref : ""));
        for (const ElementNode& c : n.children) flatten(c, out);
      };
  std::vector<std::string> fa, fb;
  flatten(a[0], fa);
  flatten(b[0], fb);
  EXPECT_EQ(fa, fb);
}

TEST(BuildElementTreesTest, UnbalancedThrows) {
  std::vector<Instruction> ops = {Instruction{BeginElement{"a", "container",
                                                           "div", "a-1", false}},
                                  Instruction{SetStyle{}}};
  try {
    BuildElementTrees(ops, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  ops.push_back(Instruction{EndElement{}});
  ops.push_back(Instruction{EndElement{}});
  EXPECT_THROW(BuildElementTrees(ops, {}), Error);
}

TEST(ProgramJsonTest, RoundTrip) {
  ConvertResult r = ConvertDocument(Fixture("five_cards.json"));
  Json json = ProgramToJson(r.program);
  InstructionProgram back = ProgramFromJson(json);
  EXPECT_EQ(back, r.program);
  EXPECT_EQ(Dump(ProgramToJson(back)), Dump(json));
}

TEST(ProgramJsonTest, MissingFieldIsSchemaError) {
  Json json = ProgramToJson(ConvertDocument(Fixture("minimal.json")).program);
  json["screens"][0].erase("id");
  try {
    ProgramFromJson(json);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
  }
}

TEST(CssClassForTest, SanitizedNameAndStableSuffix) {
  std::string a = CssClassFor("Card Row", NodeKind::kFrame, "n1");
  EXPECT_EQ(a.rfind("card-row-", 0), 0u);
  EXPECT_EQ(a.size(), std::string("card-row-").size() + 6);
  EXPECT_EQ(a, CssClassFor("Card Row", NodeKind::kFrame, "n1"));
  EXPECT_NE(a, CssClassFor("Card Row", NodeKind::kFrame, "n2"));
}

TEST(ElementForTest, TagsMapToElements) {
  DesignNode n = Box("b", 0, 0, 100, 40);
  EXPECT_EQ(ElementFor(TagLabel::kButton, n), "button");
  EXPECT_EQ(ElementFor(TagLabel::kTextarea, n), "textarea");
  EXPECT_EQ(ElementFor(TagLabel::kContainer, n), "div");
  DesignNode img = n;
  img.kind = NodeKind::kImage;
  EXPECT_EQ(ElementFor(TagLabel::kImage, img), "img");
}

TEST(EmitHtmlCssTest, RowContainerGetsFlexRule) {
  ConvertResult r = ConvertDocument(Fixture("five_cards.json"));
  const std::string& css = r.sources.files.at("style.css");
  std::string row_class = CssClassFor("Card row", NodeKind::kFrame, "row");
  std::size_t at = css.find("." + row_class + " {");
  ASSERT_NE(at, std::string::npos) << row_class;
  std::string rule = css.substr(at, css.find('}', at) - at);
  EXPECT_NE(rule.find("display: flex;"), std::string::npos);
  EXPECT_NE(rule.find("flex-direction: row;"), std::string::npos);
  EXPECT_NE(rule.find("gap: 20px;"), std::string::npos);
}

TEST(EmitHtmlCssTest, ButtonBecomesButtonElement) {
  DesignNode b = Frame("go", 20, 20, 120, 40,
                       {TextNode("go_label", 50, 32, 60, 16, "Go")});
  b.fill = Fill{"#2563EB", 1};
  b.corner_radius = 8;
  ConvertResult r =
      ConvertDocument(OneScreen(Frame("root", 0, 0, 400, 300, {b})));
  const std::string& html = r.sources.files.at("index.html");
  EXPECT_NE(html.find("<button class=\"go-"), std::string::npos) << html;
}

TEST(EmitHtmlCssTest, ThreeFilesAndByteDeterminism) {
  DesignDocument doc = Fixture("five_cards.json");
  EmittedSources a = ConvertDocument(doc).sources;
  EmittedSources b = ConvertDocument(doc).sources;
  EXPECT_EQ(a.files.size(), 3u);
  EXPECT_EQ(a.files, b.files);
  EXPECT_EQ(a.files.at("instructions.json").back(), '\n');
}

TEST(EmitHtmlCssTest, TextIsEscaped) {
  ConvertResult r = ConvertDocument(OneScreen(Frame(
      "root", 0, 0, 400, 300, {TextNode("t", 0, 0, 100, 20, "a<b & \"c\"")})));
  const std::string& html = r.sources.files.at("index.html");
  EXPECT_NE(html.find("a&lt;b &amp; &quot;c&quot;"), std::string::npos) << html;
}

}  // namespace
}  // namespace ldmf
