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
#include "ldmf/componentizer.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ldmf/pipeline.h"
#include "ldmf/tagger.h"
#include "test_util.h"

namespace ldmf {
namespace {

using ::ldmf::testing::Box;
using ::ldmf::testing::Frame;
using ::ldmf::testing::Node;
using ::ldmf::testing::OneScreen;
using ::ldmf::testing::TextNode;

DesignDocument FiveCards() {
  return ParseDocument(
      ReadFile(std::string(LDMF_TESTDATA_DIR) + "/five_cards.json"));
}

TagMap Tags(const DesignDocument& doc) {
  return TagDocument(doc, RuleTableBackend());
}

DesignNode Card(std::string id, double x, double title_x, std::string title,
                std::string image = "img/a.png") {
  DesignNode c = Frame(id, x, 0, 100, 80);
  c.name = "Plan";
  c.fill = Fill{"#FFFFFF", 1};
  DesignNode icon = Node(NodeKind::kImage, id + "_icon", x + 10, 10, 24, 24);
  icon.name = "Icon";
  icon.image_ref = std::move(image);
  DesignNode t = TextNode(id + "_title", title_x, 44, 60, 20, std::move(title));
  t.name = "Plan name";
  c.children = {icon, t};
  return c;
}

// Subtree sizes of every eligible node, keyed by canonical form, built by
// comparing canonical strings directly rather than through the hash.
std::map<std::string, std::vector<std::string>> GroupsByCanonical(
    const DesignDocument& doc, const TagMap& tags) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const Screen& s : doc.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) {
      if (&n == &s.root || !IsContainerKind(n.kind)) return;
      groups[CanonicalForm(n, tags)].push_back(n.id);
    });
  }
  return groups;
}

TEST(FingerprintTest, TextContentIsExcluded) {
  DesignNode a = Card("a", 0, 10, "A");
  DesignNode b = Card("b", 0, 10, "B");
  EXPECT_EQ(FingerprintSubtree(a, {}), FingerprintSubtree(b, {}));
}

TEST(FingerprintTest, ExtraChildChangesFingerprint) {
  DesignNode a = Card("a", 0, 10, "A");
  DesignNode b = Card("b", 0, 10, "A");
  b.children.push_back(Box("extra", 70, 10, 16, 16));
  EXPECT_NE(FingerprintSubtree(a, {}), FingerprintSubtree(b, {}));
}

TEST(FingerprintTest, PositionIsExcluded) {
  DesignNode a = Card("a", 0, 10, "A");
  DesignNode b = Card("b", 500, 510, "A");
  EXPECT_EQ(FingerprintSubtree(a, {}), FingerprintSubtree(b, {}));
}

TEST(FingerprintTest, StyleIsIncluded) {
  DesignNode a = Card("a", 0, 10, "A");
  DesignNode b = Card("b", 0, 10, "A");
  b.corner_radius = 8;
  EXPECT_NE(FingerprintSubtree(a, {}), FingerprintSubtree(b, {}));
}

TEST(DetectRepeatsTest, FiveCardsMatchesCanonicalOracle) {
  DesignDocument doc = FiveCards();
  TagMap tags = Tags(doc);
  std::vector<RepeatCandidate> found = DetectRepeats(doc, tags);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].instance_ids,
            (std::vector<std::string>{"card0", "card1", "card2", "card3",
                                      "card4"}));
  EXPECT_EQ(found[0].subtree_size, 4u);

  auto groups = GroupsByCanonical(doc, tags);
  std::size_t repeated = 0;
  for (const auto& [form, ids] : groups) {
    if (ids.size() >= 2) {
      ++repeated;
      EXPECT_EQ(ids, found[0].instance_ids);
    }
  }
  EXPECT_EQ(repeated, 1u);
}

TEST(DetectRepeatsTest, MinInstancesAboveCountFindsNothing) {
  DesignDocument doc = FiveCards();
  EXPECT_TRUE(DetectRepeats(doc, Tags(doc), {.min_instances = 6}).empty());
}

TEST(DetectRepeatsTest, SpansScreens) {
  DesignDocument doc = OneScreen(
      Frame("r1", 0, 0, 400, 100, {Card("a", 0, 10, "A")}));
  DesignDocument other =
      OneScreen(Frame("r2", 0, 0, 400, 100, {Card("b", 200, 210, "B")}));
  other.screens[0].id = "s1";
  doc.screens.push_back(other.screens[0]);
  auto found = DetectRepeats(doc, Tags(doc));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].instance_ids, (std::vector<std::string>{"a", "b"}));
}

TEST(DetectRepeatsTest, AllUniqueFindsNothing) {
  DesignNode a = Card("a", 0, 10, "A");
  DesignNode b = Card("b", 120, 130, "B");
  b.children.pop_back();
  b.children.push_back(Box("b_box", 130, 40, 10, 10));
  DesignDocument doc = OneScreen(Frame("root", 0, 0, 400, 100, {a, b}));
  EXPECT_TRUE(DetectRepeats(doc, Tags(doc)).empty());
}

TEST(DetectRepeatsTest, NestedRepeatsKeepOuterOnly) {
  auto pair = [](std::string id, double x) {
    return Frame(id, x, 0, 30, 20,
                 {Box(id + "_a", x, 0, 10, 10), Box(id + "_b", x + 12, 0, 10, 10),
                  Box(id + "_c", x + 24, 0, 4, 4)});
  };
  std::vector<DesignNode> cards;
  for (int i = 0; i < 3; ++i) {
    double x = 200.0 * i;
    std::string id = "card" + std::to_string(i);
    cards.push_back(Frame(id, x, 0, 180, 60,
                          {pair(id + "_p0", x), pair(id + "_p1", x + 40)}));
  }
  DesignDocument doc = OneScreen(Frame("root", 0, 0, 600, 60, cards));
  auto found = DetectRepeats(doc, Tags(doc));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].instance_ids,
            (std::vector<std::string>{"card0", "card1", "card2"}));
}

TEST(InferPropsTest, DifferingTextBecomesTextProp) {
  DesignNode a = Card("a", 0, 10, "Basic");
  DesignNode b = Card("b", 120, 130, "Pro");
  ComponentDef def = InferProps({&a, &b}, {}, "Plan");
  ASSERT_EQ(def.props.size(), 1u);
  EXPECT_EQ(def.props[0].name, "planName");
  EXPECT_EQ(def.props[0].kind, PropKind::kText);
  EXPECT_EQ(def.props[0].path, (NodePath{1}));
}

TEST(InferPropsTest, IdenticalInstancesHaveNoProps) {
  DesignNode a = Card("a", 0, 10, "Basic");
  DesignNode b = Card("b", 120, 130, "Basic");
  EXPECT_TRUE(InferProps({&a, &b}, {}, "Plan").props.empty());
}

TEST(InferPropsTest, TitleAndImageBecomeTwoProps) {
  DesignNode a = Card("a", 0, 10, "Basic", "img/a.png");
  DesignNode b = Card("b", 120, 130, "Pro", "img/b.png");
  ComponentDef def = InferProps({&a, &b}, {}, "Plan");
  ASSERT_EQ(def.props.size(), 2u);
  EXPECT_EQ(def.props[0].kind, PropKind::kImageRef);
  EXPECT_EQ(def.props[1].kind, PropKind::kText);
}

TEST(InferPropsTest, TemplateIsTranslatedToOrigin) {
  DesignNode a = Card("a", 300, 310, "Basic");
  DesignNode b = Card("b", 120, 130, "Pro");
  ComponentDef def = InferProps({&a, &b}, {}, "Plan");
  EXPECT_EQ(def.template_root.bounds, (Rect{0, 0, 100, 80}));
  EXPECT_EQ(def.template_root.id, TemplateNodeId("Plan", {}));
  EXPECT_EQ(def.template_root.children[0].bounds, (Rect{10, 10, 24, 24}));
}

TEST(InferPropsTest, DuplicateLayerNamesGetSuffixes) {
  DesignNode a = Frame("a", 0, 0, 100, 40,
                       {TextNode("a1", 0, 0, 40, 20, "x"),
                        TextNode("a2", 50, 0, 40, 20, "y")});
  DesignNode b = Frame("b", 0, 50, 100, 40,
                       {TextNode("b1", 0, 50, 40, 20, "p"),
                        TextNode("b2", 50, 50, 40, 20, "q")});
  for (DesignNode* n : {&a.children[0], &a.children[1], &b.children[0],
                        &b.children[1]}) {
    n->name = "Label";
  }
  ComponentDef def = InferProps({&a, &b}, {}, "Pair");
  ASSERT_EQ(def.props.size(), 2u);
  EXPECT_EQ(def.props[0].name, "label");
  EXPECT_EQ(def.props[1].name, "label2");
}

TEST(InferPropsTest, MisalignedInstancesThrow) {
  DesignNode a = Card("a", 0, 10, "Basic");
  DesignNode b = Card("b", 120, 130, "Pro");
  b.children.pop_back();
  try {
    InferProps({&a, &b}, {}, "Plan");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlignment);
  }
}

TEST(ComponentizeTest, FiveCardsGivesOneDefAndFiveInstances) {
  DesignDocument doc = FiveCards();
  ComponentizeResult r = Componentize(doc, Tags(doc));
  ASSERT_EQ(r.defs.size(), 1u);
  EXPECT_EQ(r.defs[0].component_id, "Card");
  std::set<std::string> prop_names;
  bool has_text = false;
  for (const PropDef& p : r.defs[0].props) {
    prop_names.insert(p.name);
    has_text = has_text || p.kind == PropKind::kText;
  }
  EXPECT_TRUE(has_text);
  EXPECT_EQ(prop_names, (std::set<std::string>{"photo", "title", "price"}));
  int instances = 0;
  ForEachPreorder(r.doc.screens[0].root, [&](const DesignNode& n) {
    if (n.instance) {
      ++instances;
      EXPECT_EQ(n.instance->component_id, "Card");
      EXPECT_EQ(n.instance->bindings.size(), 3u);
    }
  });
  EXPECT_EQ(instances, 5);
}

TEST(ComponentizeTest, NoRepeatsLeavesDocumentUnchanged) {
  DesignDocument doc =
      OneScreen(Frame("root", 0, 0, 200, 200, {Box("a", 0, 0, 10, 10)}));
  ComponentizeResult r = Componentize(doc, Tags(doc));
  EXPECT_TRUE(r.defs.empty());
  EXPECT_EQ(SerializeDocument(r.doc), SerializeDocument(doc));
}

TEST(ComponentizeTest, Deterministic) {
  DesignDocument doc = FiveCards();
  TagMap tags = Tags(doc);
  EXPECT_EQ(SerializeDocument(Componentize(doc, tags).doc),
            SerializeDocument(Componentize(doc, tags).doc));
}

TEST(ExpandComponentsTest, RoundTripsFiveCards) {
  DesignDocument doc = FiveCards();
  ComponentizeResult r = Componentize(doc, Tags(doc));
  EXPECT_EQ(SerializeDocument(ExpandComponents(r.doc, r.defs)),
            SerializeDocument(doc));
}

TEST(ExpandComponentsTest, NoDefsNoInstancesIsIdentity) {
  DesignDocument doc = FiveCards();
  EXPECT_EQ(SerializeDocument(ExpandComponents(doc, {})),
            SerializeDocument(doc));
}

TEST(ExpandComponentsTest, MissingBindingNamesTheProp) {
  DesignDocument doc = FiveCards();
  ComponentizeResult r = Componentize(doc, Tags(doc));
  ForEachPreorderMutable(r.doc.screens[0].root, [](DesignNode& n) {
    if (n.instance) n.instance->bindings.erase("price");
  });
  try {
    ExpandComponents(r.doc, r.defs);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingBinding);
    EXPECT_EQ(e.path(), "price");
  }
}

TEST(ExpandComponentsTest, UnknownComponentThrows) {
  DesignDocument doc = FiveCards();
  ComponentizeResult r = Componentize(doc, Tags(doc));
  try {
    ExpandComponents(r.doc, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownComponent);
    EXPECT_EQ(e.path(), "Card");
  }
}

}  // namespace
}  // namespace ldmf
