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

#include "ldmf/corpus.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "ldmf/error.h"

namespace ldmf {

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void ValidateSpec(const CorpusSpec& spec) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what, "invalid corpus spec");
  };
  if (spec.depth_min < 1 || spec.depth_max > 10 ||
      spec.depth_min > spec.depth_max) {
    fail("depthRange");
  }
  if (spec.children_min < 1 || spec.children_min > spec.children_max) {
    fail("childrenRange");
  }
  if (spec.repeat_min < 2 || spec.repeat_min > spec.repeat_max) {
    fail("componentRepeatRange");
  }
  if (!(spec.viewport.w >= 320) || !(spec.viewport.h > 0)) fail("viewport");
}

namespace {

// Draws are taken from the raw engine output so that sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(Next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool Chance(double p) {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
  }
  template <typename C>
  const auto& Pick(const C& items) {
    return items[Next() % items.size()];
  }
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = Next() % i;
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

using Names = std::vector<std::string_view>;

const Names kWords = {"Fast",   "Secure",  "Simple", "Daily",  "Fresh",
                      "Smart",  "Modern",  "Clear",  "Bright", "Quiet",
                      "Home",   "Account", "Orders", "Plans",  "Team",
                      "Profile", "Billing", "Support", "Pricing", "Welcome",
                      "Today",  "Latest",  "Popular", "Saved",  "Recent"};
const Names kProducts = {"Canvas Tote", "Desk Lamp",  "Travel Mug",
                         "Wool Scarf",  "Notebook",   "Headphones",
                         "Water Bottle", "Backpack",  "Sneakers",
                         "Sunglasses",  "Plant Pot",  "Candle Set"};
const Names kContainerNames = {"Section", "Stack",   "Content", "Header",
                               "Footer",  "Body",    "Wrapper", "Panel",
                               "Form",    "Toolbar", "Block",   "Area",
                               "Column",  "Row",     "Hero",    "Details"};
const Names kTextColors = {"#111827", "#374151", "#4B5563", "#1F2937"};
const Names kSurfaceColors = {"#F9FAFB", "#F3F4F6", "#EEF2FF", "#FFF7ED",
                              "#ECFDF5", "#FFFFFF"};
const Names kAccentColors = {"#4F46E5", "#2563EB", "#DC2626", "#059669",
                             "#D97706", "#7C3AED"};
const std::array<int, 7> kFontSizes = {12, 14, 16, 18, 20, 24, 32};
const std::array<int, 4> kFontWeights = {400, 500, 600, 700};
const std::array<int, 5> kGaps = {4, 8, 12, 16, 24};
const std::array<int, 5> kPaddings = {0, 8, 12, 16, 24};

// Minimum cross-axis room a child slot needs for the generator to place a
// row; narrower budgets fall back to columns.
constexpr int kMinRowSlot = 200;

int TextWidth(std::size_t chars, int font_size) {
  return static_cast<int>((chars * static_cast<std::size_t>(font_size) * 11 + 19) / 20);
}
int TextHeight(int font_size) { return (font_size * 14 + 5) / 10; }

class Generator {
 public:
  Generator(const CorpusSpec& spec, std::uint64_t seed)
      : spec_(spec), rng_(seed) {}

  DesignDocument Run(int depth, std::size_t* card_count) {
    depth_ = depth;
    card_height_ = depth >= 3 && rng_.Chance(0.5) ? 2 : 1;
    // The planted list sits on the spine; when the tree is too shallow for
    // a list container the cards go straight into the root.
    direct_cards_ = depth < card_height_ + 2;
    plant_at_ = direct_cards_ ? depth : card_height_ + 2;
    card_count_ = rng_.Uniform(spec_.repeat_min, spec_.repeat_max);
    if (depth < 2) {
      plant_at_ = -1;
      card_count_ = 0;
    }

    const int width = static_cast<int>(spec_.viewport.w);
    DesignNode root = Container(depth, width, /*on_spine=*/true, /*root=*/true);
    root.name = "Screen";
    root.fill = Fill{"#FFFFFF", 1.0};
    root.bounds.h = std::max(root.bounds.h, spec_.viewport.h);
    Absolutize(root, 0, 0);

    Screen screen;
    screen.id = "s0";
    screen.name = "Screen";
    screen.width = root.bounds.w;
    screen.height = root.bounds.h;
    screen.root = std::move(root);
    DesignDocument doc;
    doc.screens.push_back(std::move(screen));
    *card_count = static_cast<std::size_t>(card_count_);
    return doc;
  }

  const std::unordered_map<std::string, TagLabel>& gold() const {
    return gold_;
  }

 private:
  DesignNode Make(NodeKind kind, std::string name, double w, double h,
                  TagLabel gold) {
    DesignNode n;
    n.id = "n" + std::to_string(++next_id_);
    n.name = std::move(name);
    n.kind = kind;
    n.bounds = Rect{0, 0, w, h};
    gold_[n.id] = gold;
    return n;
  }

  std::string GenericName(std::string_view base) {
    return std::string(base) + " " + std::to_string(rng_.Uniform(1, 99));
  }

  std::string Words(int lo, int hi) {
    int n = rng_.Uniform(lo, hi);
    std::string out;
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += ' ';
      out += rng_.Pick(kWords);
    }
    return out;
  }

  DesignNode Text(std::string content, int font_size, int weight, int budget,
                  std::string color) {
    std::size_t max_chars = static_cast<std::size_t>(
        std::max(1, budget * 20 / (font_size * 11)));
    if (content.size() > max_chars) content.resize(max_chars);
    while (content.size() > 1 && content.back() == ' ') content.pop_back();
    DesignNode n = Make(NodeKind::kText, content, TextWidth(content.size(), font_size),
                        TextHeight(font_size), TagLabel::kText);
    n.text = TextPayload{content, static_cast<double>(font_size), weight,
                         TextAlign::kLeft};
    n.fill = Fill{std::move(color), 1.0};
    return n;
  }

  DesignNode RandomText(int budget) {
    int fs = rng_.Pick(kFontSizes);
    return Text(Words(1, 5), fs, rng_.Pick(kFontWeights), budget,
                std::string(rng_.Pick(kTextColors)));
  }

  // Height-0 items.
  DesignNode Primitive(int budget) {
    int roll = rng_.Uniform(0, 99);
    if (roll < 45 || budget < 40) return RandomText(budget);
    if (roll < 60) {
      int w = std::min(budget, rng_.Uniform(80, 320));
      int h = std::max(24, w * rng_.Uniform(40, 80) / 100);
      DesignNode n = Make(NodeKind::kImage,
                          rng_.Chance(0.5) ? "Image" : GenericName("Photo"), w,
                          h, TagLabel::kImage);
      n.image_ref = "img/" + std::to_string(rng_.Uniform(1, 9999)) + ".png";
      return n;
    }
    if (roll < 70) {
      int s = rng_.Pick(std::array<int, 3>{16, 20, 24});
      DesignNode n = Make(NodeKind::kVector, "Icon", s, s, TagLabel::kImage);
      n.fill = Fill{std::string(rng_.Pick(kTextColors)), 1.0};
      return n;
    }
    if (roll < 85) return Checkbox();
    return Radio();
  }

  DesignNode Checkbox() {
    DesignNode n = Make(NodeKind::kRect,
                        rng_.Chance(0.5) ? std::string("Checkbox")
                                         : GenericName("Rectangle"),
                        20, 20, TagLabel::kCheckbox);
    n.corner_radius = 4;
    n.stroke = Stroke{"#9CA3AF", 1};
    return n;
  }

  DesignNode Radio() {
    DesignNode n = Make(NodeKind::kRect,
                        rng_.Chance(0.5) ? std::string("Radio")
                                         : GenericName("Ellipse"),
                        20, 20, TagLabel::kRadio);
    n.corner_radius = 10;
    n.stroke = Stroke{"#9CA3AF", 1};
    return n;
  }

  // Frame holding `label` at (pad_x, vertically centered) unless `top`.
  DesignNode Field(std::string name, TagLabel gold, int w, int h,
                   std::string placeholder, bool top) {
    DesignNode f = Make(NodeKind::kFrame, std::move(name), w, h, gold);
    f.fill = Fill{"#FFFFFF", 1.0};
    f.stroke = Stroke{"#D1D5DB", 1};
    f.corner_radius = 6;
    DesignNode t = Text(std::move(placeholder), 14, 400, w - 24, "#9CA3AF");
    t.bounds.x = 12;
    t.bounds.y = top ? 12 : std::floor((h - t.bounds.h) / 2);
    f.children.push_back(std::move(t));
    return f;
  }

  struct ButtonStyle {
    int height = 40;
    std::string name = "Button";
    std::string color = "#4F46E5";
    int radius = 8;
  };

  ButtonStyle RandomButtonStyle() {
    static const Names kButtonNames = {"Submit button", "Primary CTA",
                                       "Button", "Save btn"};
    ButtonStyle style;
    style.height = rng_.Uniform(36, 48);
    style.name = rng_.Chance(0.7) ? std::string(rng_.Pick(kButtonNames))
                                  : GenericName("Frame");
    style.color = std::string(rng_.Pick(kAccentColors));
    style.radius = rng_.Pick(std::array<int, 3>{4, 8, 12});
    return style;
  }

  DesignNode Button(int budget, std::string label, int min_w, int max_w,
                    const ButtonStyle& style) {
    int h = style.height;
    int w = std::min(budget, rng_.Uniform(min_w, max_w));
    w = std::clamp(w, (h * 3 + 1) / 2, 8 * h);
    DesignNode b = Make(NodeKind::kFrame, style.name, w, h, TagLabel::kButton);
    b.fill = Fill{style.color, 1.0};
    b.corner_radius = style.radius;
    DesignNode t = Text(std::move(label), 14, 600, w - 16, "#FFFFFF");
    t.bounds.x = std::floor((w - t.bounds.w) / 2);
    t.bounds.y = std::floor((h - t.bounds.h) / 2);
    b.children.push_back(std::move(t));
    return b;
  }

  DesignNode Chooser(int budget, TagLabel tag) {
    static const Names kSelectNames = {"Country select", "Select",
                                       "Choose plan"};
    static const Names kDropdownNames = {"Sort dropdown", "Dropdown",
                                         "Menu dropdown"};
    static const Names kDateNames = {"Date picker", "Birthday", "Calendar",
                                     "Start date"};
    const Names& names = tag == TagLabel::kSelect     ? kSelectNames
                         : tag == TagLabel::kDropdown ? kDropdownNames
                                                      : kDateNames;
    int h = 40;
    int w = std::min(budget, rng_.Uniform(200, 320));
    DesignNode f = Field(std::string(rng_.Pick(names)), tag, w, h,
                         tag == TagLabel::kDateTimePicker ? "MM/DD/YYYY"
                                                          : Words(1, 2),
                         false);
    f.children.front().bounds.w =
        std::min(f.children.front().bounds.w, static_cast<double>(w - 52));
    DesignNode chevron =
        Make(NodeKind::kVector, "Chevron", 16, 16, TagLabel::kImage);
    chevron.fill = Fill{"#6B7280", 1.0};
    chevron.bounds.x = w - 28;
    chevron.bounds.y = (h - 16) / 2;
    f.children.push_back(std::move(chevron));
    return f;
  }

  DesignNode LabeledControl(int budget) {
    DesignNode box = rng_.Chance(0.5) ? Checkbox() : Radio();
    DesignNode label = Text(Words(1, 4), 14, 400, budget - 28, "#374151");
    std::vector<DesignNode> items;
    items.push_back(std::move(box));
    items.push_back(std::move(label));
    DesignNode g = Make(NodeKind::kGroup, "Label", 0, 0, TagLabel::kContainer);
    g.children = std::move(items);
    Arrange(g, Direction::kRow, {8}, 0, /*center=*/true, 0);
    return g;
  }

  DesignNode Stepper() {
    DesignNode g = Make(NodeKind::kGroup, "Quantity", 0, 0,
                        TagLabel::kQuantitySelector);
    g.children.push_back(Text("-", 16, 600, 40, "#111827"));
    g.children.push_back(
        Text(std::to_string(rng_.Uniform(1, 9)), 16, 400, 40, "#111827"));
    g.children.push_back(Text("+", 16, 600, 40, "#111827"));
    Arrange(g, Direction::kRow, {12}, 0, true, 0);
    return g;
  }

  DesignNode Slider(int budget) {
    int w = std::min(budget, rng_.Uniform(160, 320));
    DesignNode g = Make(NodeKind::kGroup, "Volume", w, 16, TagLabel::kSlider);
    DesignNode track = Make(NodeKind::kRect, "Track", w, 4, TagLabel::kContainer);
    track.bounds.y = 6;
    track.corner_radius = 2;
    track.fill = Fill{"#E5E7EB", 1.0};
    DesignNode thumb = Make(NodeKind::kRect, "Thumb", 16, 16, TagLabel::kContainer);
    thumb.bounds.x = rng_.Uniform(0, w - 16);
    thumb.corner_radius = 8;
    thumb.fill = Fill{std::string(rng_.Pick(kAccentColors)), 1.0};
    g.children.push_back(std::move(track));
    g.children.push_back(std::move(thumb));
    return g;
  }

  DesignNode Switch() {
    static const Names kNames = {"Toggle", "Switch"};
    DesignNode s = Make(NodeKind::kFrame,
                        rng_.Chance(0.6) ? std::string(rng_.Pick(kNames))
                                         : GenericName("Frame"),
                        44, 24, TagLabel::kSwitch);
    s.corner_radius = 12;
    s.fill = Fill{std::string(rng_.Pick(kAccentColors)), 1.0};
    DesignNode knob = Make(NodeKind::kRect, "Knob", 20, 20, TagLabel::kContainer);
    knob.corner_radius = 10;
    knob.fill = Fill{"#FFFFFF", 1.0};
    knob.bounds.x = rng_.Chance(0.5) ? 2 : 22;
    knob.bounds.y = 2;
    s.children.push_back(std::move(knob));
    return s;
  }

  // Height-1 items.
  DesignNode Widget(int budget) {
    if (budget < 120) return LabeledControl(std::max(budget, 60));
    int roll = rng_.Uniform(0, 99);
    if (roll < 16) return Button(budget, Words(1, 2), 96, 200, RandomButtonStyle());
    if (roll < 30) {
      static const Names kNames = {"Email input", "Search field", "Text field",
                                   "Password"};
      int w = std::min(budget, rng_.Uniform(240, 360));
      return Field(rng_.Chance(0.7) ? std::string(rng_.Pick(kNames))
                                    : GenericName("Frame"),
                   TagLabel::kInput, w, rng_.Uniform(36, 48), Words(1, 3),
                   false);
    }
    if (roll < 38) {
      static const Names kNames = {"Message", "Comments", "Notes"};
      int w = std::min(budget, rng_.Uniform(240, 420));
      return Field(rng_.Chance(0.7) ? std::string(rng_.Pick(kNames))
                                    : GenericName("Frame"),
                   TagLabel::kTextarea, w, rng_.Uniform(96, 160), Words(2, 5),
                   true);
    }
    if (roll < 46) return Chooser(budget, TagLabel::kSelect);
    if (roll < 54) return Chooser(budget, TagLabel::kDropdown);
    if (roll < 61) return Chooser(budget, TagLabel::kDateTimePicker);
    if (roll < 69) return Switch();
    if (roll < 83) return LabeledControl(budget);
    if (roll < 87) return Stepper();
    if (roll < 91) return Slider(budget);
    return Container(1, budget, false, false);
  }

  DesignNode Item(int height, int budget) {
    if (height == 0) return Primitive(budget);
    if (height == 1 && rng_.Chance(0.7)) return Widget(budget);
    return Container(height, budget, false, false);
  }

  DesignNode Card(int width, int ordinal) {
    DesignNode card = Make(NodeKind::kFrame, "Product card", 0, 0,
                           TagLabel::kContainer);
    card.fill = Fill{"#FFFFFF", 1.0};
    card.corner_radius = 12;
    int inner = width - 24;
    DesignNode img = Make(NodeKind::kImage, "Product image", inner,
                          inner * 3 / 5, TagLabel::kImage);
    img.image_ref = "img/product-" + std::to_string(ordinal) + "-" +
                    std::to_string(rng_.Uniform(1, 999)) + ".png";
    card.children.push_back(std::move(img));
    card.children.push_back(
        Text(std::string(rng_.Pick(kProducts)), 16, 600, inner, "#111827"));
    card.children.push_back(Text("$" + std::to_string(rng_.Uniform(5, 250)),
                                 14, 400, inner, "#4B5563"));
    if (card_height_ == 2) {
      card.children.push_back(
          Button(inner, "Add to cart", inner, inner, card_button_));
    }
    Arrange(card, Direction::kColumn, {8}, 12, false, width);
    return card;
  }

  std::vector<DesignNode> Cards(int width) {
    std::vector<DesignNode> cards;
    card_button_ = RandomButtonStyle();
    for (int i = 0; i < card_count_; ++i) cards.push_back(Card(width, i));
    return cards;
  }

  DesignNode CardList(int budget) {
    DesignNode list = Make(NodeKind::kFrame,
                           rng_.Chance(0.5) ? "Products" : "Product list", 0,
                           0, TagLabel::kContainer);
    int gap = rng_.Pick(kGaps);
    int width = rng_.Uniform(160, 280);
    bool row = card_count_ * width + (card_count_ - 1) * gap <= budget &&
               rng_.Chance(0.6);
    width = std::min(width, budget);
    list.children = Cards(width);
    Arrange(list, row ? Direction::kRow : Direction::kColumn, {gap}, 0, false,
            0);
    return list;
  }

  DesignNode Container(int height, int budget, bool on_spine, bool root) {
    DesignNode c = Make(root || rng_.Chance(0.6) ? NodeKind::kFrame
                                                 : NodeKind::kGroup,
                        rng_.Chance(0.8) ? std::string(rng_.Pick(kContainerNames))
                                         : GenericName("Frame"),
                        0, 0, TagLabel::kContainer);
    bool styled = !root && c.kind == NodeKind::kFrame && rng_.Chance(0.3);
    if (styled) {
      c.fill = Fill{std::string(rng_.Pick(kSurfaceColors)), 1.0};
      c.corner_radius = rng_.Pick(std::array<int, 3>{0, 8, 12});
    }
    int pad = rng_.Pick(kPaddings);
    if (root) pad = std::max(pad, 16);
    pad = std::min(pad, budget / 10);
    int k = rng_.Uniform(spec_.children_min, spec_.children_max);
    bool planting = on_spine && height == plant_at_;
    if (planting && direct_cards_) k = std::max(1, k - 2);
    int gap = rng_.Pick(kGaps);

    Direction dir = !root && rng_.Chance(0.4) ? Direction::kRow
                                              : Direction::kColumn;
    int slot = budget - 2 * pad;
    if (dir == Direction::kRow) {
      int row_slot = (slot - gap * (k - 1)) / k;
      if (row_slot < kMinRowSlot) {
        dir = Direction::kColumn;
      } else {
        slot = row_slot;
      }
    }

    int spine = rng_.Uniform(0, k - 1);
    std::vector<DesignNode> kids;
    for (int i = 0; i < k; ++i) {
      if (i == spine) {
        if (planting) {
          if (direct_cards_) {
            int width = std::min(slot, rng_.Uniform(160, 280));
            for (DesignNode& card : Cards(width)) kids.push_back(std::move(card));
          } else {
            kids.push_back(CardList(slot));
          }
        } else {
          kids.push_back(on_spine && height - 1 >= plant_at_
                             ? Container(height - 1, slot, true, false)
                             : Item(height - 1, slot));
        }
        continue;
      }
      int h = rng_.Chance(0.8) ? rng_.Uniform(0, std::min(1, height - 1))
                               : rng_.Uniform(0, height - 1);
      kids.push_back(Item(h, slot));
    }
    c.children = std::move(kids);

    std::vector<int> gaps = {gap};
    if (rng_.Chance(0.1) && c.children.size() > 2) {
      gaps.clear();
      for (std::size_t i = 1; i < c.children.size(); ++i) {
        gaps.push_back(rng_.Pick(kGaps));
      }
    }
    bool center = rng_.Chance(0.3);
    int fill_width = root || rng_.Chance(0.3) ? budget : 0;
    Arrange(c, dir, gaps, pad, center, fill_width);
    return c;
  }

  // Places c.children (sizes already set) relative to c and sizes c.
  // `gaps` holds one uniform gap or one gap per adjacent pair.
  void Arrange(DesignNode& c, Direction dir, const std::vector<int>& gaps,
               int pad, bool center, int fill_width) {
    auto gap_at = [&](std::size_t i) {
      return gaps.size() == 1 ? gaps[0] : gaps[i - 1];
    };
    double main = 0;
    double cross = 0;
    for (std::size_t i = 0; i < c.children.size(); ++i) {
      const Rect& b = c.children[i].bounds;
      if (i > 0) main += gap_at(i);
      main += dir == Direction::kRow ? b.w : b.h;
      cross = std::max(cross, dir == Direction::kRow ? b.h : b.w);
    }
    double w = dir == Direction::kRow ? main + 2 * pad : cross + 2 * pad;
    double h = dir == Direction::kRow ? cross + 2 * pad : main + 2 * pad;
    if (fill_width > 0) w = std::max(w, static_cast<double>(fill_width));
    double inner_cross = dir == Direction::kRow ? h - 2 * pad : w - 2 * pad;
    double cursor = pad;
    for (std::size_t i = 0; i < c.children.size(); ++i) {
      Rect& b = c.children[i].bounds;
      if (i > 0) cursor += gap_at(i);
      double size_cross = dir == Direction::kRow ? b.h : b.w;
      double off = center ? std::floor((inner_cross - size_cross) / 2) : 0;
      if (dir == Direction::kRow) {
        b.x = cursor;
        b.y = pad + off;
        cursor += b.w;
      } else {
        b.x = pad + off;
        b.y = cursor;
        cursor += b.h;
      }
    }
    c.bounds.w = w;
    c.bounds.h = h;
  }

  static void Absolutize(DesignNode& n, double ox, double oy) {
    n.bounds.x += ox;
    n.bounds.y += oy;
    for (DesignNode& c : n.children) Absolutize(c, n.bounds.x, n.bounds.y);
  }

  const CorpusSpec& spec_;
  Rng rng_;
  int next_id_ = 0;
  int depth_ = 0;
  int card_height_ = 1;
  int card_count_ = 2;
  bool direct_cards_ = false;
  int plant_at_ = 0;
  ButtonStyle card_button_;
  std::unordered_map<std::string, TagLabel> gold_;
};

}  // namespace

TagList GoldTagsFor(const DesignDocument& doc, const TagList& gold) {
  std::unordered_map<std::string, TagLabel> by_id(gold.begin(), gold.end());
  TagList out;
  for (const Screen& s : doc.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) {
      auto it = by_id.find(n.id);
      if (it != by_id.end()) out.emplace_back(n.id, it->second);
    });
  }
  return out;
}

GroundTruthPair GenerateDesign(const CorpusSpec& spec, std::size_t index) {
  Rng pick(MixSeed(spec.seed, 2 * index));
  int depth = pick.Uniform(spec.depth_min, spec.depth_max);
  Generator gen(spec, pick.Next());
  GroundTruthPair pair;
  char name[32];
  std::snprintf(name, sizeof(name), "design-%04zu", index);
  pair.name = name;
  std::size_t cards = 0;
  pair.optimized = gen.Run(depth, &cards);
  TagList all(gen.gold().begin(), gen.gold().end());
  pair.gold_tags = GoldTagsFor(pair.optimized, all);
  pair.deoptimized =
      Deoptimize(pair.optimized, MixSeed(spec.seed, 2 * index + 1));
  if (cards > 0) {
    pair.gold_components.def_count = 1;
    pair.gold_components.instance_counts = {cards};
  }
  return pair;
}

std::vector<GroundTruthPair> GenCorpusSerial(const CorpusSpec& spec) {
  ValidateSpec(spec);
  std::vector<GroundTruthPair> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    out.push_back(GenerateDesign(spec, i));
  }
  return out;
}

std::vector<GroundTruthPair> GenCorpus(const CorpusSpec& spec) {
  ValidateSpec(spec);
  std::vector<GroundTruthPair> out(spec.count);
  const auto n = static_cast<std::int64_t>(spec.count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        GenerateDesign(spec, static_cast<std::size_t>(i));
  }
  return out;
}

namespace {

bool HasPaint(const DesignNode& n) {
  return n.fill.has_value() || n.stroke.has_value();
}

void Hoist(DesignNode&& n, std::vector<DesignNode>& out) {
  if (IsContainerKind(n.kind) && !HasPaint(n) && !n.instance) {
    for (DesignNode& c : n.children) Hoist(std::move(c), out);
    return;
  }
  out.push_back(std::move(n));
}

bool PairwiseDisjoint(const std::vector<DesignNode>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Rect& a = nodes[i].bounds;
      const Rect& b = nodes[j].bounds;
      if (a.x < b.right() && b.x < a.right() && a.y < b.bottom() &&
          b.y < a.bottom()) {
        return false;
      }
    }
  }
  return true;
}

void Flatten(DesignNode& node, Rng& rng) {
  node.layout.reset();
  node.positioning = Positioning::kFlow;
  std::vector<DesignNode> kids;
  for (DesignNode& c : node.children) Hoist(std::move(c), kids);
  if (PairwiseDisjoint(kids)) rng.Shuffle(kids);
  node.children = std::move(kids);
  for (DesignNode& c : node.children) Flatten(c, rng);
}

}  // namespace

DesignDocument Deoptimize(const DesignDocument& doc, std::uint64_t seed) {
  DesignDocument out = doc;
  Rng rng(seed);
  for (Screen& s : out.screens) Flatten(s.root, rng);
  return out;
}

Json GoldComponentsToJson(const GoldComponents& gold) {
  Json j = Json::object();
  j["defCount"] = gold.def_count;
  j["instanceCounts"] = gold.instance_counts;
  return j;
}

}  // namespace ldmf
