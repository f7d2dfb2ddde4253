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

#include "ldmf/pipeline.h"

#include <exception>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "ldmf/tagger.h"

namespace ldmf {

namespace {

std::string ViolationSummary(const std::vector<Violation>& v) {
  std::string s = std::to_string(v.size()) + " violation(s)";
  if (!v.empty()) s += ", first: " + v.front().rule + " " + v.front().detail;
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::kSchema,
            violations.empty() ? std::string() : violations.front().path,
            ViolationSummary(violations)),
      violations_(std::move(violations)) {}

ConvertResult ConvertDocument(const DesignDocument& doc,
                              const ConvertOptions& options) {
  std::vector<Violation> violations = ValidateDocument(doc);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  ConvertResult r;
  r.findings = DetectSuboptimal(doc);
  r.optimized = OptimizeDocument(doc);
  TaggingOptions tagging;
  tagging.features.use_names = options.tag_names;
  r.tags = TagDocument(r.optimized, RuleTableBackend(), tagging);
  if (options.components) {
    ComponentizeResult c = Componentize(r.optimized, r.tags, options.repeat);
    r.defs = std::move(c.defs);
    r.program = LowerToInstructions(c.doc, r.tags, r.defs);
  } else {
    r.program = LowerToInstructions(r.optimized, r.tags, r.defs);
  }
  r.sources = EmitHtmlCss(r.program);
  return r;
}

Json FindingsToJson(const std::vector<Finding>& findings) {
  Json arr = Json::array();
  for (const Finding& f : findings) {
    Json e = Json::object();
    e["nodeId"] = f.node_id;
    e["kind"] = FindingKindName(f.kind);
    e["detail"] = f.detail;
    arr.push_back(std::move(e));
  }
  Json j = Json::object();
  j["findings"] = std::move(arr);
  return j;
}

TagList InputTags(const DesignDocument& input, const TagMap& tags) {
  TagList out;
  for (const Screen& s : input.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) {
      auto it = tags.find(n.id);
      if (it != tags.end()) out.emplace_back(n.id, it->second.label);
    });
  }
  return out;
}

namespace {

void CheckScreens(const DesignDocument& design,
                  const InstructionProgram& program) {
  if (design.screens.empty()) {
    throw Error(ErrorCode::kEmptyScreen, "$.screens", "design has no screens");
  }
  if (design.screens.size() != program.screens.size()) {
    throw Error(ErrorCode::kIdMismatch, "$.screens",
                "design and instructions have different screen counts");
  }
  for (std::size_t i = 0; i < design.screens.size(); ++i) {
    if (design.screens[i].id != program.screens[i].screen_id) {
      throw Error(ErrorCode::kIdMismatch, design.screens[i].id,
                  "screen id differs from instructions screen '" +
                      program.screens[i].screen_id + "'");
    }
  }
}

ScreenScore ScoreScreen(const Screen& screen, const ScreenProgram& sp,
                        const std::vector<Instruction>& components,
                        double threshold, Viewport viewport) {
  LayoutResult layout = ComputeLayout(sp.instructions, components, viewport);
  std::vector<std::pair<std::string, Rect>> originals;
  std::unordered_set<std::string> ids;
  ForEachPreorder(screen.root, [&](const DesignNode& n) {
    ids.insert(n.id);
    if (n.origin == NodeOrigin::kOriginal) originals.emplace_back(n.id, n.bounds);
  });
  for (const RenderedRect& r : layout.rects) {
    if (!r.synthesized && !ids.contains(r.node_id)) {
      throw Error(ErrorCode::kIdMismatch, r.node_id,
                  "rendered node is not in design screen '" + screen.id + "'");
    }
  }
  return PreviewMatchScore(screen.id, originals, layout.ById(), threshold);
}

}  // namespace

PmsReport ScoreProgramSerial(const DesignDocument& design,
                             const InstructionProgram& program,
                             double threshold, Viewport viewport) {
  CheckScreens(design, program);
  std::vector<ScreenScore> scores;
  for (std::size_t i = 0; i < design.screens.size(); ++i) {
    scores.push_back(ScoreScreen(design.screens[i], program.screens[i],
                                 program.components, threshold, viewport));
  }
  return MakePmsReport(std::move(scores));
}

PmsReport ScoreProgram(const DesignDocument& design,
                       const InstructionProgram& program, double threshold,
                       Viewport viewport) {
  CheckScreens(design, program);
  const auto n = static_cast<std::int64_t>(design.screens.size());
  std::vector<ScreenScore> scores(design.screens.size());
  std::vector<std::exception_ptr> errors(design.screens.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      scores[k] = ScoreScreen(design.screens[k], program.screens[k],
                              program.components, threshold, viewport);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return MakePmsReport(std::move(scores));
}

namespace {

std::size_t CountAbsoluteParents(const DesignDocument& doc) {
  std::size_t count = 0;
  for (const Screen& s : doc.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) {
      for (const DesignNode& c : n.children) {
        if (c.positioning == Positioning::kAbsolute) {
          ++count;
          break;
        }
      }
    });
  }
  return count;
}

DesignRun RunOne(const DesignDocument& doc, const ConvertOptions& options,
                 double threshold, Viewport viewport) {
  ConvertResult r = ConvertDocument(doc, options);
  InstructionProgram program =
      ProgramFromJson(ParseJsonText(r.sources.files.at("instructions.json")));
  DesignRun run;
  run.screens =
      ScoreProgramSerial(doc, program, threshold, viewport).per_screen;
  run.predicted = InputTags(doc, r.tags);
  run.component_defs = r.defs.size();
  for (const ScreenProgram& sp : program.screens) {
    for (const Instruction& i : sp.instructions) {
      if (std::holds_alternative<Instantiate>(i.op)) ++run.instantiates;
    }
  }
  run.absolute_fallbacks = CountAbsoluteParents(r.optimized);
  return run;
}

}  // namespace

std::vector<DesignRun> RunCorpusSerial(const std::vector<DesignDocument>& designs,
                                       const ConvertOptions& options,
                                       double threshold, Viewport viewport) {
  std::vector<DesignRun> out;
  out.reserve(designs.size());
  for (const DesignDocument& d : designs) {
    out.push_back(RunOne(d, options, threshold, viewport));
  }
  return out;
}

std::vector<DesignRun> RunCorpus(const std::vector<DesignDocument>& designs,
                                 const ConvertOptions& options,
                                 double threshold, Viewport viewport) {
  std::vector<DesignRun> out(designs.size());
  std::vector<std::exception_ptr> errors(designs.size());
  const auto n = static_cast<std::int64_t>(designs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      out[k] = RunOne(designs[k], options, threshold, viewport);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, path.string(), "cannot read file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, path.string(), "cannot write file");
  }
  out << bytes;
}

void RunConvert(const std::filesystem::path& in,
                const std::filesystem::path& out_dir,
                const ConvertOptions& options,
                const std::filesystem::path& tags_out) {
  DesignDocument doc = ParseDocument(ReadFile(in));
  ConvertResult r = ConvertDocument(doc, options);
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, bytes] : r.sources.files) WriteFile(out_dir / name, bytes);
  WriteFile(out_dir / "findings.json", Dump(FindingsToJson(r.findings)));
  if (!tags_out.empty()) {
    WriteFile(tags_out, Dump(TagListToJson(InputTags(doc, r.tags))));
  }
}

PmsReport RunScore(const std::filesystem::path& design,
                   const std::filesystem::path& instructions,
                   double threshold, Viewport viewport,
                   const std::filesystem::path& out_dir) {
  DesignDocument doc = ParseDocument(ReadFile(design));
  InstructionProgram program =
      ProgramFromJson(ParseJsonText(ReadFile(instructions)));
  PmsReport report = ScoreProgram(doc, program, threshold, viewport);
  std::filesystem::create_directories(out_dir);
  WriteFile(out_dir / "pms.json", Dump(PmsReportToJson(report, threshold)));
  WriteFile(out_dir / "pms.md", PmsReportToMarkdown(report, threshold));
  WriteFile(out_dir / "histogram.csv", HistogramCsv(report.summary));
  return report;
}

void RunGenCorpus(const CorpusSpec& spec, const std::filesystem::path& out_dir) {
  std::vector<GroundTruthPair> pairs = GenCorpus(spec);
  std::filesystem::create_directories(out_dir);
  Json designs = Json::array();
  for (const GroundTruthPair& p : pairs) {
    std::filesystem::path dir = out_dir / p.name;
    WriteFile(dir / "design.json", SerializeDocument(p.optimized));
    WriteFile(dir / "deopt.json", SerializeDocument(p.deoptimized));
    WriteFile(dir / "gold_tags.json", Dump(TagListToJson(p.gold_tags)));
    WriteFile(dir / "gold_tags_deopt.json",
              Dump(TagListToJson(GoldTagsFor(p.deoptimized, p.gold_tags))));
    Json e = Json::object();
    e["name"] = p.name;
    e["nestingDepth"] = NestingDepth(p.optimized.screens.front().root);
    e["nodeCount"] = CountNodes(p.optimized.screens.front().root);
    e["goldComponents"] = GoldComponentsToJson(p.gold_components);
    designs.push_back(std::move(e));
  }
  Json manifest = Json::object();
  manifest["count"] = spec.count;
  manifest["seed"] = spec.seed;
  manifest["depthRange"] = {spec.depth_min, spec.depth_max};
  manifest["childrenRange"] = {spec.children_min, spec.children_max};
  manifest["componentRepeatRange"] = {spec.repeat_min, spec.repeat_max};
  manifest["viewport"] = {{"w", JsonNumber(spec.viewport.w)},
                          {"h", JsonNumber(spec.viewport.h)}};
  manifest["designs"] = std::move(designs);
  WriteFile(out_dir / "manifest.json", Dump(manifest));
}

void RunDeopt(const std::filesystem::path& in, std::uint64_t seed,
              const std::filesystem::path& out) {
  DesignDocument doc = ParseDocument(ReadFile(in));
  std::vector<Violation> violations = ValidateDocument(doc);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  WriteFile(out, SerializeDocument(Deoptimize(doc, seed)));
}

TagEvalReport RunEvalTags(const std::filesystem::path& pred,
                          const std::filesystem::path& gold,
                          const std::filesystem::path& out_dir) {
  TagList p = TagListFromJson(ParseJsonText(ReadFile(pred)));
  TagList g = TagListFromJson(ParseJsonText(ReadFile(gold)));
  TagEvalReport report = Prf1Scores(p, g);
  std::filesystem::create_directories(out_dir);
  WriteFile(out_dir / "tag_eval.json", Dump(TagEvalToJson(report)));
  WriteFile(out_dir / "tag_eval.md", TagEvalToMarkdown(report));
  return report;
}

}  // namespace ldmf
