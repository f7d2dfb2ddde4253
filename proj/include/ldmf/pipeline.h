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

// End-to-end commands as library calls: convert a design to code, score
// emitted instructions against a design, evaluate tag predictions, and run
// whole corpora through the pipeline.

#ifndef LDMF_PIPELINE_H_
#define LDMF_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ldmf/codegen.h"
#include "ldmf/componentizer.h"
#include "ldmf/corpus.h"
#include "ldmf/design_ir.h"
#include "ldmf/evaluator.h"
#include "ldmf/json_io.h"
#include "ldmf/optimizer.h"
#include "ldmf/tags.h"

namespace ldmf {

struct ConvertOptions {
  bool tag_names = true;
  bool components = true;
  RepeatOptions repeat;
};

struct ConvertResult {
  // Findings on the input, before optimization.
  std::vector<Finding> findings;
  DesignDocument optimized;
  TagMap tags;
  std::vector<ComponentDef> defs;
  InstructionProgram program;
  EmittedSources sources;  // index.html, style.css, instructions.json
};

// Thrown for documents that parse but break a type invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// validate -> optimize -> tag -> componentize -> lower -> emit. Throws
// ValidationError when the input is invalid.
ConvertResult ConvertDocument(const DesignDocument& doc,
                              const ConvertOptions& options = {});

Json FindingsToJson(const std::vector<Finding>& findings);

// Tags of the nodes that exist in `input`, in its preorder.
TagList InputTags(const DesignDocument& input, const TagMap& tags);

// Scores each screen of `program` against the same-id screen of `design`.
// Original nodes are the design's non-synthesized nodes. Throws
// Error{kEmptyScreen} for a design without screens and Error{kIdMismatch}
// when screen ids differ or a rendered original node is absent from the
// design.
PmsReport ScoreProgram(const DesignDocument& design,
                       const InstructionProgram& program,
                       double threshold = kDefaultThreshold,
                       Viewport viewport = {});
// Same result; screens scored on one thread.
PmsReport ScoreProgramSerial(const DesignDocument& design,
                             const InstructionProgram& program,
                             double threshold = kDefaultThreshold,
                             Viewport viewport = {});

// Per-design outcome of a corpus run.
struct DesignRun {
  std::vector<ScreenScore> screens;
  TagList predicted;  // input nodes only
  std::size_t component_defs = 0;
  std::size_t instantiates = 0;
  // Flow containers that ended up with absolute children.
  std::size_t absolute_fallbacks = 0;
};

// Convert, serialize the instructions to JSON and back, then score against
// the input. Designs are processed in parallel and returned in input order.
std::vector<DesignRun> RunCorpus(const std::vector<DesignDocument>& designs,
                                 const ConvertOptions& options = {},
                                 double threshold = kDefaultThreshold,
                                 Viewport viewport = {});
std::vector<DesignRun> RunCorpusSerial(
    const std::vector<DesignDocument>& designs,
    const ConvertOptions& options = {}, double threshold = kDefaultThreshold,
    Viewport viewport = {});

// File helpers. Reads throw Error{kInvalidArgument} for unreadable paths.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& bytes);

// Command bodies used by the CLI. Each returns normally on success and
// throws ldmf::Error on validation or input errors.
void RunConvert(const std::filesystem::path& in,
                const std::filesystem::path& out_dir,
                const ConvertOptions& options,
                const std::filesystem::path& tags_out = {});
PmsReport RunScore(const std::filesystem::path& design,
                   const std::filesystem::path& instructions,
                   double threshold, Viewport viewport,
                   const std::filesystem::path& out_dir);
// Writes <out>/manifest.json and, per design, <name>/design.json,
// deopt.json, gold_tags.json and gold_tags_deopt.json.
void RunGenCorpus(const CorpusSpec& spec, const std::filesystem::path& out_dir);
void RunDeopt(const std::filesystem::path& in, std::uint64_t seed,
              const std::filesystem::path& out);
TagEvalReport RunEvalTags(const std::filesystem::path& pred,
                          const std::filesystem::path& gold,
                          const std::filesystem::path& out_dir);

}  // namespace ldmf

#endif  // LDMF_PIPELINE_H_
