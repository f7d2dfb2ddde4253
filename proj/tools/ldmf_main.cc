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

// Command-line entry point. Exit codes: 0 success, 1 invalid input or
// validation failure, 2 internal error.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ldmf/pipeline.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

// LDMF_SEED, when set, replaces the default seed of every command.
std::uint64_t DefaultSeed() {
  const char* env = std::getenv("LDMF_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ldmf::Error(ldmf::ErrorCode::kInvalidArgument, "LDMF_SEED",
                      "not an unsigned integer");
  }
}

ldmf::Viewport ParseViewport(const std::string& text) {
  auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    ldmf::Viewport v{std::stod(text.substr(0, x)), std::stod(text.substr(x + 1))};
    if (!(v.w > 0) || !(v.h > 0)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw ldmf::Error(ldmf::ErrorCode::kInvalidArgument, "--viewport",
                      "expected WxH, got '" + text + "'");
  }
}

void ParseDepth(const std::string& text, ldmf::CorpusSpec& spec) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      spec.depth_min = spec.depth_max = std::stoi(text);
    } else {
      spec.depth_min = std::stoi(text.substr(0, dots));
      spec.depth_max = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw ldmf::Error(ldmf::ErrorCode::kInvalidArgument, "--depth",
                      "expected N or LO..HI, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design-to-code compiler and fidelity scorer"};
  app.require_subcommand(1);

  std::string in, out, tag_names = "on", tags_out;
  bool no_components = false;
  auto* convert = app.add_subcommand("convert", "Compile a design to HTML/CSS");
  convert->add_option("--in", in, "Design JSON")->required();
  convert->add_option("--out", out, "Output directory")->required();
  convert->add_option("--tag-names", tag_names, "Use layer names when tagging")
      ->check(CLI::IsMember({"on", "off"}));
  convert->add_flag("--no-components", no_components,
                    "Skip component extraction");
  convert->add_option("--tags-out", tags_out,
                      "Also write predicted tags of the input nodes");

  std::string design, instructions, viewport = "1440x900";
  double threshold = ldmf::kDefaultThreshold;
  auto* score = app.add_subcommand("score", "Score instructions against a design");
  score->add_option("--design", design, "Design JSON")->required();
  score->add_option("--instructions", instructions, "instructions.json")
      ->required();
  score->add_option("--threshold", threshold, "Relative tolerance")
      ->check(CLI::Range(0.0, 1.0));
  score->add_option("--viewport", viewport, "WxH");
  score->add_option("--out", out, "Output directory")->required();

  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  std::string depth = "2..7";
  auto* gen = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  gen->add_option("--n", count, "Number of designs")->required();
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--depth", depth, "Nesting depth, N or LO..HI");
  gen->add_option("--out", out, "Output directory")->required();

  auto* deopt = app.add_subcommand("deopt", "Flatten and shuffle a design");
  deopt->add_option("--in", in, "Design JSON")->required();
  deopt->add_option("--seed", seed, "Seed");
  deopt->add_option("--out", out, "Output design JSON")->required();

  std::string pred, gold;
  auto* eval = app.add_subcommand("eval-tags", "Precision/recall/F1 of tags");
  eval->add_option("--pred", pred, "Predicted tags JSON")->required();
  eval->add_option("--gold", gold, "Gold tags JSON")->required();
  eval->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*convert) {
      ldmf::ConvertOptions options;
      options.tag_names = tag_names == "on";
      options.components = !no_components;
      ldmf::RunConvert(in, out, options, tags_out);
    } else if (*score) {
      ldmf::PmsReport report = ldmf::RunScore(design, instructions, threshold,
                                              ParseViewport(viewport), out);
      std::cout << "screens: " << report.summary.count
                << "  mean PMS: " << report.summary.mean_pms
                << "  share > 95: " << report.summary.frac_above95 << "\n";
    } else if (*gen) {
      ldmf::CorpusSpec spec;
      spec.count = count;
      spec.seed = seed.value_or(DefaultSeed());
      ParseDepth(depth, spec);
      ldmf::RunGenCorpus(spec, out);
    } else if (*deopt) {
      ldmf::RunDeopt(in, seed.value_or(DefaultSeed()), out);
    } else if (*eval) {
      ldmf::TagEvalReport report = ldmf::RunEvalTags(pred, gold, out);
      std::cout << "macro F1 small: "
                << (report.macro_small ? std::to_string(*report.macro_small)
                                       : "n/a")
                << "  big: "
                << (report.macro_big ? std::to_string(*report.macro_big) : "n/a")
                << "\n";
    }
  } catch (const ldmf::ValidationError& e) {
    for (const ldmf::Violation& v : e.violations()) {
      std::cerr << v.path << ": " << v.rule << ": " << v.detail << "\n";
    }
    return 1;
  } catch (const ldmf::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
