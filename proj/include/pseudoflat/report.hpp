// Scene analysis driver and report rendering (text and JSON, schema 1).

#pragma once

#include <optional>
#include <string>

#include "pseudoflat/parse.hpp"
#include "pseudoflat/verify.hpp"

namespace pseudoflat {

struct CurvatureReport {
  std::string x_text, y_text, section_text;
  std::string direct, formula;
  bool equal = false;
};

struct SceneReport {
  std::string scene_name;
  std::vector<std::string> variables;
  std::size_t target_rank = 0, source_rank = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int max_degree = 0;

  std::optional<FlatnessReport> flatness;  // square operators only
  std::optional<ChainCheckReport> chain;
  std::vector<CheckResult> checks;
  std::optional<CurvatureReport> curvature;

  bool all_passed() const;
};

// Runs the identity sweeps, the flatness classifier and the direct chain
// check against the scene's operator.
SceneReport analyze_scene(const Scene& scene, const VerifyParams& params);

// Evaluates the curvature of the scene's operator on parsed X/Y/section
// expressions through both computation paths.
CurvatureReport evaluate_curvature(const Scene& scene, const std::string& x_text,
                                   const std::string& y_text, const std::string& section_text);

std::string emit_text(const SceneReport& report);
std::string emit_json(const SceneReport& report);

}  // namespace pseudoflat
