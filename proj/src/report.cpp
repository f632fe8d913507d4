#include "pseudoflat/report.hpp"

#include <sstream>

#include <json.hpp>

#include "pseudoflat/print.hpp"

namespace pseudoflat {

bool SceneReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  if (curvature && !curvature->equal) return false;
  return true;
}

SceneReport analyze_scene(const Scene& scene, const VerifyParams& params) {
  SceneReport report;
  report.scene_name = scene.name;
  report.variables = scene.variables;
  report.target_rank = scene.target_rank;
  report.source_rank = scene.source_rank;
  report.seed = params.seed;
  report.trials = params.trials;
  report.max_degree = params.max_degree;

  const ODerivOperator op = scene.make_operator();

  std::vector<Check> checks = foundation_checks(scene.dim());
  std::vector<Check> op_checks = operator_checks(op);
  checks.insert(checks.end(), op_checks.begin(), op_checks.end());
  report.checks = run_checks(checks, params);

  if (op.is_square()) {
    report.flatness = op.classify_flatness();
    report.chain = chain_check_direct(op, params.max_degree, params.trials,
                                      trial_seed(params.seed, 0xc4a1a, 0));
  }
  return report;
}

CurvatureReport evaluate_curvature(const Scene& scene, const std::string& x_text,
                                   const std::string& y_text, const std::string& section_text) {
  const ODerivOperator op = scene.make_operator();
  const auto& vars = scene.variables;
  VectorField x = parse_field(x_text, vars, &scene);
  VectorField y = parse_field(y_text, vars, &scene);
  BundleForm s = parse_section(section_text, vars, scene.source_rank, &scene);
  BundleForm direct = op.curvature_direct(x, y, s);
  BundleForm formula = op.curvature_formula(x, y, s);
  CurvatureReport r;
  r.x_text = x_text;
  r.y_text = y_text;
  r.section_text = section_text;
  r.direct = to_string(direct, vars);
  r.formula = to_string(formula, vars);
  r.equal = direct == formula;
  return r;
}

namespace {

std::string frame_map_text(const std::vector<BundleForm>& frame,
                           const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i > 0) out += "; ";
    out += "e" + std::to_string(i + 1) + " -> " + to_string(frame[i], vars);
  }
  return out;
}

}  // namespace

std::string emit_text(const SceneReport& report) {
  std::ostringstream out;
  out << "scene: " << (report.scene_name.empty() ? "<inline>" : report.scene_name) << "\n";
  out << "chart variables:";
  for (const auto& v : report.variables) out << " " << v;
  out << "\nrank: " << report.target_rank;
  if (report.target_rank != report.source_rank) out << " x " << report.source_rank;
  out << "\n";
  if (report.trials > 0)
    out << "seed: " << report.seed << "  trials: " << report.trials
        << "  max coefficient degree: " << report.max_degree << "\n";

  if (report.flatness) {
    const auto& fl = *report.flatness;
    out << "\nframe maps:\n";
    out << "  E: " << frame_map_text(fl.E_frame, report.variables) << "\n";
    out << "  L: " << frame_map_text(fl.L_frame, report.variables) << "\n";
    out << "  F: " << frame_map_text(fl.F_frame, report.variables) << "\n";
    out << "  G: " << frame_map_text(fl.G_frame, report.variables) << "\n";
    out << "flatness: strongly flat: " << (fl.strongly_flat ? "YES" : "NO")
        << "; weakly flat: " << (fl.weakly_flat ? "YES" : "NO") << "\n";
  }
  if (report.chain) {
    const auto& ch = *report.chain;
    out << "chain composition over " << ch.inputs_checked << " inputs:\n";
    out << "  d∘d " << (ch.d2_zero ? "= 0" : "≠ 0") << "\n";
    if (ch.d2_witness)
      out << "    witness: input " << to_string(ch.d2_witness->input, report.variables)
          << " -> " << to_string(ch.d2_witness->output, report.variables) << "\n";
    out << "  d∘d∘d " << (ch.d3_zero ? "= 0" : "≠ 0") << "\n";
    if (ch.d3_witness)
      out << "    witness: input " << to_string(ch.d3_witness->input, report.variables)
          << " -> " << to_string(ch.d3_witness->output, report.variables) << "\n";
  }
  if (report.curvature) {
    const auto& cv = *report.curvature;
    out << "\ncurvature F_{X,Y}(s) with X = " << cv.x_text << ", Y = " << cv.y_text
        << ", s = " << cv.section_text << "\n";
    out << "  evaluation of F:      " << cv.direct << "\n";
    out << "  covariant-derivative: " << cv.formula << "\n";
    out << "  agreement: " << (cv.equal ? "YES" : "NO  <-- MISMATCH") << "\n";
  }

  if (!report.checks.empty()) {
    out << "\nchecks:\n";
    for (const auto& c : report.checks) {
      out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " (" << c.trials
          << " trials)";
      if (!c.passed) out << "\n    trial " << c.failed_trial << ": " << c.witness;
      out << "\n";
    }
    out << (report.all_passed() ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
  }
  return out.str();
}

std::string emit_json(const SceneReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = 1;
  j["scene"] = report.scene_name;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["max_degree"] = report.max_degree;
  j["variables"] = report.variables;
  j["rank"] = {report.target_rank, report.source_rank};

  if (report.flatness) {
    const auto& fl = *report.flatness;
    j["flatness"] = {{"strongly_flat", fl.strongly_flat}, {"weakly_flat", fl.weakly_flat}};
    json maps;
    auto frame_json = [&](const std::vector<BundleForm>& frame) {
      json arr = json::array();
      for (const auto& b : frame) arr.push_back(to_string(b, report.variables));
      return arr;
    };
    maps["E"] = frame_json(fl.E_frame);
    maps["L"] = frame_json(fl.L_frame);
    maps["F"] = frame_json(fl.F_frame);
    maps["G"] = frame_json(fl.G_frame);
    j["frame_maps"] = maps;
  } else {
    j["flatness"] = nullptr;
    j["frame_maps"] = nullptr;
  }

  if (report.chain) {
    const auto& ch = *report.chain;
    json chain;
    chain["inputs_checked"] = ch.inputs_checked;
    chain["d2_zero"] = ch.d2_zero;
    chain["d2_witness"] = nullptr;
    if (ch.d2_witness)
      chain["d2_witness"] = {{"input", to_string(ch.d2_witness->input, report.variables)},
                             {"output", to_string(ch.d2_witness->output, report.variables)}};
    chain["d3_zero"] = ch.d3_zero;
    chain["d3_witness"] = nullptr;
    if (ch.d3_witness)
      chain["d3_witness"] = {{"input", to_string(ch.d3_witness->input, report.variables)},
                             {"output", to_string(ch.d3_witness->output, report.variables)}};
    j["chain"] = chain;
  } else {
    j["chain"] = nullptr;
  }

  json checks = json::array();
  json witnesses = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"trials", c.trials}});
    if (!c.passed)
      witnesses.push_back(
          {{"check", c.name}, {"trial", c.failed_trial}, {"witness", c.witness}});
  }
  j["checks"] = checks;
  j["witnesses"] = witnesses;

  if (report.curvature) {
    const auto& cv = *report.curvature;
    j["curvature"] = {{"X", cv.x_text},     {"Y", cv.y_text},        {"section", cv.section_text},
                      {"direct", cv.direct}, {"formula", cv.formula}, {"equal", cv.equal}};
  } else {
    j["curvature"] = nullptr;
  }
  j["all_passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

}  // namespace pseudoflat
