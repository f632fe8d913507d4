// pseudoflat: flatness and curvature analysis of pseudoconnections given as
// scene files.
//
//   pseudoflat check <scene> [--trials N --seed S --max-degree D --format text|json]
//   pseudoflat curvature <scene> --X <field> --Y <field> --section <expr>
//   pseudoflat examples [--show <name>]
//
// <scene> is a path or the name of a built-in scene.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pseudoflat/report.hpp"
#include "pseudoflat/scenes.hpp"

namespace {

using namespace pseudoflat;

Scene load_scene(const std::string& ref) {
  std::ifstream in(ref);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = ref;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
      name = name.substr(slash + 1);
    if (auto dot = name.rfind(".scene"); dot != std::string::npos) name = name.substr(0, dot);
    return parse_scene(buf.str(), name);
  }
  if (const BuiltinScene* builtin = find_builtin_scene(ref))
    return parse_scene(builtin->text, builtin->name);
  throw std::runtime_error("cannot open scene file or built-in scene '" + ref + "'");
}

int run_check(const std::string& scene_ref, const VerifyParams& params,
              const std::string& format) {
  Scene scene = load_scene(scene_ref);
  SceneReport report = analyze_scene(scene, params);
  std::cout << (format == "json" ? emit_json(report) : emit_text(report));
  return report.all_passed() ? 0 : 1;
}

int run_curvature(const std::string& scene_ref, const std::string& x_text,
                  const std::string& y_text, const std::string& section_text,
                  const std::string& format) {
  Scene scene = load_scene(scene_ref);
  SceneReport report;
  report.scene_name = scene.name;
  report.variables = scene.variables;
  report.target_rank = scene.target_rank;
  report.source_rank = scene.source_rank;
  report.curvature = evaluate_curvature(scene, x_text, y_text, section_text);
  std::cout << (format == "json" ? emit_json(report) : emit_text(report));
  return report.curvature->equal ? 0 : 1;
}

int run_examples(const std::string& show) {
  if (!show.empty()) {
    const BuiltinScene* builtin = find_builtin_scene(show);
    if (!builtin) {
      std::cerr << "unknown built-in scene '" << show << "'\n";
      return 2;
    }
    std::cout << builtin->text;
    return 0;
  }
  for (const auto& s : builtin_scenes())
    std::cout << s.name << "\n    " << s.description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact flatness and curvature analysis of pseudoconnections"};
  app.require_subcommand(1);

  std::string scene_ref, format = "text";
  VerifyParams params;
  long seed_value = static_cast<long>(params.seed);

  CLI::App* check = app.add_subcommand("check", "run the identity sweeps and flatness analysis");
  check->add_option("scene", scene_ref, "scene file or built-in name")->required();
  check->add_option("--trials", params.trials, "trials per check")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed_value, "randomization seed");
  check->add_option("--max-degree", params.max_degree, "coefficient degree bound")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bool serial = false;
  check->add_flag("--no-parallel", serial, "run trials serially");

  CLI::App* curvature =
      app.add_subcommand("curvature", "evaluate F_{X,Y}(s) through both computation paths");
  std::string x_text, y_text, section_text;
  curvature->add_option("scene", scene_ref, "scene file or built-in name")->required();
  curvature->add_option("--X", x_text, "first vector field expression")->required();
  curvature->add_option("--Y", y_text, "second vector field expression")->required();
  curvature->add_option("--section", section_text, "section expression")->required();
  curvature->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* examples = app.add_subcommand("examples", "list built-in scenes");
  std::string show;
  examples->add_option("--show", show, "print the text of a built-in scene");

  CLI11_PARSE(app, argc, argv);

  params.seed = static_cast<std::uint64_t>(seed_value);
  params.parallel = !serial;

  try {
    if (check->parsed()) return run_check(scene_ref, params, format);
    if (curvature->parsed()) return run_curvature(scene_ref, x_text, y_text, section_text, format);
    return run_examples(show);
  } catch (const ParseError& e) {
    std::cerr << (scene_ref.empty() ? "input" : scene_ref) << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
