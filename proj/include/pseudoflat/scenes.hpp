// Built-in example scenes, embedded so the CLI can run them by name.

#pragma once

#include <string>
#include <vector>

namespace pseudoflat {

struct BuiltinScene {
  std::string name;
  std::string description;
  std::string text;
};

const std::vector<BuiltinScene>& builtin_scenes();
const BuiltinScene* find_builtin_scene(const std::string& name);

}  // namespace pseudoflat
