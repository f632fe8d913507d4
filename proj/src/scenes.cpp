#include "pseudoflat/scenes.hpp"

namespace pseudoflat {

namespace {

const char* kOrdinaryFlat = R"(# Ordinary flat connection: identity principal homomorphism, zero
# connection forms. Strongly and weakly flat; every curvature map vanishes.
vars x y z
rank 2
P = [[1, 0], [0, 1]]
A = [[0, 0], [0, 0]]
section s1 = e1
field X = d/dx
)";

const char* kOrdinaryXdy = R"(# Ordinary connection with a single nonzero connection form A = x dy on a
# rank-1 bundle. Its curvature is dx^dy, so it is neither strongly nor
# weakly flat, and the triple composition of the exterior derivative has
# degree-0 witnesses such as z*e1.
vars x y z
rank 1
P = [[1]]
A = [[x*dy]]
section s1 = e1
field X = d/dx
field Y = d/dy
)";

const char* kProp5 = R"(# Zero principal homomorphism with A = dx*I + dy*N + dz*N', where N and N'
# are the noncommuting nilpotent 2x2 shifts. The curvature form F vanishes
# identically, yet the operator is not weakly flat: the triple composition
# of its exterior derivative is nonzero on frame sections.
vars x y z
rank 2
P = [[0, 0], [0, 0]]
A = [[dx, dy], [dz, dx]]
section s1 = e1
section s2 = e2
field X = d/dx
field Y = d/dy
)";

}  // namespace

const std::vector<BuiltinScene>& builtin_scenes() {
  static const std::vector<BuiltinScene> scenes = {
      {"ordinary_flat", "identity principal part, zero connection forms (flat)", kOrdinaryFlat},
      {"ordinary_xdy", "rank-1 ordinary connection with A = [x*dy] (curved)", kOrdinaryXdy},
      {"prop5_counterexample",
       "zero principal part with noncommuting nilpotent pair: F = 0 but d∘d∘d ≠ 0", kProp5},
  };
  return scenes;
}

const BuiltinScene* find_builtin_scene(const std::string& name) {
  for (const auto& s : builtin_scenes())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace pseudoflat
