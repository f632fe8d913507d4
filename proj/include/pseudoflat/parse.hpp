// Recursive-descent parser for the shared expression syntax and the
// line-oriented scene format.
//
//   vars x y z
//   rank 2            (or: rank <target> <source> for non-square operators)
//   P = [[1, 0], [0, 1]]
//   A = [[x*dy, 0], [dz, dx]]
//   section s1 = x*e1 + e2
//   field V = d/dx + y*d/dy
//
// '#' starts a comment. In expressions, '^' before an integer is a power and
// before a basis form is a wedge; 'd' immediately prefixing a declared
// variable names the corresponding basis 1-form.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoflat/operator.hpp"

namespace pseudoflat {

struct SourcePos {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message, std::string token = {})
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                           ": error: " + message + (token.empty() ? "" : " (near '" + token + "')")),
        pos(pos),
        token(std::move(token)) {}

  SourcePos pos;
  std::string token;
};

struct Scene {
  std::string name;
  std::vector<std::string> variables;
  std::size_t target_rank = 0;
  std::size_t source_rank = 0;
  BundleHom principal = BundleHom(1, 1, 1);
  std::vector<std::vector<ScalarForm>> connection_forms;
  std::map<std::string, BundleForm> sections;
  std::map<std::string, VectorField> fields;

  std::size_t dim() const { return variables.size(); }
  bool is_square() const { return target_rank == source_rank; }
  ODerivOperator make_operator() const { return ODerivOperator(principal, connection_forms); }
};

Scene parse_scene(std::string_view text, std::string name = {});

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars);

// expected_degree pins the degree of an all-zero result (and is checked
// against nonzero results).
ScalarForm parse_form(std::string_view text, std::span<const std::string> vars,
                      std::optional<std::size_t> expected_degree = std::nullopt);

VectorField parse_field(std::string_view text, std::span<const std::string> vars,
                        const Scene* scene = nullptr);

// Accepts either a frame combination (x*e1 + e2) or a component vector
// ([x, 1]); named sections resolve against the scene when given.
BundleForm parse_section(std::string_view text, std::span<const std::string> vars,
                         std::size_t rank, const Scene* scene = nullptr);

// Component-vector syntax for a bundle form of any degree: [dx^dy, 0].
BundleForm parse_bundle_form(std::string_view text, std::span<const std::string> vars,
                             std::size_t rank, std::size_t degree);

}  // namespace pseudoflat
