// Text rendering for the shared expression syntax. Everything printed here
// re-parses to an equal value.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "pseudoflat/operator.hpp"

namespace pseudoflat {

// x, y, z for small charts, x1..xn beyond that.
std::vector<std::string> default_var_names(std::size_t dim);

std::string to_string(const Rational& c);
std::string to_string(const Polynomial& p, std::span<const std::string> vars);
std::string to_string(const ScalarForm& f, std::span<const std::string> vars);
// Rendered as a component vector: [dx^dy, 0].
std::string to_string(const BundleForm& t, std::span<const std::string> vars);
std::string to_string(const BundleHom& h, std::span<const std::string> vars);
std::string to_string(const VectorField& x, std::span<const std::string> vars);

}  // namespace pseudoflat
