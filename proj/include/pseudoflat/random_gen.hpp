// Deterministic random instances for the verification sweeps. Coefficients
// stay small (numerators in [-3,3], degree <= 2 by default) so compositions
// never blow up the exact arithmetic.

#pragma once

#include <cstdint>
#include <random>

#include "pseudoflat/operator.hpp"

namespace pseudoflat {

// Mixes a base seed with stream/index so every trial owns an independent
// generator regardless of execution order.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive bounds
  bool coin();

  Rational small_rational(int max_abs_num = 3);
  Polynomial polynomial(std::size_t dim, int max_degree, int max_terms = 3);
  Polynomial nonzero_polynomial(std::size_t dim, int max_degree, int max_terms = 3);
  VectorField vector_field(std::size_t dim, int max_degree);
  ScalarForm scalar_form(std::size_t dim, std::size_t degree, int max_degree, int max_terms = 2);
  BundleForm bundle_form(std::size_t rank, std::size_t degree, std::size_t dim, int max_degree);
  BundleForm section(std::size_t rank, std::size_t dim, int max_degree);
  BundleHom hom(std::size_t rows, std::size_t cols, std::size_t dim, int max_degree);
  BundleHom constant_hom(std::size_t rank, int max_abs_num = 3);
  std::vector<std::vector<ScalarForm>> one_form_matrix(std::size_t rows, std::size_t cols,
                                                       std::size_t dim, int max_degree);
  ODerivOperator deriv_operator(std::size_t dim, std::size_t source_rank,
                                std::size_t target_rank, int max_degree);
  ODerivOperator pseudoconnection(std::size_t dim, std::size_t rank, int max_degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pseudoflat
