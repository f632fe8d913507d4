// Derivative operators on sections of a trivialized bundle: an operator is
// stored by its principal homomorphism P and a matrix A of connection
// 1-forms (the images of the frame sections). The induced exterior
// derivative, the curvature-type maps E/L/F/G, flatness classification,
// direct chain checks and the two curvature evaluation paths live here.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pseudoflat/bundle.hpp"

namespace pseudoflat {

struct FlatnessReport {
  std::vector<BundleForm> E_frame;  // degree 2, per frame section
  std::vector<BundleForm> L_frame;  // degree 1
  std::vector<BundleForm> F_frame;  // degree 2
  std::vector<BundleForm> G_frame;  // degree 3
  bool strongly_flat = false;       // E and L vanish on the frame
  bool weakly_flat = false;         // F and G vanish on the frame
};

struct ChainWitness {
  BundleForm input;
  BundleForm output;
};

struct ChainCheckReport {
  bool d2_zero = true;
  bool d3_zero = true;
  std::optional<ChainWitness> d2_witness;
  std::optional<ChainWitness> d3_witness;
  long inputs_checked = 0;
};

class ODerivOperator {
 public:
  // A must be a rows x cols matrix of 1-forms matching P's shape.
  ODerivOperator(BundleHom principal, std::vector<std::vector<ScalarForm>> connection_forms);

  std::size_t source_rank() const { return principal_.cols(); }
  std::size_t target_rank() const { return principal_.rows(); }
  std::size_t dim() const { return principal_.dim(); }
  bool is_square() const { return source_rank() == target_rank(); }

  const BundleHom& principal() const { return principal_; }
  const ScalarForm& connection_form(std::size_t row, std::size_t col) const {
    return connection_forms_.at(row).at(col);
  }
  const std::vector<std::vector<ScalarForm>>& connection_forms() const {
    return connection_forms_;
  }

  // The operator itself on sections: component j of nabla(s) is
  // sum_i (P_ji * d s_i + s_i * A_ji).
  BundleForm nabla(const BundleForm& section) const;

  // The induced exterior derivative; reduces to nabla on degree 0.
  BundleForm d_nabla(const BundleForm& t) const;

  // The four auxiliary maps of a pseudoconnection (square operators only).
  BundleForm map_E(const BundleForm& section) const;  // d_nabla ∘ nabla
  BundleForm map_L(const BundleForm& section) const;  // P∘nabla − nabla∘P
  BundleForm map_F(const BundleForm& section) const;  // three-term alternating sum
  BundleForm map_G(const BundleForm& section) const;  // d_nabla ∘ d_nabla ∘ nabla

  // Covariant derivative along a field: Ev_X(nabla s).
  BundleForm nabla_X(const VectorField& x, const BundleForm& section) const;

  // Ev_{X,Y}(F(s)).
  BundleForm curvature_direct(const VectorField& x, const VectorField& y,
                              const BundleForm& section) const;
  // The seven-term combination of covariant derivatives; must agree with
  // curvature_direct.
  BundleForm curvature_formula(const VectorField& x, const VectorField& y,
                               const BundleForm& section) const;

  FlatnessReport classify_flatness() const;

 private:
  void require_square(const char* what) const;
  void require_section(const BundleForm& s) const;

  BundleHom principal_;
  std::vector<std::vector<ScalarForm>> connection_forms_;
};

// Both sides of the identity d_nabla²(omega ⊗ s) = omega ∧ E(s) +
// (-1)^k d omega ∧ L(s), computed independently.
struct IdentitySides {
  BundleForm lhs;
  BundleForm rhs;
  bool holds() const { return lhs == rhs; }
};
IdentitySides d2_identity_sides(const ODerivOperator& op, const ScalarForm& omega,
                                const BundleForm& section);
bool d2_identity_check(const ODerivOperator& op, const ScalarForm& omega,
                       const BundleForm& section);

// d_nabla³(omega ⊗ s) = d omega ∧ F(s) + (-1)^k omega ∧ G(s).
IdentitySides d3_identity_sides(const ODerivOperator& op, const ScalarForm& omega,
                                const BundleForm& section);
bool d3_identity_check(const ODerivOperator& op, const ScalarForm& omega,
                       const BundleForm& section);

// Composes d_nabla two and three times over a deterministic spanning family
// (frame sections scaled by 1, x_j, x_j^2, and basis k-forms against them)
// plus `trials` random bundle forms of every degree 0..n with coefficient
// degree <= max_degree. Reports the first nonzero composition found.
ChainCheckReport chain_check_direct(const ODerivOperator& op, int max_degree, int trials,
                                    std::uint64_t seed);

// The standard counterexample: chart dimension 3, rank 2, zero principal
// homomorphism, A = dx·I + dy·N + dz·Nᵀ with N the nilpotent shift. Its
// curvature form F vanishes identically while the triple composition of
// d_nabla does not.
ODerivOperator prop5_counterexample();

// P = 0 and A = dx ⊗ id + dy ⊗ phi2 + dz ⊗ phi3 on a 3-dimensional chart.
ODerivOperator triple_form_operator(const BundleHom& phi2, const BundleHom& phi3);

}  // namespace pseudoflat
