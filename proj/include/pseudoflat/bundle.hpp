// Bundle-valued forms over a trivialized bundle with a fixed global frame,
// and bundle homomorphisms with their lift to k-forms.

#pragma once

#include <span>
#include <vector>

#include "pseudoflat/scalar_form.hpp"

namespace pseudoflat {

class BundleForm;

// A matrix of polynomials acting on frame components; rows = target rank,
// cols = source rank.
class BundleHom {
 public:
  BundleHom(std::size_t rows, std::size_t cols, std::size_t dim);
  explicit BundleHom(std::vector<std::vector<Polynomial>> entries);

  static BundleHom identity(std::size_t rank, std::size_t dim);
  static BundleHom zero(std::size_t rows, std::size_t cols, std::size_t dim);
  static BundleHom constant(std::size_t dim, const std::vector<std::vector<Rational>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const;

  const Polynomial& entry(std::size_t row, std::size_t col) const;
  void set_entry(std::size_t row, std::size_t col, Polynomial p);

  // Lift to k-forms: componentwise action on the frame coordinates.
  BundleForm apply(const BundleForm& t) const;

  friend BundleHom operator+(const BundleHom& a, const BundleHom& b);
  friend BundleHom operator-(const BundleHom& a, const BundleHom& b);
  BundleHom operator-() const;
  // Composition (matrix product): (a * b)(s) = a(b(s)).
  friend BundleHom operator*(const BundleHom& a, const BundleHom& b);

  friend bool operator==(const BundleHom& a, const BundleHom& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const BundleHom& a, const BundleHom& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_, dim_;
  std::vector<std::vector<Polynomial>> entries_;
};

// A rank-r vector of scalar k-forms: the coordinates of a bundle-valued
// k-form in the fixed frame. Degree 0 is a section.
class BundleForm {
 public:
  BundleForm(std::size_t rank, std::size_t degree, std::size_t dim);
  explicit BundleForm(std::vector<ScalarForm> components);

  static BundleForm basis_section(std::size_t rank, std::size_t dim, std::size_t index);
  // omega ⊗ e_index
  static BundleForm generator(const ScalarForm& omega, std::size_t rank, std::size_t index);

  std::size_t rank() const { return components_.size(); }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const;

  const ScalarForm& component(std::size_t i) const { return components_.at(i); }
  const std::vector<ScalarForm>& components() const { return components_; }

  BundleForm operator-() const;
  friend BundleForm operator+(const BundleForm& a, const BundleForm& b);
  friend BundleForm operator-(const BundleForm& a, const BundleForm& b);
  BundleForm& operator+=(const BundleForm& o) { return *this = *this + o; }
  BundleForm& operator-=(const BundleForm& o) { return *this = *this - o; }

  BundleForm scaled(const Polynomial& f) const;
  BundleForm scaled(const Rational& c) const;

  // Contraction with exactly degree() vector fields, componentwise.
  BundleForm evaluate(std::span<const VectorField> fields) const;

  friend bool operator==(const BundleForm& a, const BundleForm& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.components_ == b.components_;
  }
  friend bool operator!=(const BundleForm& a, const BundleForm& b) { return !(a == b); }

 private:
  std::size_t degree_, dim_;
  std::vector<ScalarForm> components_;
};

// Plain module product omega ∧ T, componentwise.
BundleForm scalar_wedge(const ScalarForm& omega, const BundleForm& t);

// The product twisted by a homomorphism: beta ∧_alpha (omega ⊗ s) =
// (beta ∧ omega) ⊗ alpha(s).
BundleForm wedge_alpha(const ScalarForm& beta, const BundleHom& alpha, const BundleForm& t);

}  // namespace pseudoflat
