// Scalar-valued differential k-forms on a coordinate chart with polynomial
// coefficients. Terms are kept on strictly increasing index tuples; the sign
// bookkeeping happens once, at insertion.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pseudoflat/polynomial.hpp"

namespace pseudoflat {

using IndexTuple = std::vector<std::uint32_t>;

// Sorts a tuple of basis indices into strictly increasing order.
// Returns the permutation sign, or nullopt when an index repeats.
std::optional<int> canonicalize_indices(IndexTuple& indices);

class ScalarForm {
 public:
  using TermMap = std::map<IndexTuple, Polynomial>;

  // The zero k-form.
  ScalarForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static ScalarForm from_polynomial(const Polynomial& p);
  static ScalarForm basis(std::size_t dim, std::size_t axis);  // dx_axis
  static ScalarForm term(std::size_t dim, IndexTuple indices, const Polynomial& coeff);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Polynomial coefficient(const IndexTuple& indices) const;

  // Only valid for 0-forms.
  Polynomial as_polynomial() const;

  // Indices may arrive unsorted; repeated indices drop the term.
  void add_term(IndexTuple indices, const Polynomial& coeff);

  ScalarForm operator-() const;
  friend ScalarForm operator+(const ScalarForm& a, const ScalarForm& b);
  friend ScalarForm operator-(const ScalarForm& a, const ScalarForm& b);
  ScalarForm& operator+=(const ScalarForm& o) { return *this = *this + o; }
  ScalarForm& operator-=(const ScalarForm& o) { return *this = *this - o; }

  // Module action of the function ring.
  ScalarForm scaled(const Polynomial& f) const;
  ScalarForm scaled(const Rational& c) const;

  ScalarForm d() const;

  // Contraction with exactly degree() vector fields; the basis convention is
  // (dx_{i1} ^ ... ^ dx_{ik})(X_1,...,X_k) = det[ X_l^{i_m} ] with no 1/k!.
  Polynomial evaluate(std::span<const VectorField> fields) const;

  friend bool operator==(const ScalarForm& a, const ScalarForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ScalarForm& a, const ScalarForm& b) { return !(a == b); }

 private:
  std::size_t dim_;
  std::size_t degree_;
  TermMap terms_;
};

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);

}  // namespace pseudoflat
