// Sparse multivariate polynomials over exact rationals, plus polynomial
// vector fields and their Lie bracket. Polynomials model the function ring
// of an n-dimensional coordinate chart.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pseudoflat/rational.hpp"

namespace pseudoflat {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Canonical sparse form: no zero coefficients are ever stored, so structural
// equality of the term maps is polynomial equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t axis);
  static Polynomial monomial(std::size_t dim, Exponents exps, const Rational& c);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Degree of the zero polynomial is reported as -1.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational constant_term() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Rational& c) const;
  Polynomial partial(std::size_t axis) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::size_t dim_;
  TermMap terms_;
};

void require_same_dim(const Polynomial& a, const Polynomial& b);

// A polynomial vector field: n coefficient polynomials of the coordinate
// derivations on an n-dimensional chart.
class VectorField {
 public:
  explicit VectorField(std::vector<Polynomial> components);

  static VectorField zero(std::size_t dim);
  static VectorField coordinate(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return components_.size(); }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  const std::vector<Polynomial>& components() const { return components_; }

  // Directional derivative X(f) = sum_i X^i d_i f.
  Polynomial apply(const Polynomial& f) const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  VectorField scaled(const Polynomial& f) const;

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.components_ == b.components_;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

 private:
  std::vector<Polynomial> components_;
};

// [X,Y]^j = sum_i (X^i d_i Y^j - Y^i d_i X^j).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

}  // namespace pseudoflat
