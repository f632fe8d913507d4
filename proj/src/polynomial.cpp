#include "pseudoflat/polynomial.hpp"

#include <stdexcept>

namespace pseudoflat {

void require_same_dim(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Exponents(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::out_of_range("variable axis out of range");
  Exponents e(dim, 0);
  e[axis] = 1;
  return monomial(dim, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t dim, Exponents exps, const Rational& c) {
  if (exps.size() != dim) throw std::invalid_argument("monomial exponent length mismatch");
  Polynomial p(dim);
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grlex keeps the highest total degree last
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(dim_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != dim_) throw std::invalid_argument("term exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a, b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a, b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a, b);
  Polynomial r(a.dim());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

Polynomial Polynomial::partial(std::size_t axis) const {
  if (axis >= dim_) throw std::out_of_range("partial derivative axis out of range");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    d[axis] -= 1;
    r.add_term(d, c * Rational(static_cast<std::int64_t>(e[axis])));
  }
  return r;
}

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector field needs at least one component");
  for (const auto& p : components_)
    if (p.dim() != components_.size())
      throw std::invalid_argument("vector field component dimension mismatch");
}

VectorField VectorField::zero(std::size_t dim) {
  return VectorField(std::vector<Polynomial>(dim, Polynomial(dim)));
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::out_of_range("coordinate field axis out of range");
  std::vector<Polynomial> comps(dim, Polynomial(dim));
  comps[axis] = Polynomial::constant(dim, Rational(1));
  return VectorField(std::move(comps));
}

Polynomial VectorField::apply(const Polynomial& f) const {
  if (f.dim() != dim()) throw std::invalid_argument("vector field / function dimension mismatch");
  Polynomial r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r += components_[i] * f.partial(i);
  return r;
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(dim());
  for (const auto& p : components_) comps.push_back(-p);
  return VectorField(std::move(comps));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector field dimension mismatch");
  std::vector<Polynomial> comps;
  comps.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) comps.push_back(a.components_[i] + b.components_[i]);
  return VectorField(std::move(comps));
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField VectorField::scaled(const Polynomial& f) const {
  std::vector<Polynomial> comps;
  comps.reserve(dim());
  for (const auto& p : components_) comps.push_back(p * f);
  return VectorField(std::move(comps));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("lie bracket dimension mismatch");
  const std::size_t n = x.dim();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial c(n);
    for (std::size_t i = 0; i < n; ++i)
      c += x.component(i) * y.component(j).partial(i) - y.component(i) * x.component(j).partial(i);
    comps.push_back(std::move(c));
  }
  return VectorField(std::move(comps));
}

}  // namespace pseudoflat
