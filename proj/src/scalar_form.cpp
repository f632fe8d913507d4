#include "pseudoflat/scalar_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace pseudoflat {

std::optional<int> canonicalize_indices(IndexTuple& indices) {
  // insertion sort, counting inversions
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    std::uint32_t v = indices[i];
    std::size_t j = i;
    while (j > 0 && indices[j - 1] > v) {
      indices[j] = indices[j - 1];
      --j;
      sign = -sign;
    }
    indices[j] = v;
  }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1]) return std::nullopt;
  return sign;
}

ScalarForm ScalarForm::from_polynomial(const Polynomial& p) {
  ScalarForm f(p.dim(), 0);
  f.add_term({}, p);
  return f;
}

ScalarForm ScalarForm::basis(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::out_of_range("basis 1-form axis out of range");
  ScalarForm f(dim, 1);
  f.add_term({static_cast<std::uint32_t>(axis)}, Polynomial::constant(dim, Rational(1)));
  return f;
}

ScalarForm ScalarForm::term(std::size_t dim, IndexTuple indices, const Polynomial& coeff) {
  ScalarForm f(dim, indices.size());
  f.add_term(std::move(indices), coeff);
  return f;
}

Polynomial ScalarForm::coefficient(const IndexTuple& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? Polynomial(dim_) : it->second;
}

Polynomial ScalarForm::as_polynomial() const {
  if (degree_ != 0) throw std::logic_error("as_polynomial on a form of positive degree");
  return terms_.empty() ? Polynomial(dim_) : terms_.begin()->second;
}

void ScalarForm::add_term(IndexTuple indices, const Polynomial& coeff) {
  if (indices.size() != degree_) throw std::invalid_argument("index tuple length != form degree");
  if (coeff.dim() != dim_) throw std::invalid_argument("form coefficient dimension mismatch");
  if (coeff.is_zero()) return;
  for (auto i : indices)
    if (i >= dim_) throw std::out_of_range("form index out of range");
  auto sign = canonicalize_indices(indices);
  if (!sign) return;  // repeated basis index
  Polynomial c = *sign == 1 ? coeff : -coeff;
  auto it = terms_.find(indices);
  if (it == terms_.end()) {
    terms_.emplace(std::move(indices), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarForm ScalarForm::operator-() const {
  ScalarForm r(dim_, degree_);
  for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
  return r;
}

static void require_compatible(const ScalarForm& a, const ScalarForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("form dimension mismatch");
  if (a.degree() != b.degree()) throw std::invalid_argument("form degree mismatch");
}

ScalarForm operator+(const ScalarForm& a, const ScalarForm& b) {
  require_compatible(a, b);
  ScalarForm r = a;
  for (const auto& [idx, c] : b.terms_) {
    auto [it, inserted] = r.terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

ScalarForm operator-(const ScalarForm& a, const ScalarForm& b) { return a + (-b); }

ScalarForm ScalarForm::scaled(const Polynomial& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("form scale dimension mismatch");
  ScalarForm r(dim_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [idx, c] : terms_) {
    Polynomial p = c * f;
    if (!p.is_zero()) r.terms_.emplace(idx, std::move(p));
  }
  return r;
}

ScalarForm ScalarForm::scaled(const Rational& c) const {
  return scaled(Polynomial::constant(dim_, c));
}

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge dimension mismatch");
  ScalarForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  }
  return r;
}

ScalarForm ScalarForm::d() const {
  ScalarForm r(dim_, degree_ + 1);
  for (const auto& [idx, c] : terms_) {
    for (std::uint32_t i = 0; i < dim_; ++i) {
      Polynomial dc = c.partial(i);
      if (dc.is_zero()) continue;
      IndexTuple with = idx;
      with.insert(with.begin(), i);
      r.add_term(std::move(with), dc);
    }
  }
  return r;
}

// Determinant of a small polynomial matrix by Laplace expansion on the first row.
static Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::size_t dim) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(dim, Rational(1));
  if (k == 1) return m[0][0];
  Polynomial det(dim);
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(k - 1);
    for (std::size_t row = 1; row < k; ++row) {
      std::vector<Polynomial> mr;
      mr.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) mr.push_back(m[row][c]);
      minor.push_back(std::move(mr));
    }
    Polynomial cofactor = m[0][col] * poly_det(minor, dim);
    if (col % 2 == 0)
      det += cofactor;
    else
      det -= cofactor;
  }
  return det;
}

Polynomial ScalarForm::evaluate(std::span<const VectorField> fields) const {
  if (fields.size() != degree_)
    throw std::invalid_argument("form evaluation needs exactly degree-many vector fields");
  for (const auto& x : fields)
    if (x.dim() != dim_) throw std::invalid_argument("form evaluation dimension mismatch");
  if (degree_ == 0) return as_polynomial();
  Polynomial r(dim_);
  for (const auto& [idx, c] : terms_) {
    std::vector<std::vector<Polynomial>> m(degree_);
    for (std::size_t l = 0; l < degree_; ++l) {
      m[l].reserve(degree_);
      for (std::size_t j = 0; j < degree_; ++j) m[l].push_back(fields[l].component(idx[j]));
    }
    r += c * poly_det(m, dim_);
  }
  return r;
}

}  // namespace pseudoflat
