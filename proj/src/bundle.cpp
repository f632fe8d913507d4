#include "pseudoflat/bundle.hpp"

#include <stdexcept>

namespace pseudoflat {

BundleHom::BundleHom(std::size_t rows, std::size_t cols, std::size_t dim)
    : rows_(rows), cols_(cols), dim_(dim) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("bundle hom with zero rank");
  entries_.assign(rows_, std::vector<Polynomial>(cols_, Polynomial(dim_)));
}

BundleHom::BundleHom(std::vector<std::vector<Polynomial>> entries) : entries_(std::move(entries)) {
  rows_ = entries_.size();
  if (rows_ == 0 || entries_[0].empty()) throw std::invalid_argument("bundle hom with zero rank");
  cols_ = entries_[0].size();
  dim_ = entries_[0][0].dim();
  for (const auto& row : entries_) {
    if (row.size() != cols_) throw std::invalid_argument("ragged bundle hom matrix");
    for (const auto& p : row)
      if (p.dim() != dim_) throw std::invalid_argument("bundle hom entry dimension mismatch");
  }
}

BundleHom BundleHom::identity(std::size_t rank, std::size_t dim) {
  BundleHom h(rank, rank, dim);
  for (std::size_t i = 0; i < rank; ++i)
    h.entries_[i][i] = Polynomial::constant(dim, Rational(1));
  return h;
}

BundleHom BundleHom::zero(std::size_t rows, std::size_t cols, std::size_t dim) {
  return BundleHom(rows, cols, dim);
}

BundleHom BundleHom::constant(std::size_t dim, const std::vector<std::vector<Rational>>& entries) {
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(entries.size());
  for (const auto& r : entries) {
    std::vector<Polynomial> row;
    row.reserve(r.size());
    for (const auto& c : r) row.push_back(Polynomial::constant(dim, c));
    rows.push_back(std::move(row));
  }
  return BundleHom(std::move(rows));
}

bool BundleHom::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

const Polynomial& BundleHom::entry(std::size_t row, std::size_t col) const {
  return entries_.at(row).at(col);
}

void BundleHom::set_entry(std::size_t row, std::size_t col, Polynomial p) {
  if (p.dim() != dim_) throw std::invalid_argument("bundle hom entry dimension mismatch");
  entries_.at(row).at(col) = std::move(p);
}

BundleForm BundleHom::apply(const BundleForm& t) const {
  if (t.rank() != cols_) throw std::invalid_argument("bundle hom applied to wrong rank");
  if (t.dim() != dim_) throw std::invalid_argument("bundle hom dimension mismatch");
  std::vector<ScalarForm> comps;
  comps.reserve(rows_);
  for (std::size_t j = 0; j < rows_; ++j) {
    ScalarForm acc(dim_, t.degree());
    for (std::size_t i = 0; i < cols_; ++i) acc += t.component(i).scaled(entries_[j][i]);
    comps.push_back(std::move(acc));
  }
  return BundleForm(std::move(comps));
}

static void require_same_shape(const BundleHom& a, const BundleHom& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.dim() != b.dim())
    throw std::invalid_argument("bundle hom shape mismatch");
}

BundleHom operator+(const BundleHom& a, const BundleHom& b) {
  require_same_shape(a, b);
  BundleHom r = a;
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i)
      r.entries_[j][i] = a.entries_[j][i] + b.entries_[j][i];
  return r;
}

BundleHom operator-(const BundleHom& a, const BundleHom& b) { return a + (-b); }

BundleHom BundleHom::operator-() const {
  BundleHom r = *this;
  for (auto& row : r.entries_)
    for (auto& p : row) p = -p;
  return r;
}

BundleHom operator*(const BundleHom& a, const BundleHom& b) {
  if (a.cols() != b.rows() || a.dim() != b.dim())
    throw std::invalid_argument("bundle hom composition shape mismatch");
  BundleHom r(a.rows(), b.cols(), a.dim());
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = 0; i < b.cols(); ++i) {
      Polynomial acc(a.dim());
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.entries_[j][k] * b.entries_[k][i];
      r.entries_[j][i] = std::move(acc);
    }
  return r;
}

BundleForm::BundleForm(std::size_t rank, std::size_t degree, std::size_t dim)
    : degree_(degree), dim_(dim), components_(rank, ScalarForm(dim, degree)) {
  if (rank == 0) throw std::invalid_argument("bundle form with zero rank");
}

BundleForm::BundleForm(std::vector<ScalarForm> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("bundle form with zero rank");
  degree_ = components_[0].degree();
  dim_ = components_[0].dim();
  for (const auto& c : components_)
    if (c.degree() != degree_ || c.dim() != dim_)
      throw std::invalid_argument("bundle form components must share degree and dimension");
}

BundleForm BundleForm::basis_section(std::size_t rank, std::size_t dim, std::size_t index) {
  if (index >= rank) throw std::out_of_range("frame section index out of range");
  BundleForm s(rank, 0, dim);
  s.components_[index] = ScalarForm::from_polynomial(Polynomial::constant(dim, Rational(1)));
  return s;
}

BundleForm BundleForm::generator(const ScalarForm& omega, std::size_t rank, std::size_t index) {
  if (index >= rank) throw std::out_of_range("frame section index out of range");
  BundleForm t(rank, omega.degree(), omega.dim());
  t.components_[index] = omega;
  return t;
}

bool BundleForm::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

BundleForm BundleForm::operator-() const {
  std::vector<ScalarForm> comps;
  comps.reserve(rank());
  for (const auto& c : components_) comps.push_back(-c);
  return BundleForm(std::move(comps));
}

static void require_same_shape(const BundleForm& a, const BundleForm& b) {
  if (a.rank() != b.rank() || a.degree() != b.degree() || a.dim() != b.dim())
    throw std::invalid_argument("bundle form shape mismatch");
}

BundleForm operator+(const BundleForm& a, const BundleForm& b) {
  require_same_shape(a, b);
  std::vector<ScalarForm> comps;
  comps.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) comps.push_back(a.components_[i] + b.components_[i]);
  return BundleForm(std::move(comps));
}

BundleForm operator-(const BundleForm& a, const BundleForm& b) { return a + (-b); }

BundleForm BundleForm::scaled(const Polynomial& f) const {
  std::vector<ScalarForm> comps;
  comps.reserve(rank());
  for (const auto& c : components_) comps.push_back(c.scaled(f));
  return BundleForm(std::move(comps));
}

BundleForm BundleForm::scaled(const Rational& c) const {
  return scaled(Polynomial::constant(dim_, c));
}

BundleForm BundleForm::evaluate(std::span<const VectorField> fields) const {
  std::vector<ScalarForm> comps;
  comps.reserve(rank());
  for (const auto& c : components_)
    comps.push_back(ScalarForm::from_polynomial(c.evaluate(fields)));
  return BundleForm(std::move(comps));
}

BundleForm scalar_wedge(const ScalarForm& omega, const BundleForm& t) {
  if (omega.dim() != t.dim()) throw std::invalid_argument("scalar wedge dimension mismatch");
  std::vector<ScalarForm> comps;
  comps.reserve(t.rank());
  for (const auto& c : t.components()) comps.push_back(wedge(omega, c));
  return BundleForm(std::move(comps));
}

BundleForm wedge_alpha(const ScalarForm& beta, const BundleHom& alpha, const BundleForm& t) {
  if (alpha.cols() != t.rank()) throw std::invalid_argument("twisted wedge shape mismatch");
  if (beta.dim() != t.dim() || alpha.dim() != t.dim())
    throw std::invalid_argument("twisted wedge dimension mismatch");
  std::vector<ScalarForm> comps;
  comps.reserve(alpha.rows());
  for (std::size_t j = 0; j < alpha.rows(); ++j) {
    ScalarForm acc(t.dim(), beta.degree() + t.degree());
    for (std::size_t i = 0; i < t.rank(); ++i)
      acc += wedge(beta, t.component(i)).scaled(alpha.entry(j, i));
    comps.push_back(std::move(acc));
  }
  return BundleForm(std::move(comps));
}

}  // namespace pseudoflat
